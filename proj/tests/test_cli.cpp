#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "communal/alpha.hpp"
#include "communal/cli.hpp"
#include "communal/monoid.hpp"
#include "helpers.hpp"

using communal::testing::sys;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  RunResult r;
  r.code = communal::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("count prints the bare exact count") {
  const RunResult r = run({"count", "--alpha", "1/3,2/5,2/7", "--g", "100"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  CHECK(r.err.empty());
}

TEST_CASE("count handles totals beyond machine integers") {
  const RunResult r =
      run({"count", "--alpha", "1/2,1/2,1/2", "--g", "1000000000000"});
  CHECK(r.code == 0);
  CHECK(r.out == "125000000000750000000001\n");  // (g^2 + 6g + 8)/8
}

TEST_CASE("enumerate prints one composition per line in order") {
  const RunResult r = run({"enumerate", "--alpha", "1/3,2/5,2/7", "--g", "100"});
  CHECK(r.code == 0);
  CHECK(r.out == "32,40,28\n33,39,28\n33,40,27\n");
  CHECK(run({"enumerate", "--alpha", "1/3,2/5,2/7", "--g", "1"}).out.empty());
}

TEST_CASE("generators and base-set print the structural data") {
  const RunResult gens = run({"generators", "--alpha", "1/3,2/5,2/7"});
  CHECK(gens.code == 0);
  CHECK(gens.out == "11,14,10\n7,8,6\n5,6,4\n");

  const RunResult bases = run({"base-set", "--alpha", "1/3,2/5,2/7"});
  CHECK(bases.code == 0);
  CHECK(bases.out ==
        "a=0,0,0 base=0,0,0 weight=0\n"
        "a=0,1,1 base=6,7,5 weight=18\n"
        "a=1,0,1 base=8,10,7 weight=25\n"
        "a=1,1,0 base=9,11,8 weight=28\n");
}

TEST_CASE("genfun prints the rational form and optional series") {
  const RunResult bare = run({"genfun", "--alpha", "1/3,2/5,2/7"});
  CHECK(bare.code == 0);
  CHECK(bare.out == "F(x) = (1 + x^18 + x^25 + x^28) / ((1-x^15)(1-x^21)(1-x^35))\n");

  const RunResult with_series =
      run({"genfun", "--alpha", "1/2,1/3,1/5", "--series-order", "6"});
  CHECK(with_series.code == 0);
  CHECK(with_series.out ==
        "F(x) = 1 / ((1-x^6)(1-x^10)(1-x^15))\n"
        "0 1\n1 0\n2 0\n3 0\n4 0\n5 0\n6 1\n");
}

TEST_CASE("decompose prints residues, base, and coefficients") {
  const RunResult r = run({"decompose", "--alpha", "1/3,2/5,2/7", "--tuple", "33,40,28"});
  CHECK(r.code == 0);
  CHECK(r.out == "a=0,0,0\nbase=0,0,0\ncoeffs=1,1,3\n");
}

TEST_CASE("quasipoly prints one validated polynomial per class") {
  const RunResult r = run({"quasipoly", "--alpha", "1/2,1/2,1/2"});
  CHECK(r.code == 0);
  CHECK(r.out == "r=0 from=0: 1/8 g^2 + 3/4 g + 1\nr=1 from=3: 1/8 g^2 - 1/8\n");

  const RunResult verified =
      run({"quasipoly", "--alpha", "1/2,1/2,1/2", "--verify-points", "4"});
  CHECK(verified.code == 0);
  CHECK(verified.out ==
        "r=0 from=0: 1/8 g^2 + 3/4 g + 1\nr=1 from=3: 1/8 g^2 - 1/8\n"
        "verified 4 extra points per class: ok\n");
}

TEST_CASE("json envelopes carry the command, system constants, and result") {
  const RunResult r = run({"count", "--alpha", "2/6,4/10,4/14", "--g", "100", "--json"});
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "count");
  CHECK(j["alpha"] == nlohmann::json({"1/3", "2/5", "2/7"}));  // echoed reduced
  CHECK(j["N"] == "105");
  CHECK(j["A"] == "2");
  CHECK(j["L"] == "105");
  CHECK(j["result"]["g"] == "100");
  CHECK(j["result"]["count"] == "3");
}

TEST_CASE("json enumeration lists tuples as arrays of decimal strings") {
  const RunResult r = run({"enumerate", "--alpha", "1/3,2/5,2/7", "--g", "101", "--json"});
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["count"] == "1");
  CHECK(j["result"]["compositions"] == nlohmann::json({{"33", "40", "28"}}));
}

TEST_CASE("json quasipoly reports classes with ascending coefficients") {
  const RunResult r = run({"quasipoly", "--alpha", "1/2,1/2,1/2", "--json"});
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["period"] == "2");
  REQUIRE(j["result"]["classes"].size() == 2);
  CHECK(j["result"]["classes"][0]["coefficients"] ==
        nlohmann::json({"1", "3/4", "1/8"}));
  CHECK(j["result"]["classes"][1]["display"] == "1/8 g^2 - 1/8");
  CHECK(j["result"]["classes"][1]["valid_from"] == "3");
}

TEST_CASE("repeated identical invocations are byte-identical") {
  const std::vector<std::string> args{"genfun", "--alpha", "1/2,1/2,1/3",
                                      "--series-order", "40", "--json"};
  const RunResult first = run(args);
  const RunResult second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("invalid share systems exit with code 2 and a diagnostic") {
  const RunResult trivial = run({"count", "--alpha", "1/4,1/4,1/4", "--g", "10"});
  CHECK(trivial.code == 2);
  CHECK(trivial.out.empty());
  CHECK(trivial.err.find("TrivialSystem") != std::string::npos);

  const RunResult partner = run({"count", "--alpha", "2/3,1/2,1/2", "--g", "10"});
  CHECK(partner.code == 2);
  CHECK(partner.err.find("PartnerSumExceeded") != std::string::npos);

  const RunResult shape = run({"count", "--alpha", "1/3,oops", "--g", "10"});
  CHECK(shape.code == 2);
  CHECK(shape.err.find("BadShape") != std::string::npos);
}

TEST_CASE("cap overruns exit with code 3") {
  const RunResult enumerate_cap =
      run({"enumerate", "--alpha", "1/3,2/5,2/7", "--g", "100", "--cap", "2"});
  CHECK(enumerate_cap.code == 3);
  CHECK(enumerate_cap.err.find("ResultTooLarge") != std::string::npos);

  const RunResult scan_cap =
      run({"base-set", "--alpha", "1/3,1/3,1/3,1/3", "--scan-cap", "1000"});
  CHECK(scan_cap.code == 3);
  CHECK(scan_cap.err.find("ScanCapExceeded") != std::string::npos);
}

TEST_CASE("invalid tuples exit with code 4") {
  const RunResult not_communal =
      run({"decompose", "--alpha", "1/3,2/5,2/7", "--tuple", "35,40,28"});
  CHECK(not_communal.code == 4);
  CHECK(not_communal.err.find("NotCommunal") != std::string::npos);

  const RunResult arity = run({"decompose", "--alpha", "1/3,2/5,2/7", "--tuple", "1,2"});
  CHECK(arity.code == 4);
  CHECK(arity.err.find("ArityMismatch") != std::string::npos);
}

TEST_CASE("usage problems exit with code 1") {
  CHECK(run({"count", "--alpha", "1/3,2/5,2/7", "--g", "abc"}).code == 1);
  CHECK(run({"count", "--alpha", "1/3,2/5,2/7"}).code == 1);  // missing --g
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"decompose", "--alpha", "1/3,2/5,2/7", "--tuple", "33,40,x"}).code == 1);
}

TEST_CASE("help is ordinary successful output") {
  const RunResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("count") != std::string::npos);
  CHECK(r.out.find("quasipoly") != std::string::npos);
}

TEST_CASE("enumerated lines round-trip through decompose and recomposition") {
  const communal::AlphaSystem s = sys("1/2,1/2,1/3");
  const communal::GeneratorSet gens = communal::generators(s);
  const RunResult listing = run({"enumerate", "--alpha", "1/2,1/2,1/3", "--g", "36"});
  CHECK(listing.code == 0);
  std::istringstream lines(listing.out);
  std::string line;
  std::size_t seen = 0;
  while (std::getline(lines, line)) {
    const RunResult d =
        run({"decompose", "--alpha", "1/2,1/2,1/3", "--tuple", line, "--json"});
    REQUIRE(d.code == 0);
    const nlohmann::json j = nlohmann::json::parse(d.out);
    std::vector<communal::BigInt> parts(s.part_count(), communal::BigInt(0));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      parts[i] = communal::BigInt(j["result"]["base"][i].get<std::string>());
      for (std::size_t x = 0; x < parts.size(); ++x) {
        parts[i] += communal::BigInt(j["result"]["coefficients"][x].get<std::string>()) *
                    gens.gens[x][i];
      }
    }
    CHECK(communal::Composition(parts).display() == line);
    ++seen;
  }
  CHECK(seen == 91);  // (floor(36/3)+1)(floor(36/3)+2)/2 = 13*14/2
}
