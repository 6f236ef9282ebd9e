#include "communal/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "communal/alpha.hpp"
#include "communal/counting.hpp"
#include "communal/error.hpp"
#include "communal/genfun.hpp"
#include "communal/monoid.hpp"
#include "communal/numeric.hpp"
#include "communal/quasipoly.hpp"

namespace communal::cli {

namespace {

using Json = nlohmann::ordered_json;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::TrivialSystem:
    case Errc::PartnerSumExceeded:
    case Errc::BadShape:
      return 2;
    case Errc::ResultTooLarge:
    case Errc::ScanCapExceeded:
      return 3;
    case Errc::ArityMismatch:
    case Errc::NotCommunal:
      return 4;
    default:
      return 1;
  }
}

BigInt parse_decimal(const std::string& text, const char* what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](unsigned char ch) { return ch >= '0' && ch <= '9'; })) {
    throw std::invalid_argument(std::string(what) + " must be a nonnegative decimal integer, got '" +
                                text + "'");
  }
  return BigInt(text);
}

Composition parse_tuple(const std::string& text) {
  std::vector<BigInt> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string entry = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                            : comma - start);
    parts.push_back(parse_decimal(entry, "each tuple entry"));
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return Composition(std::move(parts));
}

std::string join(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) {
      out += ',';
    }
    out += values[i].str();
  }
  return out;
}

Json string_array(const std::vector<BigInt>& values) {
  Json arr = Json::array();
  for (const BigInt& v : values) {
    arr.push_back(v.str());
  }
  return arr;
}

Json tuple_array(const Composition& c) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    arr.push_back(c[i].str());
  }
  return arr;
}

Json envelope(const std::string& command, const AlphaSystem& sys) {
  Json j;
  j["command"] = command;
  Json alphas = Json::array();
  for (std::size_t i = 0; i < sys.part_count(); ++i) {
    alphas.push_back(sys.numerator(i).str() + "/" + sys.denominator(i).str());
  }
  j["alpha"] = std::move(alphas);
  j["N"] = sys.denominator_product().str();
  j["A"] = sys.modulus().str();
  j["L"] = sys.period().str();
  return j;
}

void emit(std::ostream& out, Json j) { out << j.dump(2) << '\n'; }

struct Options {
  std::string alpha;
  std::string g;
  std::string tuple;
  std::uint64_t cap = kDefaultEnumerationCap;
  std::uint64_t scan_cap = kDefaultScanCap;
  std::uint64_t series_order = 0;
  bool series_requested = false;
  std::uint64_t verify_points = 0;
  bool json = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting, enumeration, and structure of share-bounded compositions"};
  app.name("communal");
  app.require_subcommand(1);

  Options opt;

  const auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--alpha", opt.alpha,
                    "Comma-separated share fractions, e.g. 1/3,2/5,2/7")
        ->required();
    sub->add_flag("--json", opt.json, "Emit the JSON envelope instead of plain text");
  };

  CLI::App* count = app.add_subcommand("count", "Number of communal compositions of a total");
  add_common(count);
  count->add_option("--g", opt.g, "Total to count compositions of")->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "List communal compositions of a total");
  add_common(enumerate);
  enumerate->add_option("--g", opt.g, "Total to enumerate compositions of")->required();
  enumerate->add_option("--cap", opt.cap, "Abort if the count exceeds this many tuples");

  CLI::App* generators = app.add_subcommand("generators", "The k generator tuples x_1..x_k");
  add_common(generators);

  CLI::App* base_set_cmd = app.add_subcommand("base-set", "Residue tuples, base tuples, weights");
  add_common(base_set_cmd);
  base_set_cmd->add_option("--scan-cap", opt.scan_cap,
                           "Abort if the residue scan would visit more candidates than this");

  CLI::App* genfun_cmd = app.add_subcommand("genfun", "Rational generating function for counts");
  add_common(genfun_cmd);
  genfun_cmd
      ->add_option("--series-order", opt.series_order,
                   "Also print series coefficients c_0..c_M")
      ->check(CLI::Range(std::uint64_t{0}, std::uint64_t{100'000'000}));
  genfun_cmd->add_option("--scan-cap", opt.scan_cap,
                         "Abort if the residue scan would visit more candidates than this");

  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "Base-plus-generators decomposition of a tuple");
  add_common(decompose_cmd);
  decompose_cmd->add_option("--tuple", opt.tuple, "Comma-separated tuple, e.g. 33,40,28")
      ->required();

  CLI::App* quasipoly_cmd =
      app.add_subcommand("quasipoly", "Per-residue-class counting polynomials");
  add_common(quasipoly_cmd);
  quasipoly_cmd
      ->add_option("--verify-points", opt.verify_points,
                   "Check this many extra held-out points per class")
      ->check(CLI::Range(std::uint64_t{0}, std::uint64_t{1'000'000}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }
  opt.series_requested = genfun_cmd->count("--series-order") > 0;

  try {
    const AlphaSystem sys = AlphaSystem::parse(opt.alpha);

    if (count->parsed()) {
      const BigInt g = parse_decimal(opt.g, "--g");
      const BigInt value = count_compositions(sys, g);
      if (opt.json) {
        Json j = envelope("count", sys);
        j["result"] = Json{{"g", g.str()}, {"count", value.str()}};
        emit(out, std::move(j));
      } else {
        out << value.str() << '\n';
      }
    } else if (enumerate->parsed()) {
      const BigInt g = parse_decimal(opt.g, "--g");
      const std::vector<Composition> tuples = enumerate_bijective(sys, g, BigInt(opt.cap));
      if (opt.json) {
        Json j = envelope("enumerate", sys);
        Json list = Json::array();
        for (const Composition& c : tuples) {
          list.push_back(tuple_array(c));
        }
        j["result"] = Json{{"g", g.str()},
                           {"count", std::to_string(tuples.size())},
                           {"compositions", std::move(list)}};
        emit(out, std::move(j));
      } else {
        for (const Composition& c : tuples) {
          out << c.display() << '\n';
        }
      }
    } else if (generators->parsed()) {
      const GeneratorSet gens = communal::generators(sys);
      if (opt.json) {
        Json j = envelope("generators", sys);
        Json list = Json::array();
        for (const Composition& x : gens.gens) {
          list.push_back(tuple_array(x));
        }
        j["result"] = Json{{"generators", std::move(list)}};
        emit(out, std::move(j));
      } else {
        for (const Composition& x : gens.gens) {
          out << x.display() << '\n';
        }
      }
    } else if (base_set_cmd->parsed()) {
      const std::vector<BaseElement> elements = base_set(sys, BigInt(opt.scan_cap));
      if (opt.json) {
        Json j = envelope("base-set", sys);
        Json list = Json::array();
        for (const BaseElement& elem : elements) {
          list.push_back(Json{{"residues", string_array(elem.residues)},
                              {"base", tuple_array(elem.base)},
                              {"weight", elem.weight.str()}});
        }
        j["result"] = Json{{"count", std::to_string(elements.size())},
                           {"elements", std::move(list)}};
        emit(out, std::move(j));
      } else {
        for (const BaseElement& elem : elements) {
          out << "a=" << join(elem.residues) << " base=" << elem.base.display()
              << " weight=" << elem.weight.str() << '\n';
        }
      }
    } else if (genfun_cmd->parsed()) {
      const std::vector<BaseElement> elements = base_set(sys, BigInt(opt.scan_cap));
      const RationalGF gf = build_gf(sys, elements);
      std::vector<BigInt> coeffs;
      if (opt.series_requested) {
        coeffs = series(gf, static_cast<std::size_t>(opt.series_order));
      }
      if (opt.json) {
        Json j = envelope("genfun", sys);
        Json numerator = Json::array();
        for (const auto& [degree, coeff] : gf.numerator.terms()) {
          numerator.push_back(Json{{"degree", degree.str()}, {"coeff", coeff.str()}});
        }
        Json result{{"display", gf.display()},
                    {"numerator", std::move(numerator)},
                    {"denominator_exponents", string_array(gf.denominator_exponents)}};
        if (opt.series_requested) {
          result["series"] = string_array(coeffs);
        }
        j["result"] = std::move(result);
        emit(out, std::move(j));
      } else {
        out << "F(x) = " << gf.display() << '\n';
        for (std::size_t g = 0; g < coeffs.size(); ++g) {
          out << g << ' ' << coeffs[g].str() << '\n';
        }
      }
    } else if (decompose_cmd->parsed()) {
      const Composition c = parse_tuple(opt.tuple);
      const Decomposition d = decompose(sys, c);
      if (opt.json) {
        Json j = envelope("decompose", sys);
        j["result"] = Json{{"tuple", tuple_array(c)},
                           {"residues", string_array(d.base.residues)},
                           {"base", tuple_array(d.base.base)},
                           {"weight", d.base.weight.str()},
                           {"coefficients", string_array(d.coefficients)}};
        emit(out, std::move(j));
      } else {
        out << "a=" << join(d.base.residues) << '\n'
            << "base=" << d.base.base.display() << '\n'
            << "coeffs=" << join(d.coefficients) << '\n';
      }
    } else if (quasipoly_cmd->parsed()) {
      const QuasiPolynomial qp =
          extract_quasipoly(sys, static_cast<std::size_t>(opt.verify_points));
      if (opt.json) {
        Json j = envelope("quasipoly", sys);
        Json classes = Json::array();
        for (std::size_t r = 0; r < qp.polys.size(); ++r) {
          Json coeffs = Json::array();
          for (const BigRat& c : qp.polys[r]) {
            coeffs.push_back(fraction_string(c));
          }
          classes.push_back(Json{{"residue", std::to_string(r)},
                                 {"valid_from", qp.valid_from[r].str()},
                                 {"coefficients", std::move(coeffs)},
                                 {"display", poly_display(qp.polys[r])}});
        }
        j["result"] = Json{{"period", qp.period.str()},
                           {"classes", std::move(classes)},
                           {"verified_extra_points", std::to_string(opt.verify_points)}};
        emit(out, std::move(j));
      } else {
        for (std::size_t r = 0; r < qp.polys.size(); ++r) {
          out << "r=" << r << " from=" << qp.valid_from[r].str() << ": "
              << poly_display(qp.polys[r]) << '\n';
        }
        if (opt.verify_points > 0) {
          out << "verified " << opt.verify_points << " extra points per class: ok\n";
        }
      }
    }
    return 0;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace communal::cli
