#include <vector>

#include "doctest.h"

#include "communal/alpha.hpp"
#include "communal/counting.hpp"
#include "communal/error.hpp"
#include "communal/quasipoly.hpp"
#include "helpers.hpp"

using namespace communal;
using communal::testing::sys;

TEST_CASE("equal-shares classes recover the known even and odd polynomials") {
  const AlphaSystem s = sys("1/2,1/2,1/2");
  const QuasiPolynomial qp = extract_quasipoly(s);
  REQUIRE(qp.period == 2);
  REQUIRE(qp.polys.size() == 2);

  // Even totals: (g^2 + 6g + 8)/8. Odd totals: (g^2 - 1)/8.
  const std::vector<BigRat> even{BigRat(1), BigRat(3, 4), BigRat(1, 8)};
  const std::vector<BigRat> odd{BigRat(-1, 8), BigRat(0), BigRat(1, 8)};
  CHECK(qp.polys[0] == even);
  CHECK(qp.polys[1] == odd);
  CHECK(qp.valid_from[0] == 0);
  CHECK(qp.valid_from[1] == 3);
}

TEST_CASE("evaluation matches the exact counts through the validated range") {
  for (const char* text : {"1/3,2/5,2/7", "1/2,1/3,1/5", "1/2,1/2,1/2", "1/2,1/2,1/3",
                           "1/1,1/1"}) {
    const AlphaSystem s = sys(text);
    const QuasiPolynomial qp = extract_quasipoly(s);
    const std::size_t L = static_cast<std::size_t>(qp.period);
    for (BigInt g = 0; g <= BigInt(10) * qp.period; ++g) {
      const std::size_t r = static_cast<std::size_t>(g % qp.period);
      if (g < qp.valid_from[r]) {
        continue;
      }
      CHECK(eval_quasipoly(qp, g) == count_compositions(s, g));
    }
    CHECK(qp.polys.size() == L);
  }
}

TEST_CASE("evaluation refuses totals below the validated start of their class") {
  const AlphaSystem s = sys("1/2,1/2,1/2");
  const QuasiPolynomial qp = extract_quasipoly(s);
  REQUIRE(qp.valid_from[1] == 3);
  try {
    (void)eval_quasipoly(qp, BigInt(1));
    FAIL_CHECK("expected a refusal below the validated range");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OutOfValidatedRange);
  }
  CHECK(eval_quasipoly(qp, BigInt(3)) == 1);  // [1,1,1] only
}

TEST_CASE("negative totals are rejected outright") {
  const QuasiPolynomial qp = extract_quasipoly(sys("1/2,1/2,1/2"));
  CHECK_THROWS_AS((void)eval_quasipoly(qp, BigInt(-1)), std::invalid_argument);
}

TEST_CASE("class polynomials have the expected degree and leading coefficient") {
  for (const char* text : {"1/3,2/5,2/7", "1/2,1/3,1/5", "1/2,1/2,1/2", "1/2,1/2,1/3"}) {
    const AlphaSystem s = sys(text);
    const QuasiPolynomial qp = extract_quasipoly(s);
    const std::size_t k = s.part_count();
    // Leading term (excess)^(k-1)/(k-1)! g^(k-1) with excess = A/N.
    BigRat lead{1};
    for (std::size_t i = 1; i < k; ++i) {
      lead *= BigRat(s.modulus(), s.denominator_product());
      lead /= BigInt(i);
    }
    for (const std::vector<BigRat>& poly : qp.polys) {
      REQUIRE(poly.size() == k);  // degree exactly k-1
      CHECK(poly.back() == lead);
    }
  }
}

TEST_CASE("extraction accepts extra held-out checks") {
  const QuasiPolynomial qp = extract_quasipoly(sys("1/2,1/2,1/3"), 10);
  CHECK(qp.period == 6);
  CHECK(qp.polys.size() == 6);
}

TEST_CASE("far evaluation stays exact with big integers") {
  const AlphaSystem s = sys("1/2,1/2,1/2");
  const QuasiPolynomial qp = extract_quasipoly(s);
  const BigInt g("1000000000000");
  // (g^2 + 6g + 8)/8 for an even total.
  const BigInt expected = (g * g + 6 * g + 8) / 8;
  CHECK(eval_quasipoly(qp, g) == expected);
  CHECK(eval_quasipoly(qp, g) == count_compositions(s, g));
}

TEST_CASE("polynomial rendering uses descending powers with exact fractions") {
  CHECK(poly_display({BigRat(1), BigRat(3, 4), BigRat(1, 8)}) == "1/8 g^2 + 3/4 g + 1");
  CHECK(poly_display({BigRat(-1, 8), BigRat(0), BigRat(1, 8)}) == "1/8 g^2 - 1/8");
  CHECK(poly_display({BigRat(0)}) == "0");
  CHECK(poly_display({}) == "0");
  CHECK(poly_display({BigRat(5)}) == "5");
  CHECK(poly_display({BigRat(0), BigRat(1)}) == "g");
  CHECK(poly_display({BigRat(0), BigRat(0), BigRat(1)}) == "g^2");
  CHECK(poly_display({BigRat(2), BigRat(-1)}) == "-g + 2");
  CHECK(poly_display({BigRat(1, 6), BigRat(1)}, "t") == "t + 1/6");
}
