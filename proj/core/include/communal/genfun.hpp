#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "communal/alpha.hpp"
#include "communal/monoid.hpp"
#include "communal/numeric.hpp"

namespace communal {

/// Exact polynomial with integer coefficients, stored sparsely by degree.
class SparsePoly {
 public:
  SparsePoly() = default;

  static SparsePoly constant(const BigInt& c);
  static SparsePoly monomial(const BigInt& degree, const BigInt& coeff = BigInt(1));
  /// 1 - x^e
  static SparsePoly one_minus_power(const BigInt& e);

  /// Adds coeff * x^degree, merging with any existing term and dropping zeros.
  void add_term(const BigInt& degree, const BigInt& coeff);

  BigInt coeff(const BigInt& degree) const;
  const std::map<BigInt, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest degree with a nonzero coefficient; -1 for the zero polynomial.
  BigInt degree() const;
  /// Value at x = 1.
  BigInt coefficient_sum() const;

  SparsePoly operator+(const SparsePoly& other) const;
  SparsePoly operator-(const SparsePoly& other) const;
  SparsePoly operator*(const SparsePoly& other) const;
  bool operator==(const SparsePoly& other) const { return terms_ == other.terms_; }
  bool operator!=(const SparsePoly& other) const { return !(*this == other); }

  /// Human-readable form, terms in ascending degree: "1 + 2x^4 - x^6".
  std::string display(std::string_view var = "x") const;

 private:
  std::map<BigInt, BigInt> terms_;
};

/// numerator / prod_e (1 - x^e) over the listed denominator exponents
/// (kept sorted ascending; repeats encode multiplicity).
struct RationalGF {
  SparsePoly numerator;
  std::vector<BigInt> denominator_exponents;

  /// "(1 + x^18 + x^25 + x^28) / ((1-x^15)(1-x^21)(1-x^35))"
  std::string display() const;
};

/// The generating function for counts by total: numerator terms are the base
/// weights, denominator exponents are the generator totals N/n_i.
RationalGF build_gf(const AlphaSystem& sys, const std::vector<BaseElement>& bases);

/// First order+1 series coefficients c_0..c_order of the expansion at 0.
std::vector<BigInt> series(const RationalGF& gf, std::size_t order);

/// Exact equality as rational functions, via cross-multiplication after
/// cancelling shared denominator factors.
bool gf_equal(const RationalGF& a, const RationalGF& b);

/// (1 - x^{k(k-1)}) / ((1-x^{k-1})^k (1-x^k)) for the all-shares-1/(k-1)
/// system on k parts; requires k >= 2.
RationalGF closed_form_equal_shares(std::size_t k);

/// Closed form for shares (1/2, 1/2, 1/n), n >= 2:
///   n even: (1 + x^{n+1}) / ((1-x^2)(1-x^n)^2)
///   n odd:  (1 + 2x^{n+1} + x^{2n}) / ((1-x^2)(1-x^n)(1-x^{2n}))
RationalGF closed_form_half_half_n(const BigInt& n);

}  // namespace communal
