#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "communal/numeric.hpp"

namespace communal {

/// Ordered k-tuple of nonnegative integers together with its cached sum.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<BigInt> parts);

  std::size_t size() const noexcept { return parts_.size(); }
  const std::vector<BigInt>& parts() const noexcept { return parts_; }
  const BigInt& operator[](std::size_t i) const { return parts_[i]; }
  const BigInt& total() const noexcept { return total_; }

  std::string display() const;  // "33,40,28"

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Composition& a, const Composition& b) { return !(a == b); }
  // Lexicographic by parts.
  friend bool operator<(const Composition& a, const Composition& b);

 private:
  std::vector<BigInt> parts_;
  BigInt total_{0};
};

/// The validated bound system alpha_i = m_i/n_i (lowest terms) plus the
/// derived constants every other operation keeps reaching for:
///   N = prod n_i,  A = N(sum alpha_i - 1),  L = lcm(n_i),
///   complementary shares  1 - sum_{j != i} alpha_j.
///
/// Admissibility: every k-1 of the alphas sum to at most 1, while all k of
/// them sum to more than 1. Immutable after validation.
class AlphaSystem {
 public:
  /// Raw (numerator, denominator) pairs; unreduced input is reduced on
  /// ingest. Throws Error with BadShape, TrivialSystem or
  /// PartnerSumExceeded.
  static AlphaSystem validate(const std::vector<std::pair<BigInt, BigInt>>& raw);

  /// "m1/n1,m2/n2,..." — ASCII decimal fractions, whitespace ignored.
  static AlphaSystem parse(std::string_view text);

  std::size_t part_count() const noexcept { return alphas_.size(); }  // k
  const std::vector<BigRat>& alphas() const noexcept { return alphas_; }
  const BigInt& numerator(std::size_t i) const { return numerators_[i]; }      // m_i
  const BigInt& denominator(std::size_t i) const { return denominators_[i]; }  // n_i
  const BigInt& denominator_product() const noexcept { return denominator_product_; }  // N
  const BigInt& modulus() const noexcept { return modulus_; }  // A
  const BigInt& period() const noexcept { return period_; }    // L
  const std::vector<BigRat>& complementary_shares() const noexcept { return hats_; }
  const BigRat& complementary_share(std::size_t i) const { return hats_[i]; }

  /// floor(alpha_i * g) via integer division; g must be nonnegative.
  BigInt floor_share(std::size_t i, const BigInt& g) const;

  std::string display() const;  // canonical reduced "m1/n1,m2/n2,..."

 private:
  AlphaSystem() = default;

  std::vector<BigRat> alphas_;
  std::vector<BigInt> numerators_;
  std::vector<BigInt> denominators_;
  std::vector<BigRat> hats_;
  BigInt denominator_product_{1};
  BigInt modulus_{0};
  BigInt period_{1};
};

/// True iff n_i*g_i <= m_i*total for every i — pure integer arithmetic.
/// Throws ArityMismatch when the tuple length disagrees with the system.
bool is_communal(const AlphaSystem& sys, const Composition& c);

}  // namespace communal
