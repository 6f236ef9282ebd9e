#pragma once

#include <cstdint>
#include <vector>

#include "communal/alpha.hpp"
#include "communal/numeric.hpp"

namespace communal {

/// Slack of a target sum g: sum_i floor(alpha_i * g) - g. Nonnegative slack
/// is exactly what the floor bounds leave to distribute; negative slack
/// means no admissible tuple sums to g.
struct SlackValue {
  BigInt g;
  BigInt value;
};

SlackValue slack(const AlphaSystem& sys, const BigInt& g);

/// Number of k-tuples of nonnegative integers summing to m:
/// C(m + k - 1, k - 1) for m >= 0, and 0 for negative m.
BigInt multiset_count(const BigInt& m, std::size_t k);

/// Exact count of communal compositions summing to g.
BigInt count_compositions(const AlphaSystem& sys, const BigInt& g);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// All communal compositions of g, in lexicographic order, generated by
/// distributing the slack: parts are floor(alpha_i * g) minus a nonnegative
/// share of the slack. Empty when the slack is negative. Throws
/// ResultTooLarge when the count exceeds cap.
std::vector<Composition> enumerate_bijective(const AlphaSystem& sys, const BigInt& g,
                                             const BigInt& cap = BigInt(kDefaultEnumerationCap));

/// Independent brute-force enumerator: nested iteration over the first
/// k-1 parts within their floor bounds, last part forced and checked.
/// Shares nothing with enumerate_bijective beyond the domain types.
std::vector<Composition> enumerate_oracle(const AlphaSystem& sys, const BigInt& g,
                                          const BigInt& cap = BigInt(kDefaultEnumerationCap));

}  // namespace communal
