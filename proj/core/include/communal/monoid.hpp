#pragma once

#include <cstdint>
#include <vector>

#include "communal/alpha.hpp"
#include "communal/numeric.hpp"

namespace communal {

/// The k monoid generators. gens[i] is the tuple
/// (N/n_i) * [alpha_1, ..., complementary_share_i, ..., alpha_k]; its
/// entries are nonnegative integers summing to N/n_i, and it is communal.
struct GeneratorSet {
  std::vector<Composition> gens;
};

GeneratorSet generators(const AlphaSystem& sys);

/// A residue tuple a in [0, A)^k whose generator combination
/// sum_i a_i * x_i is divisible by A coordinatewise, together with the
/// resulting base tuple b = (1/A) sum_i a_i * x_i and its entry sum.
struct BaseElement {
  std::vector<BigInt> residues;  // a
  Composition base;              // b
  BigInt weight;                 // b(a) = sum of base entries
};

inline constexpr std::uint64_t kDefaultScanCap = 10'000'000;

/// Every BaseElement, found by scanning all A^k residue tuples and keeping
/// the ones whose base tuple is integral. Sorted lexicographically by
/// residue tuple; (0,...,0) is always first. Throws ScanCapExceeded when
/// A^k > scan_cap.
std::vector<BaseElement> base_set(const AlphaSystem& sys,
                                  const BigInt& scan_cap = BigInt(kDefaultScanCap));

/// Recomputes (N/A) * sum_i a_i/n_i and checks it against the stored base
/// tuple sum.
BigInt weight(const AlphaSystem& sys, const BaseElement& elem);

/// A communal composition written as base tuple plus a nonnegative integer
/// combination of the generators.
struct Decomposition {
  BaseElement base;
  std::vector<BigInt> coefficients;  // c_1..c_k
};

/// Unique base-plus-generators decomposition: coefficient j is
/// (m_j*g - n_j*g_j - a_j) / A with a_j the least residue of
/// m_j*g - n_j*g_j mod A. Throws NotCommunal when c is not communal.
Decomposition decompose(const AlphaSystem& sys, const Composition& c);
Decomposition decompose(const AlphaSystem& sys, const GeneratorSet& gens, const Composition& c);

/// base + sum_j c_j * x_j. The result is communal by monoid closure.
Composition recompose(const AlphaSystem& sys, const Decomposition& d);
Composition recompose(const AlphaSystem& sys, const GeneratorSet& gens, const Decomposition& d);

}  // namespace communal
