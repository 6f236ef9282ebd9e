#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "communal/alpha.hpp"
#include "communal/numeric.hpp"

namespace communal {

/// Piecewise-polynomial description of the counting function: one polynomial
/// in g per residue class of g modulo the period, each valid from a recorded
/// starting total onward.
struct QuasiPolynomial {
  BigInt period;
  /// polys[r] holds ascending-degree rational coefficients for the class
  /// g = r (mod period), with trailing zeros trimmed.
  std::vector<std::vector<BigRat>> polys;
  /// Smallest total in each class at which the polynomial is known to agree
  /// with the exact count; evaluation below it is refused.
  std::vector<BigInt> valid_from;
};

/// Interpolates each residue class from exact counts and cross-checks the
/// result on held-out points (k per class, plus extra_checks more).
/// Throws Error(ValidationFailed) if any held-out point disagrees.
QuasiPolynomial extract_quasipoly(const AlphaSystem& sys, std::size_t extra_checks = 0);

/// Evaluates the class polynomial at g. Throws Error(OutOfValidatedRange)
/// when g is below the validated start of its class.
BigInt eval_quasipoly(const QuasiPolynomial& qp, const BigInt& g);

/// Renders ascending-degree coefficients in conventional descending order,
/// e.g. "1/8 g^2 + 3/4 g + 1".
std::string poly_display(const std::vector<BigRat>& coeffs, std::string_view var = "g");

}  // namespace communal
