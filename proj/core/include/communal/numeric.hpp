#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace communal {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact C(n, r) for small r; n may be arbitrarily large. Returns 0 when
// n < r (in particular for negative n).
BigInt binomial(const BigInt& n, std::size_t r);

// "p" when the denominator is 1, otherwise "p/q".
std::string fraction_string(const BigRat& value);

}  // namespace communal
