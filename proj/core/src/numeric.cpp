#include "communal/numeric.hpp"

namespace communal {

BigInt binomial(const BigInt& n, std::size_t r) {
  if (n < 0 || n < r) {
    return 0;
  }
  BigInt result{1};
  // Incremental product; each partial result is an exact binomial, so the
  // division at step i is exact.
  for (std::size_t i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

std::string fraction_string(const BigRat& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

}  // namespace communal
