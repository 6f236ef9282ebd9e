#include "communal/quasipoly.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "communal/counting.hpp"
#include "communal/error.hpp"

namespace communal {

namespace {

// Largest period we are willing to tabulate; beyond this the per-class
// storage and sampling work would be impractical.
constexpr std::uint64_t kMaxPeriod = 1'000'000;

BigRat poly_eval(const std::vector<BigRat>& coeffs, const BigInt& g) {
  BigRat acc{0};
  const BigRat x{g};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

// Exact Lagrange interpolation through (xs[t], ys[t]); ascending coefficients.
std::vector<BigRat> interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
  const std::size_t n = xs.size();
  std::vector<BigRat> result(n, BigRat(0));
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<BigRat> basis{BigRat(1)};
    BigRat denom{1};
    for (std::size_t u = 0; u < n; ++u) {
      if (u == t) {
        continue;
      }
      // basis *= (x - xs[u])
      std::vector<BigRat> next(basis.size() + 1, BigRat(0));
      const BigRat shift{xs[u]};
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d] -= basis[d] * shift;
        next[d + 1] += basis[d];
      }
      basis = std::move(next);
      denom *= BigRat(xs[t] - xs[u]);
    }
    const BigRat scale = BigRat(ys[t]) / denom;
    for (std::size_t d = 0; d < basis.size(); ++d) {
      result[d] += basis[d] * scale;
    }
  }
  while (!result.empty() && result.back() == 0) {
    result.pop_back();
  }
  return result;
}

}  // namespace

QuasiPolynomial extract_quasipoly(const AlphaSystem& sys, std::size_t extra_checks) {
  const BigInt& period = sys.period();
  if (period > kMaxPeriod) {
    throw std::length_error("period too large for quasi-polynomial extraction");
  }
  const std::size_t L = static_cast<std::size_t>(period);
  const std::size_t k = sys.part_count();

  // Slack grows by a fixed positive step from one class member to the next.
  const BigInt step = period * sys.modulus() / sys.denominator_product();
  if (step <= 0 || period * sys.modulus() % sys.denominator_product() != 0) {
    throw std::logic_error("slack step along a residue class must be a positive integer");
  }

  QuasiPolynomial qp;
  qp.period = period;
  qp.polys.resize(L);
  qp.valid_from.resize(L);

  for (std::size_t r = 0; r < L; ++r) {
    const BigInt g0{static_cast<std::uint64_t>(r)};
    const BigInt s0 = slack(sys, g0).value;

    // First class member whose slack is nonnegative: from there on the
    // count follows a single polynomial in g.
    BigInt t0{0};
    if (s0 < 0) {
      t0 = (-s0 + step - 1) / step;
    }
    qp.valid_from[r] = g0 + t0 * period;

    std::vector<BigInt> xs(k);
    std::vector<BigInt> ys(k);
    for (std::size_t t = 0; t < k; ++t) {
      xs[t] = qp.valid_from[r] + BigInt(static_cast<std::uint64_t>(t)) * period;
      ys[t] = count_compositions(sys, xs[t]);
    }
    qp.polys[r] = interpolate(xs, ys);

    const std::size_t checks = k + extra_checks;
    for (std::size_t t = 0; t < checks; ++t) {
      const BigInt g = qp.valid_from[r] + BigInt(static_cast<std::uint64_t>(k + t)) * period;
      const BigRat predicted = poly_eval(qp.polys[r], g);
      const BigInt actual = count_compositions(sys, g);
      if (predicted != BigRat(actual)) {
        raise(Errc::ValidationFailed,
              "class " + std::to_string(r) + " disagrees with the exact count at g=" +
                  g.str());
      }
    }
  }
  return qp;
}

BigInt eval_quasipoly(const QuasiPolynomial& qp, const BigInt& g) {
  if (g < 0) {
    throw std::invalid_argument("totals must be nonnegative");
  }
  const std::size_t L = qp.polys.size();
  if (qp.period <= 0 || BigInt(L) != qp.period || qp.valid_from.size() != L) {
    throw std::invalid_argument("malformed quasi-polynomial");
  }
  const std::size_t r = static_cast<std::size_t>(g % qp.period);
  if (g < qp.valid_from[r]) {
    raise(Errc::OutOfValidatedRange,
          "g=" + g.str() + " is below the validated start " + qp.valid_from[r].str() +
              " of its class");
  }
  const BigRat value = poly_eval(qp.polys[r], g);
  if (boost::multiprecision::denominator(value) != 1 ||
      boost::multiprecision::numerator(value) < 0) {
    throw std::logic_error("quasi-polynomial produced a non-count value");
  }
  return boost::multiprecision::numerator(value);
}

std::string poly_display(const std::vector<BigRat>& coeffs, std::string_view var) {
  std::size_t top = coeffs.size();
  while (top > 0 && coeffs[top - 1] == 0) {
    --top;
  }
  if (top == 0) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (std::size_t idx = top; idx-- > 0;) {
    const BigRat& c = coeffs[idx];
    if (c == 0) {
      continue;
    }
    const bool negative = c < 0;
    if (first) {
      if (negative) {
        out << '-';
      }
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const BigRat magnitude = negative ? BigRat(-c) : c;
    if (idx == 0) {
      out << fraction_string(magnitude);
    } else {
      if (magnitude != 1) {
        out << fraction_string(magnitude) << ' ';
      }
      out << var;
      if (idx != 1) {
        out << '^' << idx;
      }
    }
  }
  return out.str();
}

}  // namespace communal
