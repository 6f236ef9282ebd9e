#include "communal/genfun.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace communal {

SparsePoly SparsePoly::constant(const BigInt& c) {
  SparsePoly p;
  p.add_term(0, c);
  return p;
}

SparsePoly SparsePoly::monomial(const BigInt& degree, const BigInt& coeff) {
  SparsePoly p;
  p.add_term(degree, coeff);
  return p;
}

SparsePoly SparsePoly::one_minus_power(const BigInt& e) {
  SparsePoly p;
  p.add_term(0, 1);
  p.add_term(e, -1);
  return p;
}

void SparsePoly::add_term(const BigInt& degree, const BigInt& coeff) {
  if (degree < 0) {
    throw std::invalid_argument("polynomial degrees must be nonnegative");
  }
  if (coeff == 0) {
    return;
  }
  auto [it, inserted] = terms_.emplace(degree, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

BigInt SparsePoly::coeff(const BigInt& degree) const {
  const auto it = terms_.find(degree);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt SparsePoly::degree() const {
  return terms_.empty() ? BigInt(-1) : terms_.rbegin()->first;
}

BigInt SparsePoly::coefficient_sum() const {
  BigInt total = 0;
  for (const auto& [deg, c] : terms_) {
    total += c;
  }
  return total;
}

SparsePoly SparsePoly::operator+(const SparsePoly& other) const {
  SparsePoly out = *this;
  for (const auto& [deg, c] : other.terms_) {
    out.add_term(deg, c);
  }
  return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& other) const {
  SparsePoly out = *this;
  for (const auto& [deg, c] : other.terms_) {
    out.add_term(deg, -c);
  }
  return out;
}

SparsePoly SparsePoly::operator*(const SparsePoly& other) const {
  SparsePoly out;
  for (const auto& [da, ca] : terms_) {
    for (const auto& [db, cb] : other.terms_) {
      out.add_term(da + db, ca * cb);
    }
  }
  return out;
}

std::string SparsePoly::display(std::string_view var) const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& [deg, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) {
        out << '-';
      }
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (deg == 0) {
      out << magnitude;
    } else {
      if (magnitude != 1) {
        out << magnitude;
      }
      out << var;
      if (deg != 1) {
        out << '^' << deg;
      }
    }
  }
  return out.str();
}

std::string RationalGF::display() const {
  std::ostringstream out;
  const std::string num = numerator.display();
  if (numerator.terms().size() > 1) {
    out << '(' << num << ')';
  } else {
    out << num;
  }
  out << " / (";
  for (const BigInt& e : denominator_exponents) {
    out << "(1-x";
    if (e != 1) {
      out << '^' << e;
    }
    out << ')';
  }
  out << ')';
  return out.str();
}

RationalGF build_gf(const AlphaSystem& sys, const std::vector<BaseElement>& bases) {
  RationalGF gf;
  for (const BaseElement& elem : bases) {
    gf.numerator.add_term(elem.weight, 1);
  }
  const std::size_t k = sys.part_count();
  gf.denominator_exponents.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    gf.denominator_exponents.push_back(sys.denominator_product() / sys.denominator(i));
  }
  std::sort(gf.denominator_exponents.begin(), gf.denominator_exponents.end());
  return gf;
}

std::vector<BigInt> series(const RationalGF& gf, std::size_t order) {
  std::vector<BigInt> c(order + 1, BigInt(0));
  for (const auto& [deg, coeff] : gf.numerator.terms()) {
    if (deg <= order) {
      c[static_cast<std::size_t>(deg)] += coeff;
    }
  }
  for (const BigInt& e : gf.denominator_exponents) {
    if (e <= 0) {
      throw std::invalid_argument("denominator exponents must be positive");
    }
    if (e > order) {
      continue;
    }
    const std::size_t step = static_cast<std::size_t>(e);
    for (std::size_t t = step; t <= order; ++t) {
      c[t] += c[t - step];
    }
  }
  return c;
}

bool gf_equal(const RationalGF& a, const RationalGF& b) {
  // Cancel shared denominator factors (as multisets) before cross-multiplying.
  std::vector<BigInt> da = a.denominator_exponents;
  std::vector<BigInt> db = b.denominator_exponents;
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  std::vector<BigInt> only_a;
  std::vector<BigInt> only_b;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < da.size() && j < db.size()) {
    if (da[i] == db[j]) {
      ++i;
      ++j;
    } else if (da[i] < db[j]) {
      only_a.push_back(da[i++]);
    } else {
      only_b.push_back(db[j++]);
    }
  }
  only_a.insert(only_a.end(), da.begin() + static_cast<std::ptrdiff_t>(i), da.end());
  only_b.insert(only_b.end(), db.begin() + static_cast<std::ptrdiff_t>(j), db.end());

  SparsePoly lhs = a.numerator;
  for (const BigInt& e : only_b) {
    lhs = lhs * SparsePoly::one_minus_power(e);
  }
  SparsePoly rhs = b.numerator;
  for (const BigInt& e : only_a) {
    rhs = rhs * SparsePoly::one_minus_power(e);
  }
  return lhs == rhs;
}

RationalGF closed_form_equal_shares(std::size_t k) {
  if (k < 2) {
    throw std::invalid_argument("equal-shares closed form requires k >= 2");
  }
  RationalGF gf;
  const BigInt km1(static_cast<std::uint64_t>(k - 1));
  gf.numerator = SparsePoly::one_minus_power(km1 * BigInt(static_cast<std::uint64_t>(k)));
  gf.denominator_exponents.assign(k, km1);
  gf.denominator_exponents.push_back(BigInt(static_cast<std::uint64_t>(k)));
  std::sort(gf.denominator_exponents.begin(), gf.denominator_exponents.end());
  return gf;
}

RationalGF closed_form_half_half_n(const BigInt& n) {
  if (n < 2) {
    throw std::invalid_argument("half-half-n closed form requires n >= 2");
  }
  RationalGF gf;
  gf.numerator.add_term(0, 1);
  if (n % 2 == 0) {
    gf.numerator.add_term(n + 1, 1);
    gf.denominator_exponents = {BigInt(2), n, n};
  } else {
    gf.numerator.add_term(n + 1, 2);
    gf.numerator.add_term(2 * n, 1);
    gf.denominator_exponents = {BigInt(2), n, 2 * n};
  }
  std::sort(gf.denominator_exponents.begin(), gf.denominator_exponents.end());
  return gf;
}

}  // namespace communal
