#include "communal/alpha.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "communal/error.hpp"

namespace communal {

namespace {

std::string join_parts(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) {
      out += ',';
    }
    out += values[i].str();
  }
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Composition::Composition(std::vector<BigInt> parts) : parts_(std::move(parts)) {
  for (const BigInt& part : parts_) {
    if (part < 0) {
      throw std::invalid_argument("composition parts must be nonnegative");
    }
    total_ += part;
  }
}

std::string Composition::display() const { return join_parts(parts_); }

bool operator<(const Composition& a, const Composition& b) {
  return std::lexicographical_compare(a.parts_.begin(), a.parts_.end(),
                                      b.parts_.begin(), b.parts_.end());
}

AlphaSystem AlphaSystem::validate(const std::vector<std::pair<BigInt, BigInt>>& raw) {
  if (raw.size() < 2) {
    raise(Errc::BadShape, "need at least two parts, got " + std::to_string(raw.size()));
  }
  for (const auto& [num, den] : raw) {
    if (num <= 0 || den <= 0) {
      raise(Errc::BadShape,
            "every bound must have a positive numerator and denominator, got " + num.str() +
                "/" + den.str());
    }
  }

  AlphaSystem sys;
  for (const auto& [num, den] : raw) {
    sys.alphas_.emplace_back(num, den);  // cpp_rational reduces on construction
  }

  BigRat total{0};
  for (const BigRat& alpha : sys.alphas_) {
    total += alpha;
  }
  if (total <= 1) {
    raise(Errc::TrivialSystem,
          "bounds sum to " + fraction_string(total) + ", which does not exceed 1");
  }
  for (std::size_t j = 0; j < sys.alphas_.size(); ++j) {
    const BigRat partner_sum = total - sys.alphas_[j];
    if (partner_sum > 1) {
      raise(Errc::PartnerSumExceeded,
            "the bounds excluding index " + std::to_string(j) + " sum to " +
                fraction_string(partner_sum) + " > 1");
    }
    sys.hats_.push_back(BigRat(1) - partner_sum);
  }

  for (const BigRat& alpha : sys.alphas_) {
    const BigInt num = boost::multiprecision::numerator(alpha);
    const BigInt den = boost::multiprecision::denominator(alpha);
    sys.numerators_.push_back(num);
    sys.denominators_.push_back(den);
    sys.denominator_product_ *= den;
    sys.period_ = boost::multiprecision::lcm(sys.period_, den);
  }

  const BigRat scaled = BigRat(sys.denominator_product_) * (total - 1);
  if (boost::multiprecision::denominator(scaled) != 1) {
    throw std::logic_error("modulus N(sum alpha - 1) is not integral");
  }
  sys.modulus_ = boost::multiprecision::numerator(scaled);
  if (sys.modulus_ < 1) {
    throw std::logic_error("modulus must be positive for an admissible system");
  }
  return sys;
}

AlphaSystem AlphaSystem::parse(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (char c : text) {
    if (c != ' ' && c != '\t') {
      cleaned += c;
    }
  }
  if (cleaned.empty()) {
    raise(Errc::BadShape, "empty bound list");
  }

  std::vector<std::pair<BigInt, BigInt>> raw;
  std::size_t start = 0;
  while (start <= cleaned.size()) {
    const std::size_t comma = cleaned.find(',', start);
    const std::string_view entry =
        std::string_view(cleaned).substr(start, comma == std::string::npos ? std::string::npos
                                                                           : comma - start);
    const std::size_t slash = entry.find('/');
    if (slash == std::string_view::npos || !all_digits(entry.substr(0, slash)) ||
        !all_digits(entry.substr(slash + 1))) {
      raise(Errc::BadShape, "malformed fraction '" + std::string(entry) +
                                "', expected decimal m/n");
    }
    raw.emplace_back(BigInt(std::string(entry.substr(0, slash))),
                     BigInt(std::string(entry.substr(slash + 1))));
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return validate(raw);
}

BigInt AlphaSystem::floor_share(std::size_t i, const BigInt& g) const {
  if (g < 0) {
    throw std::invalid_argument("floor_share requires nonnegative g");
  }
  return numerators_[i] * g / denominators_[i];
}

std::string AlphaSystem::display() const {
  std::string out;
  for (std::size_t i = 0; i < alphas_.size(); ++i) {
    if (i != 0) {
      out += ',';
    }
    out += numerators_[i].str() + "/" + denominators_[i].str();
  }
  return out;
}

bool is_communal(const AlphaSystem& sys, const Composition& c) {
  if (c.size() != sys.part_count()) {
    raise(Errc::ArityMismatch, "tuple has " + std::to_string(c.size()) + " parts, system has " +
                                   std::to_string(sys.part_count()));
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sys.denominator(i) * c[i] > sys.numerator(i) * c.total()) {
      return false;
    }
  }
  return true;
}

}  // namespace communal
