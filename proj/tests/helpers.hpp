#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include "communal/alpha.hpp"
#include "communal/numeric.hpp"

namespace communal::testing {

inline AlphaSystem sys(std::string_view text) { return AlphaSystem::parse(text); }

inline Composition comp(std::initializer_list<long long> parts) {
  std::vector<BigInt> v;
  v.reserve(parts.size());
  for (long long p : parts) {
    v.emplace_back(p);
  }
  return Composition(std::move(v));
}

inline std::vector<BigInt> big(std::initializer_list<long long> values) {
  std::vector<BigInt> v;
  v.reserve(values.size());
  for (long long x : values) {
    v.emplace_back(x);
  }
  return v;
}

}  // namespace communal::testing
