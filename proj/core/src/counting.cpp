#include "communal/counting.hpp"

#include <stdexcept>

#include "communal/error.hpp"

namespace communal {

SlackValue slack(const AlphaSystem& sys, const BigInt& g) {
  if (g < 0) {
    throw std::invalid_argument("slack requires nonnegative g");
  }
  BigInt value{0};
  for (std::size_t i = 0; i < sys.part_count(); ++i) {
    value += sys.floor_share(i, g);
  }
  value -= g;
  return SlackValue{g, value};
}

BigInt multiset_count(const BigInt& m, std::size_t k) {
  if (k == 0) {
    throw std::invalid_argument("multiset_count requires k >= 1");
  }
  if (m < 0) {
    return 0;
  }
  return binomial(m + k - 1, k - 1);
}

BigInt count_compositions(const AlphaSystem& sys, const BigInt& g) {
  return multiset_count(slack(sys, g).value, sys.part_count());
}

namespace {

void emit_bijective(const AlphaSystem& sys, const std::vector<BigInt>& floors,
                    std::vector<BigInt>& parts, std::size_t depth, const BigInt& remaining,
                    std::vector<Composition>& out) {
  const std::size_t k = sys.part_count();
  if (depth == k - 1) {
    parts[depth] = floors[depth] - remaining;
    out.emplace_back(parts);
    return;
  }
  // Larger slack share first, so the resulting part runs ascending and the
  // output comes out in lexicographic order without a sort.
  for (BigInt eps = remaining; eps >= 0; --eps) {
    parts[depth] = floors[depth] - eps;
    emit_bijective(sys, floors, parts, depth + 1, remaining - eps, out);
  }
}

}  // namespace

std::vector<Composition> enumerate_bijective(const AlphaSystem& sys, const BigInt& g,
                                             const BigInt& cap) {
  const std::size_t k = sys.part_count();
  const SlackValue s = slack(sys, g);
  std::vector<Composition> out;
  if (s.value < 0) {
    return out;
  }

  std::vector<BigInt> floors(k);
  for (std::size_t i = 0; i < k; ++i) {
    floors[i] = sys.floor_share(i, g);
    if (s.value > floors[i]) {
      // Admissibility guarantees s_g <= floor(alpha_i * g) whenever
      // s_g >= 0; every emitted part stays nonnegative because of it.
      throw std::logic_error("slack bound violated: s_g exceeds a floor share");
    }
  }

  const BigInt expected = multiset_count(s.value, k);
  if (expected > cap) {
    raise(Errc::ResultTooLarge,
          "enumeration would produce " + expected.str() + " tuples, cap is " + cap.str());
  }
  if (expected <= BigInt(1) << 32) {
    out.reserve(expected.convert_to<std::size_t>());
  }

  std::vector<BigInt> parts(k);
  emit_bijective(sys, floors, parts, 0, s.value, out);
  return out;
}

namespace {

void emit_oracle(const AlphaSystem& sys, const std::vector<BigInt>& floors,
                 std::vector<BigInt>& parts, std::size_t depth, const BigInt& remaining,
                 const BigInt& cap, std::vector<Composition>& out) {
  const std::size_t k = sys.part_count();
  if (depth == k - 1) {
    if (remaining <= floors[depth]) {
      if (BigInt(out.size()) >= cap) {
        raise(Errc::ResultTooLarge, "enumeration exceeds cap of " + cap.str() + " tuples");
      }
      parts[depth] = remaining;
      out.emplace_back(parts);
    }
    return;
  }
  const BigInt limit = floors[depth] < remaining ? floors[depth] : remaining;
  for (BigInt v = 0; v <= limit; ++v) {
    parts[depth] = v;
    emit_oracle(sys, floors, parts, depth + 1, remaining - v, cap, out);
  }
}

}  // namespace

std::vector<Composition> enumerate_oracle(const AlphaSystem& sys, const BigInt& g,
                                          const BigInt& cap) {
  if (g < 0) {
    throw std::invalid_argument("enumerate_oracle requires nonnegative g");
  }
  const std::size_t k = sys.part_count();
  std::vector<BigInt> floors(k);
  for (std::size_t i = 0; i < k; ++i) {
    floors[i] = sys.floor_share(i, g);
  }
  std::vector<Composition> out;
  std::vector<BigInt> parts(k);
  emit_oracle(sys, floors, parts, 0, g, cap, out);
  return out;
}

}  // namespace communal
