#include "communal/monoid.hpp"

#include <stdexcept>
#include <utility>

#include "communal/error.hpp"

namespace communal {

GeneratorSet generators(const AlphaSystem& sys) {
  const std::size_t k = sys.part_count();
  const BigInt& n_product = sys.denominator_product();
  GeneratorSet set;
  set.gens.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const BigInt scale = n_product / sys.denominator(i);
    std::vector<BigInt> parts(k);
    for (std::size_t j = 0; j < k; ++j) {
      const BigRat entry =
          BigRat(scale) * (j == i ? sys.complementary_share(i) : sys.alphas()[j]);
      if (boost::multiprecision::denominator(entry) != 1) {
        throw std::logic_error("generator entry is not integral");
      }
      parts[j] = boost::multiprecision::numerator(entry);
    }
    Composition gen{std::move(parts)};
    if (gen.total() != scale || !is_communal(sys, gen)) {
      throw std::logic_error("generator fails its defining invariants");
    }
    set.gens.push_back(std::move(gen));
  }
  return set;
}

namespace {

// Builds the base element for a residue tuple whose membership has already
// been established: b = (1/A) sum_i a_i * x_i, weight = sum of entries.
BaseElement make_base_element(const AlphaSystem& sys, const GeneratorSet& gens,
                              std::vector<BigInt> residues) {
  const std::size_t k = sys.part_count();
  const BigInt& modulus = sys.modulus();
  std::vector<BigInt> base(k);
  for (std::size_t j = 0; j < k; ++j) {
    BigInt t{0};
    for (std::size_t i = 0; i < k; ++i) {
      t += residues[i] * gens.gens[i][j];
    }
    if (t % modulus != 0) {
      throw std::logic_error("residue tuple does not give an integral base tuple");
    }
    base[j] = t / modulus;
  }
  Composition base_tuple{std::move(base)};
  if (!is_communal(sys, base_tuple)) {
    throw std::logic_error("base tuple is not communal");
  }

  BigRat scaled{0};
  for (std::size_t i = 0; i < k; ++i) {
    scaled += BigRat(residues[i], sys.denominator(i));
  }
  scaled *= BigRat(sys.denominator_product(), modulus);
  if (boost::multiprecision::denominator(scaled) != 1 ||
      boost::multiprecision::numerator(scaled) != base_tuple.total()) {
    throw std::logic_error("weight formula disagrees with base tuple sum");
  }

  BigInt total = base_tuple.total();
  return BaseElement{std::move(residues), std::move(base_tuple), std::move(total)};
}

// Depth-first scan of [0, A)^k in lexicographic order. Residues of the
// partial combination sum_i a_i * x_i are carried mod A, so the membership
// test at each leaf is k comparisons against zero.
void scan_residues(const AlphaSystem& sys, const GeneratorSet& gens,
                   const std::vector<std::vector<BigInt>>& gen_mod, std::size_t depth,
                   std::vector<BigInt>& current, std::vector<BigInt> partial,
                   std::vector<BaseElement>& out) {
  const std::size_t k = sys.part_count();
  const BigInt& modulus = sys.modulus();
  for (BigInt a = 0; a < modulus; ++a) {
    current[depth] = a;
    if (depth == k - 1) {
      bool member = true;
      for (std::size_t j = 0; j < k; ++j) {
        if (partial[j] != 0) {
          member = false;
          break;
        }
      }
      if (member) {
        out.push_back(make_base_element(sys, gens, current));
      }
    } else {
      scan_residues(sys, gens, gen_mod, depth + 1, current, partial, out);
    }
    for (std::size_t j = 0; j < k; ++j) {
      partial[j] += gen_mod[depth][j];
      if (partial[j] >= modulus) {
        partial[j] -= modulus;
      }
    }
  }
}

}  // namespace

std::vector<BaseElement> base_set(const AlphaSystem& sys, const BigInt& scan_cap) {
  const std::size_t k = sys.part_count();
  const BigInt& modulus = sys.modulus();
  const BigInt candidates = boost::multiprecision::pow(modulus, static_cast<unsigned>(k));
  if (candidates > scan_cap) {
    raise(Errc::ScanCapExceeded, "scan space has " + candidates.str() +
                                     " candidate tuples, cap is " + scan_cap.str());
  }

  const GeneratorSet gens = generators(sys);
  std::vector<std::vector<BigInt>> gen_mod(k, std::vector<BigInt>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      gen_mod[i][j] = gens.gens[i][j] % modulus;
    }
  }

  std::vector<BaseElement> out;
  std::vector<BigInt> current(k);
  scan_residues(sys, gens, gen_mod, 0, current, std::vector<BigInt>(k), out);
  return out;
}

BigInt weight(const AlphaSystem& sys, const BaseElement& elem) {
  BigRat scaled{0};
  for (std::size_t i = 0; i < elem.residues.size(); ++i) {
    scaled += BigRat(elem.residues[i], sys.denominator(i));
  }
  scaled *= BigRat(sys.denominator_product(), sys.modulus());
  if (boost::multiprecision::denominator(scaled) != 1) {
    throw std::logic_error("weight is not integral");
  }
  const BigInt value = boost::multiprecision::numerator(scaled);
  if (value != elem.base.total() || value != elem.weight) {
    throw std::logic_error("weight disagrees with base tuple sum");
  }
  return value;
}

Decomposition decompose(const AlphaSystem& sys, const Composition& c) {
  return decompose(sys, generators(sys), c);
}

Decomposition decompose(const AlphaSystem& sys, const GeneratorSet& gens, const Composition& c) {
  if (!is_communal(sys, c)) {
    raise(Errc::NotCommunal, "tuple " + c.display() + " violates a bound");
  }
  const std::size_t k = sys.part_count();
  const BigInt& modulus = sys.modulus();
  const BigInt& g = c.total();

  std::vector<BigInt> residues(k);
  std::vector<BigInt> coefficients(k);
  for (std::size_t j = 0; j < k; ++j) {
    const BigInt margin = sys.numerator(j) * g - sys.denominator(j) * c[j];
    residues[j] = margin % modulus;
    coefficients[j] = (margin - residues[j]) / modulus;
  }

  Decomposition d{make_base_element(sys, gens, std::move(residues)), std::move(coefficients)};
  if (recompose(sys, gens, d) != c) {
    throw std::logic_error("decomposition does not recompose to the input");
  }
  return d;
}

Composition recompose(const AlphaSystem& sys, const Decomposition& d) {
  return recompose(sys, generators(sys), d);
}

Composition recompose(const AlphaSystem& sys, const GeneratorSet& gens, const Decomposition& d) {
  const std::size_t k = sys.part_count();
  if (d.coefficients.size() != k || d.base.base.size() != k) {
    raise(Errc::ArityMismatch, "decomposition arity disagrees with the system");
  }
  for (const BigInt& coeff : d.coefficients) {
    if (coeff < 0) {
      throw std::invalid_argument("recompose requires nonnegative coefficients");
    }
  }
  std::vector<BigInt> parts(k);
  for (std::size_t j = 0; j < k; ++j) {
    parts[j] = d.base.base[j];
    for (std::size_t i = 0; i < k; ++i) {
      parts[j] += d.coefficients[i] * gens.gens[i][j];
    }
  }
  Composition result{std::move(parts)};
  if (!is_communal(sys, result)) {
    throw std::logic_error("recomposed tuple is not communal");
  }
  return result;
}

}  // namespace communal
