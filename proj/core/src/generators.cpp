#include "nefslope/generators.hpp"

namespace nefslope {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

std::string to_string(GenKind kind) {
  switch (kind) {
    case GenKind::ProductMatrix: return "product-matrix";
    case GenKind::Surface: return "surface";
    case GenKind::Random: return "random";
  }
  return "surface";
}

GenKind parse_gen_kind(std::string_view text) {
  if (text == "product-matrix") return GenKind::ProductMatrix;
  if (text == "surface") return GenKind::Surface;
  if (text == "random") return GenKind::Random;
  throw InputError("unknown generator kind '" + std::string(text) + "'");
}

SymMatrixModel gen_product(unsigned n, const std::vector<std::vector<Integer>>& entries) {
  if (n == 0 || entries.size() != n) throw AsymmetricInput("expected an n x n matrix");
  RationalMatrix F(n);
  for (unsigned i = 0; i < n; ++i) {
    if (entries[i].size() != n) throw AsymmetricInput("expected an n x n matrix");
    for (unsigned j = 0; j < n; ++j) F(i, j) = Rational(entries[i][j]);
  }
  if (!F.is_symmetric()) throw AsymmetricInput("matrix is not symmetric");
  return SymMatrixModel{n, std::move(F), factorial(n)};
}

IntersectionProfile gen_surface(const Integer& L2, const Integer& LM, const Integer& M2) {
  if (L2 < 1) throw InputError("L^2 must be at least 1");
  if (LM * LM < L2 * M2)
    throw HodgeViolation("(L.M)^2 = " + to_string(Integer(LM * LM)) + " < L^2.M^2 = " + to_string(Integer(L2 * M2)));
  return IntersectionProfile{2, {M2, LM, L2}};
}

namespace {

// Draw order: upper triangle row by row; each entry draws its numerator,
// then its denominator when den_bound > 1.
SymMatrixModel draw_matrix(SplitMix64& rng, unsigned n, std::int64_t bound, std::int64_t den_bound) {
  RationalMatrix F(n);
  Integer lcm = 1;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i; j < n; ++j) {
      const std::int64_t num = rng.uniform(-bound, bound);
      const std::int64_t den = den_bound > 1 ? rng.uniform(1, den_bound) : 1;
      F(i, j) = F(j, i) = Rational(num, den);
      lcm = boost::multiprecision::lcm(lcm, denominator_of(F(i, j)));
    }
  // minors of size m have denominators dividing lcm^m, and n!/C(n,k) is integral
  return SymMatrixModel{n, std::move(F), factorial(n) * pow(lcm, n)};
}

}  // namespace

std::vector<Instance> gen_random(const GenSpec& spec) {
  if (spec.bound < 1 || spec.den_bound < 1) throw InputError("generator bounds must be positive");
  if (spec.kind != GenKind::Surface && spec.n < 1) throw InputError("generator dimension must be positive");
  SplitMix64 rng(spec.seed);
  std::vector<Instance> out;
  out.reserve(spec.count);
  while (out.size() < spec.count) {
    switch (spec.kind) {
      case GenKind::ProductMatrix:
        out.emplace_back(draw_matrix(rng, spec.n, spec.bound, spec.den_bound));
        break;
      case GenKind::Surface: {
        // draw order M^2, L.M, L^2; rejected draws are consumed
        const Integer M2 = rng.uniform(-spec.bound, spec.bound);
        const Integer LM = rng.uniform(-spec.bound, spec.bound);
        const Integer L2 = rng.uniform(1, spec.bound);
        if (LM * LM >= L2 * M2) out.emplace_back(IntersectionProfile{2, {M2, LM, L2}});
        break;
      }
      case GenKind::Random: {
        IntersectionProfile p{spec.n, std::vector<Integer>(spec.n + 1)};
        for (unsigned k = 0; k < spec.n; ++k) p.v[k] = rng.uniform(-spec.bound, spec.bound);
        p.v[spec.n] = rng.uniform(1, spec.bound);
        out.emplace_back(std::move(p));
        break;
      }
    }
  }
  return out;
}

}  // namespace nefslope
