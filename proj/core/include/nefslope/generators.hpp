#pragma once

#include "nefslope/numdata.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace nefslope {

/// SplitMix64 (Steele, Lea, Flood). state += 0x9E3779B97F4A7C15, then
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z ^= z >> 31
/// Integer draws in [lo, hi] are lo + next() % (hi - lo + 1).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

enum class GenKind { ProductMatrix, Surface, Random };

std::string to_string(GenKind kind);
GenKind parse_gen_kind(std::string_view text);

/// product-matrix: symmetric n x n entries in [-bound, bound], denominators in
///   [1, den_bound] (den_bound 1 gives integer matrices, Ln = n!).
/// surface: (M^2, L.M, L^2) with M^2, L.M in [-bound, bound], L^2 in [1, bound],
///   rejection-sampled against the Hodge inequality.
/// random: profile of dimension n, v[k] in [-bound, bound], v[n] in [1, bound].
struct GenSpec {
  GenKind kind = GenKind::Surface;
  unsigned n = 2;
  std::int64_t bound = 10;
  std::int64_t den_bound = 1;
  std::uint64_t seed = 0;
  std::size_t count = 1;
};

using Instance = std::variant<IntersectionProfile, SymMatrixModel>;

class AsymmetricInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HodgeViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SymMatrixModel gen_product(unsigned n, const std::vector<std::vector<Integer>>& entries);

IntersectionProfile gen_surface(const Integer& L2, const Integer& LM, const Integer& M2);

std::vector<Instance> gen_random(const GenSpec& spec);

}  // namespace nefslope
