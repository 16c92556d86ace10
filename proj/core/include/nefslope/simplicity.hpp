#pragma once

#include "nefslope/numdata.hpp"
#include "nefslope/slope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nefslope {

/// Abelian subvariety Y of dimension dim_y in E^n whose induced polarization
/// has exponent e; the norm-pullback class M = N_Y^* L has f_M = e^2 on Y.
struct NormClassSpec {
  unsigned n = 2;
  unsigned dim_y = 1;
  unsigned e = 1;
};

SymMatrixModel norm_class(const NormClassSpec& spec);

struct NormSlopeCheck {
  bool pass = false;
  bool proportional = false;
  SlopeResult result;
  std::string detail;
};

/// Runs norm_class -> profile_from_matrix -> slope and expects exactly 1/e^2.
NormSlopeCheck norm_slope_check(const NormClassSpec& spec);

/// True when F^2 = e * F for some nonzero integer e (returned), i.e. F is a
/// scaled symmetric idempotent like a norm endomorphism.
std::optional<Integer> norm_exponent(const RationalMatrix& F);

struct KernelWitness {
  RationalMatrix f_b;  // q*I - p*F
  std::size_t nullity = 0;
  bool zero = false;

  /// Nontrivial proper kernel: an abelian subvariety 0 != Y != X.
  bool is_witness(unsigned n) const { return !zero && nullity >= 1 && nullity + 1 <= n; }
};

KernelWitness kernel_rank(const SymMatrixModel& m, const Integer& p, const Integer& q);

enum class ScanVerdict { SkippedProportional, RationalSlopeWitness, RationalNoWitness, Irrational, Infinite };

std::string to_string(ScanVerdict v);

struct ScanInstance {
  std::string label;
  IntersectionProfile profile;
  std::optional<SymMatrixModel> matrix;
};

struct ScanEntry {
  std::string label;
  ScanVerdict verdict = ScanVerdict::Infinite;
  std::optional<Rational> proportional_ratio;
  std::optional<Integer> p, q;                  // rational slope p/q
  std::optional<IntersectionProfile> boundary;  // B = qL - pM
  std::optional<NefReport> boundary_nef;
  std::optional<KernelWitness> kernel;          // matrix instances only
};

enum class ScanOverall { NonSimpleWitnessFound, ConsistentWithSimple };

std::string to_string(ScanOverall v);

struct SimplicityScan {
  std::vector<ScanEntry> entries;
  ScanOverall overall = ScanOverall::ConsistentWithSimple;
};

class InconsistentContext : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ScanEntry scan_one(const ScanInstance& instance);

/// Instances must share L^n (expected_Ln when given, else the first
/// instance's). jobs > 1 evaluates instances on worker threads; entries
/// keep input order.
SimplicityScan scan(const std::vector<ScanInstance>& instances,
                    const std::optional<Integer>& expected_Ln = std::nullopt, unsigned jobs = 1);

}  // namespace nefslope
