#pragma once

#include "nefslope/numdata.hpp"
#include "nefslope/polyroot.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace nefslope {

/// Nefness of B read from its profile w[k] = L^k . B^(n-k).
struct NefReport {
  std::vector<Integer> values;       // values[k] = L^k . B^(n-k)
  bool nef = false;
  std::optional<unsigned> witness;   // first k with a negative value
  bool ample = false;                // nef and B^n > 0
};

NefReport is_nef(const IntersectionProfile& b);

struct CandidateEval {
  Rational value;
  Rational evaluation;  // chi-polynomial at value, exact
};

/// Checkable record of the rationality decision for the maximal root zeta.
/// Candidates are the positive values r/s with r | constant term (after
/// removing any u^m factor) and s | leading coefficient, descending.
struct CandidateTrace {
  std::vector<CandidateEval> candidates;
  /// Index into candidates of the maximal root when it is rational.
  std::optional<std::size_t> maximal_root;
  /// Isolating interval (lo, hi] of zeta and the Sturm counts of the
  /// chi-polynomial over it (must be 1) and over (hi, +inf) (must be 0).
  Rational interval_lo;
  Rational interval_hi;
  unsigned roots_in_interval = 0;
  unsigned roots_above = 0;
};

enum class Verdict { Rational, Irrational };

struct Rationality {
  Verdict verdict = Verdict::Irrational;
  Integer p;  // slope = p / q when rational
  Integer q;
  CandidateTrace trace;
};

struct FiniteSlope {
  AlgebraicNumber zeta;
  AlgebraicNumber slope;
  Rationality rationality;
};

/// sigma(L, M) = sup{t : L - tM nef}. Infinite iff the chi-polynomial has no
/// positive real root.
struct SlopeResult {
  IntPolynomial chi;
  unsigned positive_roots = 0;  // Sturm count over (0, +inf)
  std::optional<FiniteSlope> finite;

  bool is_infinite() const { return !finite.has_value(); }
  bool is_rational() const { return finite && finite->rationality.verdict == Verdict::Rational; }
};

class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NegationIsNef : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SlopeResult slope(const IntersectionProfile& p);

/// Throws PreconditionError when the slope is infinite.
Rationality certify_rationality(const IntersectionProfile& p);

/// Re-derives every claim of a slope certificate from the profile alone.
bool verify_certificate(const IntersectionProfile& p, const SlopeResult& result);

/// (1 + max_{k<n} C(n,k) |v[k]| / v[n])^-1. Throws NegationIsNef when -M is nef.
Rational slope_lower_bound(const IntersectionProfile& p);

/// s_L(J_D) = 1 / sigma(L, D) = zeta; nullopt marks an infinite slope, for
/// which no s-invariant value is assigned.
std::optional<AlgebraicNumber> s_invariant(const IntersectionProfile& p);

}  // namespace nefslope
