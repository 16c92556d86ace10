#include "nefslope/slope.hpp"

#include <algorithm>

namespace nefslope {

NefReport is_nef(const IntersectionProfile& b) {
  require_syntactic(b);
  NefReport report;
  report.values = b.v;
  report.nef = true;
  for (unsigned k = 0; k <= b.n; ++k) {
    if (b.v[k] < 0) {
      report.nef = false;
      report.witness = k;
      break;
    }
  }
  report.ample = report.nef && b.v[0] > 0;
  return report;
}

namespace {

std::vector<CandidateEval> positive_candidates(const IntPolynomial& chi) {
  std::vector<CandidateEval> out;
  for (const auto& c : rational_root_candidates(chi)) {
    if (c <= 0) break;  // candidates are sorted descending
    out.push_back(CandidateEval{c, chi(c)});
  }
  return out;
}

// Tightens zeta until its interval isolates it among all roots of chi.
Rationality decide_rationality(const IntPolynomial& chi, const SturmChain& chain, AlgebraicNumber& zeta) {
  Rationality r;
  r.trace.candidates = positive_candidates(chi);
  if (zeta.exact) {
    // zeta = q/p in lowest terms, slope = p/q
    const Rational& z = *zeta.exact;
    r.verdict = Verdict::Rational;
    r.p = denominator_of(z);
    r.q = numerator_of(z);
    for (std::size_t i = 0; i < r.trace.candidates.size(); ++i)
      if (r.trace.candidates[i].value == z) r.trace.maximal_root = i;
    Rational lo = z - 1;
    while (sturm_count(chain, lo, z) > 1) lo = (lo + z) / 2;
    r.trace.interval_lo = lo;
    r.trace.interval_hi = z;
  } else {
    r.verdict = Verdict::Irrational;
    while (sturm_count(chain, zeta.lo, zeta.hi) > 1) zeta = bisect(zeta);
    r.trace.interval_lo = zeta.lo;
    r.trace.interval_hi = zeta.hi;
  }
  r.trace.roots_in_interval = sturm_count(chain, r.trace.interval_lo, r.trace.interval_hi);
  r.trace.roots_above = sturm_count(chain, r.trace.interval_hi, std::nullopt);
  return r;
}

}  // namespace

SlopeResult slope(const IntersectionProfile& p) {
  require_syntactic(p);
  SlopeResult result;
  result.chi = chi_polynomial(p);
  if (result.chi.degree() < 1) throw DegenerateInput("chi-polynomial is constant");

  const SturmChain chain(result.chi);
  result.positive_roots = sturm_count(chain, Rational(0), std::nullopt);
  if (result.positive_roots == 0) return result;

  // a positive real root exists, so the maximal root is positive
  AlgebraicNumber zeta = *isolate_max_root(result.chi);
  Rationality rationality = decide_rationality(result.chi, chain, zeta);

  if (rationality.verdict == Verdict::Rational) {
    if (!divides(rationality.p, p.top_power_L()) || !divides(rationality.q, p.top_power_M()))
      throw std::logic_error("rational slope violates p | L^n, q | M^n");
  }
  AlgebraicNumber sigma = reciprocal(zeta);
  result.finite = FiniteSlope{std::move(zeta), std::move(sigma), std::move(rationality)};
  return result;
}

Rationality certify_rationality(const IntersectionProfile& p) {
  SlopeResult result = slope(p);
  if (result.is_infinite()) throw PreconditionError("slope is infinite; rationality is not defined");
  return std::move(result.finite->rationality);
}

bool verify_certificate(const IntersectionProfile& p, const SlopeResult& result) {
  const IntPolynomial chi = chi_polynomial(p);
  if (!(chi == result.chi)) return false;
  const SturmChain chain(chi);
  const unsigned positive = sturm_count(chain, Rational(0), std::nullopt);
  if (positive != result.positive_roots) return false;
  if (result.is_infinite()) return positive == 0;
  if (positive == 0) return false;

  const FiniteSlope& f = *result.finite;
  const CandidateTrace& t = f.rationality.trace;
  if (!is_valid(f.zeta) || !is_valid(f.slope)) return false;
  if (sturm_count(chain, t.interval_lo, t.interval_hi) != 1 || t.roots_in_interval != 1) return false;
  if (sturm_count(chain, t.interval_hi, std::nullopt) != 0 || t.roots_above != 0) return false;

  // candidate evaluations are exact and complete
  std::vector<CandidateEval> expected;
  for (const auto& c : rational_root_candidates(chi))
    if (c > 0) expected.push_back(CandidateEval{c, chi(c)});
  if (expected.size() != t.candidates.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (expected[i].value != t.candidates[i].value || expected[i].evaluation != t.candidates[i].evaluation)
      return false;

  if (f.rationality.verdict == Verdict::Rational) {
    if (!t.maximal_root) return false;
    const CandidateEval& root = t.candidates[*t.maximal_root];
    if (root.evaluation != 0 || root.value != t.interval_hi) return false;
    if (Rational(f.rationality.q, f.rationality.p) != root.value) return false;
    if (gcd(f.rationality.p, f.rationality.q) != 1) return false;
    return divides(f.rationality.p, p.top_power_L()) && divides(f.rationality.q, p.top_power_M());
  }
  // irrational: no candidate inside the isolating interval is a root
  for (const auto& c : t.candidates)
    if (c.value > t.interval_lo && c.value <= t.interval_hi && c.evaluation == 0) return false;
  return !t.maximal_root;
}

Rational slope_lower_bound(const IntersectionProfile& p) {
  require_syntactic(p);
  if (is_nef(binary_profile(p, 0, -1)).nef) throw NegationIsNef("-M is nef, so the slope is infinite");
  Rational best = 0;
  for (unsigned k = 0; k < p.n; ++k)
    best = std::max(best, Rational(binomial(p.n, k) * abs(p.v[k]), p.v[p.n]));
  return 1 / (1 + best);
}

std::optional<AlgebraicNumber> s_invariant(const IntersectionProfile& p) {
  SlopeResult result = slope(p);
  if (result.is_infinite()) return std::nullopt;
  return std::move(result.finite->zeta);
}

}  // namespace nefslope
