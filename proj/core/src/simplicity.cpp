#include "nefslope/simplicity.hpp"

#include <atomic>
#include <exception>
#include <thread>

namespace nefslope {

SymMatrixModel norm_class(const NormClassSpec& spec) {
  if (spec.n < 2 || spec.dim_y < 1 || spec.dim_y >= spec.n || spec.e < 1)
    throw std::invalid_argument("norm class needs 1 <= dim Y < n and e >= 1");
  std::vector<Rational> diag(spec.n, Rational(0));
  const Rational e2 = Rational(spec.e) * spec.e;
  for (unsigned i = 0; i < spec.dim_y; ++i) diag[i] = e2;
  return SymMatrixModel{spec.n, RationalMatrix::diagonal(diag), factorial(spec.n)};
}

NormSlopeCheck norm_slope_check(const NormClassSpec& spec) {
  NormSlopeCheck check;
  const IntersectionProfile profile = profile_from_matrix(norm_class(spec));
  check.proportional = is_proportional(profile).has_value();
  check.result = slope(profile);
  const Integer e2 = Integer(spec.e) * spec.e;
  if (check.proportional) {
    check.detail = "norm class is proportional to L";
  } else if (!check.result.is_rational()) {
    check.detail = check.result.is_infinite() ? "slope is infinite" : "slope is irrational";
  } else {
    const Rationality& r = check.result.finite->rationality;
    check.pass = r.p == 1 && r.q == e2;
    check.detail = "slope " + to_string(r.p) + "/" + to_string(r.q) + ", expected 1/" + to_string(e2);
  }
  return check;
}

std::optional<Integer> norm_exponent(const RationalMatrix& F) {
  if (!F.is_symmetric() || F.is_zero()) return std::nullopt;
  const RationalMatrix sq = F * F;
  // e = (F^2)_ij / F_ij at any nonzero entry of F
  std::optional<Rational> e;
  for (std::size_t i = 0; i < F.size() && !e; ++i)
    for (std::size_t j = 0; j < F.size() && !e; ++j)
      if (F(i, j) != 0) e = sq(i, j) / F(i, j);
  if (!e || denominator_of(*e) != 1 || *e <= 0) return std::nullopt;
  if (!(sq == *e * F)) return std::nullopt;
  return numerator_of(*e);
}

KernelWitness kernel_rank(const SymMatrixModel& m, const Integer& p, const Integer& q) {
  check_model(m);
  KernelWitness w;
  w.f_b = Rational(q) * RationalMatrix::identity(m.n) - Rational(p) * m.F;
  w.nullity = nullity(w.f_b);
  w.zero = w.f_b.is_zero();
  return w;
}

std::string to_string(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::SkippedProportional: return "skipped-proportional";
    case ScanVerdict::RationalSlopeWitness: return "rational-slope-witness";
    case ScanVerdict::RationalNoWitness: return "rational-no-witness";
    case ScanVerdict::Irrational: return "irrational";
    case ScanVerdict::Infinite: return "infinite";
  }
  return "infinite";
}

std::string to_string(ScanOverall v) {
  return v == ScanOverall::NonSimpleWitnessFound ? "non-simple-witness-found" : "consistent-with-simple";
}

ScanEntry scan_one(const ScanInstance& instance) {
  ScanEntry entry;
  entry.label = instance.label;
  if (auto t = is_proportional(instance.profile)) {
    entry.verdict = ScanVerdict::SkippedProportional;
    entry.proportional_ratio = *t;
    return entry;
  }
  const SlopeResult result = slope(instance.profile);
  if (result.is_infinite()) {
    entry.verdict = ScanVerdict::Infinite;
    return entry;
  }
  const Rationality& r = result.finite->rationality;
  if (r.verdict == Verdict::Irrational) {
    entry.verdict = ScanVerdict::Irrational;
    return entry;
  }
  entry.p = r.p;
  entry.q = r.q;
  entry.boundary = binary_profile(instance.profile, r.q, -r.p);
  entry.boundary_nef = is_nef(*entry.boundary);
  bool witness = entry.boundary_nef->nef && !entry.boundary_nef->ample;
  if (instance.matrix) {
    entry.kernel = kernel_rank(*instance.matrix, r.p, r.q);
    witness = witness && entry.kernel->is_witness(instance.matrix->n);
  }
  entry.verdict = witness ? ScanVerdict::RationalSlopeWitness : ScanVerdict::RationalNoWitness;
  return entry;
}

SimplicityScan scan(const std::vector<ScanInstance>& instances, const std::optional<Integer>& expected_Ln,
                    unsigned jobs) {
  for (const auto& inst : instances) require_syntactic(inst.profile);
  if (!instances.empty()) {
    const Integer Ln = expected_Ln ? *expected_Ln : instances.front().profile.top_power_L();
    for (const auto& inst : instances)
      if (inst.profile.top_power_L() != Ln)
        throw InconsistentContext("instance '" + inst.label + "' has L^n = " + to_string(inst.profile.top_power_L()) +
                                  ", expected " + to_string(Ln));
  }

  SimplicityScan out;
  out.entries.resize(instances.size());
  if (jobs <= 1 || instances.size() <= 1) {
    for (std::size_t i = 0; i < instances.size(); ++i) out.entries[i] = scan_one(instances[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(instances.size());
    auto worker = [&] {
      for (std::size_t i = next++; i < instances.size(); i = next++) {
        try {
          out.entries[i] = scan_one(instances[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::vector<std::jthread> pool;
    const unsigned count = std::min<std::size_t>(jobs, instances.size());
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    pool.clear();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  for (const auto& e : out.entries)
    if (e.verdict == ScanVerdict::RationalSlopeWitness) out.overall = ScanOverall::NonSimpleWitnessFound;
  return out;
}

}  // namespace nefslope
