#include "nefslope/numdata.hpp"

#include "nefslope/polyroot.hpp"

#include <sstream>

namespace nefslope {

// --- RationalMatrix -----------------------------------------------------------

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : n_(rows.size()), data_() {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("RationalMatrix rows must form a square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& entries) {
  RationalMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

bool RationalMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size();
  RationalMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

std::vector<Rational> characteristic_polynomial(const RationalMatrix& a) {
  // Faddeev-LeVerrier: N_k = A N_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A N_k) / k
  const std::size_t n = a.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix acc(n);
  const RationalMatrix id = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    acc = a * acc + c[n - k + 1] * id;
    c[n - k] = -(a * acc).trace() / Rational(static_cast<long long>(k));
  }
  return c;
}

std::size_t nullity(const RationalMatrix& a) {
  RationalMatrix m = a;
  const std::size_t n = m.size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(rank, j));
    for (std::size_t i = rank + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const Rational factor = m(i, col) / m(rank, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(rank, j);
    }
    ++rank;
  }
  return n - rank;
}

// --- profiles -------------------------------------------------------------------

void check_model(const SymMatrixModel& m) {
  if (m.n == 0) throw InputError("matrix model: n must be positive");
  if (m.F.size() != m.n) throw InputError("matrix model: F must be n x n");
  if (!m.F.is_symmetric()) throw InputError("matrix model: F must be symmetric");
  if (m.Ln <= 0) throw InputError("matrix model: Ln must be positive");
}

IntersectionProfile profile_from_matrix(const SymMatrixModel& m) {
  check_model(m);
  const std::vector<Rational> charpoly = characteristic_polynomial(m.F);
  IntersectionProfile p{m.n, std::vector<Integer>(m.n + 1)};
  for (unsigned k = 0; k <= m.n; ++k) {
    Rational x = Rational(m.Ln) * charpoly[k] / Rational(binomial(m.n, k));
    if ((m.n - k) % 2 == 1) x = -x;
    if (denominator_of(x) != 1)
      throw NonIntegralProfile("L^" + std::to_string(k) + ".M^" + std::to_string(m.n - k) + " = " + to_string(x) +
                               " is not an integer");
    p.v[k] = numerator_of(x);
  }
  return p;
}

void require_syntactic(const IntersectionProfile& p) {
  auto report = validate(p, ValidationLevel::Syntactic);
  if (!report.ok()) throw InvalidProfile(report.violation->check + ": " + report.violation->detail);
}

std::optional<Rational> is_proportional(const IntersectionProfile& p) {
  require_syntactic(p);
  const Rational t(p.v[p.n - 1], p.v[p.n]);
  Rational power = 1;
  for (unsigned j = 0; j <= p.n; ++j) {
    // j = n - k
    if (Rational(p.v[p.n - j]) != power * Rational(p.v[p.n])) return std::nullopt;
    power *= t;
  }
  return t;
}

std::string to_string(ValidationLevel level) {
  switch (level) {
    case ValidationLevel::Syntactic: return "syntactic";
    case ValidationLevel::Spectral: return "spectral";
    case ValidationLevel::SurfaceHodge: return "hodge";
  }
  return "syntactic";
}

ValidationLevel parse_validation_level(std::string_view text) {
  if (text == "syntactic") return ValidationLevel::Syntactic;
  if (text == "spectral") return ValidationLevel::Spectral;
  if (text == "hodge") return ValidationLevel::SurfaceHodge;
  throw InputError("unknown validation level '" + std::string(text) + "'");
}

ValidationReport validate(const IntersectionProfile& p, ValidationLevel level) {
  ValidationReport report{level, std::nullopt};
  auto fail = [&](std::string check, std::string detail) {
    report.violation = Violation{std::move(check), std::move(detail)};
    return report;
  };

  if (p.n == 0) return fail("dimension", "n must be positive");
  if (p.v.size() != p.n + 1)
    return fail("length", "expected " + std::to_string(p.n + 1) + " entries, got " + std::to_string(p.v.size()));
  if (p.v[p.n] <= 0) return fail("polarization", "L^n = " + to_string(p.v[p.n]) + " is not positive");
  if (level == ValidationLevel::Syntactic) return report;

  // for surfaces the Hodge inequality is the discriminant condition, so it is
  // checked first to report the intersection numbers as the witness
  if (level == ValidationLevel::SurfaceHodge) {
    if (p.n != 2)
      return fail("hodge-not-applicable", "the Hodge index check needs n = 2, got n = " + std::to_string(p.n));
    const Integer& M2 = p.v[0];
    const Integer& LM = p.v[1];
    const Integer& L2 = p.v[2];
    if (LM * LM < L2 * M2)
      return fail("hodge", "(L.M)^2 = " + to_string(Integer(LM * LM)) + " < L^2.M^2 = " + to_string(Integer(L2 * M2)));
  }

  const IntPolynomial chi = chi_polynomial(p);
  const unsigned real = real_root_count_with_multiplicity(chi);
  if (real != p.n)
    return fail("real-spectrum", "chi-polynomial has " + std::to_string(real) + " real roots (with multiplicity) of " +
                                     std::to_string(p.n));
  return report;
}

IntersectionProfile binary_profile(const IntersectionProfile& p, const Integer& a, const Integer& b) {
  require_syntactic(p);
  const unsigned n = p.n;
  IntersectionProfile w{n, std::vector<Integer>(n + 1)};
  for (unsigned k = 0; k <= n; ++k) {
    // L^k (aL + bM)^(n-k) = sum_j C(n-k, j) a^(n-k-j) b^j L^(n-j) M^j
    const unsigned m = n - k;
    Integer sum = 0;
    for (unsigned j = 0; j <= m; ++j)
      sum += binomial(m, j) * pow(a, m - j) * pow(b, j) * p.v[n - j];
    w.v[k] = sum;
  }
  return w;
}

}  // namespace nefslope
