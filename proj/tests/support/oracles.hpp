#pragma once

// Test-only reference computations. None of these call into the library's
// characteristic-polynomial, root-isolation or rationality code.

#include "nefslope/numdata.hpp"
#include "nefslope/generators.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <vector>

namespace nefslope::oracle {

/// det(a) by fraction-exact Gaussian elimination with row swaps.
inline Rational determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      const Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

/// det(uI - F) sampled at u = 0..n and interpolated (Newton divided
/// differences), coefficients ascending.
inline std::vector<Rational> charpoly_by_interpolation(const RationalMatrix& f) {
  const std::size_t n = f.size();
  std::vector<Rational> xs, ys;
  for (std::size_t s = 0; s <= n; ++s) {
    const Rational u(static_cast<long long>(s));
    xs.push_back(u);
    ys.push_back(determinant(u * RationalMatrix::identity(n) - f));
  }
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level <= n; ++level)
    for (std::size_t i = n; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  // expand sum dd[i] * prod_{j<i} (u - xs[j])
  std::vector<Rational> coeffs(n + 1, Rational(0));
  std::vector<Rational> basis{Rational(1)};
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += dd[i] * basis[k];
    std::vector<Rational> next(basis.size() + 1, Rational(0));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      next[k + 1] += basis[k];
      next[k] -= xs[i] * basis[k];
    }
    basis = std::move(next);
  }
  return coeffs;
}

/// Real roots of sum c[k] u^k from the companion-matrix eigenvalues, polished
/// by Newton in long double. Returns empty with ok=false when two roots lie
/// closer than min_gap (the float oracle is not trusted there).
inline std::vector<double> float_real_roots(const std::vector<double>& c, bool& ok, double min_gap = 1e-4) {
  ok = true;
  std::size_t d = c.size() - 1;
  std::size_t zeros = 0;
  while (zeros < d && c[zeros] == 0.0) ++zeros;  // roots at 0
  std::vector<double> q(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end());
  d = q.size() - 1;
  std::vector<std::complex<double>> roots;
  if (zeros > 1) ok = false;
  if (zeros == 1) roots.emplace_back(0.0, 0.0);
  if (d >= 1) {
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t i = 1; i < d; ++i) comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    for (std::size_t i = 0; i < d; ++i) comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) = -q[i] / q[d];
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) roots.push_back(es.eigenvalues()[i]);
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) < min_gap) ok = false;
  std::vector<double> real;
  for (const auto& r : roots) {
    if (std::abs(r.imag()) > 1e-7) continue;
    long double x = r.real();
    for (int it = 0; it < 50; ++it) {
      long double p = 0, dp = 0;
      for (std::size_t k = c.size(); k-- > 0;) {
        dp = dp * x + p;
        p = p * x + c[k];
      }
      if (dp == 0) break;
      const long double step = p / dp;
      x -= step;
      if (std::fabs(static_cast<double>(step)) < 1e-18) break;
    }
    real.push_back(static_cast<double>(x));
  }
  std::sort(real.begin(), real.end());
  return real;
}

/// Rational orthogonal matrix (I - A)(I + A)^-1 from a skew-symmetric A.
inline RationalMatrix cayley_orthogonal(const RationalMatrix& skew) {
  const std::size_t n = skew.size();
  const RationalMatrix id = RationalMatrix::identity(n);
  RationalMatrix plus = id + skew;
  // invert (I + A) by Gauss-Jordan
  RationalMatrix inv = id;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (plus(pivot, col) == 0) ++pivot;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(plus(pivot, j), plus(col, j));
      std::swap(inv(pivot, j), inv(col, j));
    }
    const Rational p = plus(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      plus(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || plus(i, col) == 0) continue;
      const Rational f = plus(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        plus(i, j) -= f * plus(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return (id - skew) * inv;
}

inline RationalMatrix transpose(const RationalMatrix& a) {
  RationalMatrix t(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t(j, i) = a(i, j);
  return t;
}

/// Non-simple model: F = Q D Q^T with integer eigenvalues D (not all equal,
/// max >= 1) and rational orthogonal Q, so the slope is 1/max(D) and the
/// profile is integral with Ln = n!.
inline SymMatrixModel conjugated_diagonal(SplitMix64& rng, unsigned n, std::int64_t eig_bound, std::int64_t skew_bound) {
  std::vector<Rational> d(n);
  for (;;) {
    for (auto& x : d) x = rng.uniform(-eig_bound, eig_bound);
    const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
    if (*lo != *hi && *hi >= 1) break;
  }
  RationalMatrix skew(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      skew(i, j) = rng.uniform(-skew_bound, skew_bound);
      skew(j, i) = -skew(i, j);
    }
  const RationalMatrix q = cayley_orthogonal(skew);
  return SymMatrixModel{n, q * RationalMatrix::diagonal(d) * transpose(q), factorial(n)};
}

inline bool is_perfect_square(const Integer& x) {
  if (x < 0) return false;
  const Integer r = boost::multiprecision::sqrt(x);
  return r * r == x;
}

}  // namespace nefslope::oracle
