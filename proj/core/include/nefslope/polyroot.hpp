#pragma once

#include "nefslope/numbers.hpp"
#include "nefslope/numdata.hpp"

#include <optional>
#include <vector>

namespace nefslope {

/// Univariate polynomial with integer coefficients, ascending degree.
/// The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  /// s*u - r
  static IntPolynomial linear_factor(const Rational& root);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Integer& coeff(std::size_t k) const { return coeffs_.at(k); }
  const Integer& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  /// Sign of p(x), computed on the homogenized integer form.
  int sign_at(const Rational& x) const;
  /// Sign of p(x) as x -> +inf (positive) or -inf (negative direction).
  int sign_at_infinity(bool positive) const;

  IntPolynomial derivative() const;
  IntPolynomial reversed() const;
  Integer content() const;
  /// Divided by its content, with positive leading coefficient.
  IntPolynomial primitive_part() const;
  IntPolynomial operator-() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& s, const IntPolynomial& a);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient a / b when b divides a in Q[u] and the quotient is integral;
/// throws std::domain_error otherwise.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient (zero if both are zero).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive square-free part p / gcd(p, p').
IntPolynomial square_free_part(const IntPolynomial& p);

/// n! * chi(uL - M): c[k] = (-1)^(n-k) * C(n,k) * v[k]. Content is kept.
IntPolynomial chi_polynomial(const IntersectionProfile& p);

/// Signed remainder sequence of the square-free part and its derivative.
class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& p);

  const std::vector<IntPolynomial>& sequence() const { return seq_; }
  const IntPolynomial& base() const { return seq_.front(); }

  /// Sign variations at x, zeros dropped.
  unsigned variations_at(const Rational& x) const;
  unsigned variations_at_infinity(bool positive) const;

 private:
  std::vector<IntPolynomial> seq_;
};

/// Distinct real roots in (lo, hi]; nullopt bounds mean -inf / +inf.
unsigned sturm_count(const SturmChain& chain, const std::optional<Rational>& lo,
                     const std::optional<Rational>& hi);

/// Real roots counted with multiplicity.
unsigned real_root_count_with_multiplicity(const IntPolynomial& p);

/// 1 + max_{k<d} |c[k] / c[d]|; all complex roots lie strictly inside.
Rational cauchy_bound(const IntPolynomial& p);

/// Candidates +-r/s (r | constant term after removing u^m, s | leading), descending.
std::vector<Rational> rational_root_candidates(const IntPolynomial& p);

/// All distinct rational roots, descending, in lowest terms.
std::vector<Rational> rational_roots(const IntPolynomial& p);

/// p with every rational root divided out to full multiplicity, then made
/// square-free. The result has no rational roots.
IntPolynomial irrational_part(const IntPolynomial& p);

/// Exact real algebraic number: the unique root of minpoly_factor in (lo, hi].
struct AlgebraicNumber {
  IntPolynomial minpoly_factor;
  Rational lo;
  Rational hi;
  std::optional<Rational> exact;

  static AlgebraicNumber from_rational(const Rational& r);

  bool is_rational() const { return exact.has_value(); }
  Rational width() const { return hi - lo; }
  /// Midpoint of the interval, or the exact value.
  double approx() const;
};

/// Largest real root, or nullopt when p has no real roots.
std::optional<AlgebraicNumber> isolate_max_root(const IntPolynomial& p);

/// Every distinct real root, ascending.
std::vector<AlgebraicNumber> isolate_real_roots(const IntPolynomial& p);

/// Bisects until hi - lo <= width; exact numbers are returned unchanged.
AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width);

/// Bisects once, keeping the root.
AlgebraicNumber bisect(const AlgebraicNumber& a);

/// Sign of (a - r), decided exactly.
int compare(const AlgebraicNumber& a, const Rational& r);

/// 1 / a for a > 0; the defining polynomial is the coefficient reversal.
AlgebraicNumber reciprocal(const AlgebraicNumber& a);

/// Sturm count of the defining polynomial over (lo, hi] equals 1 and the
/// exact value, when present, is a root inside the interval.
bool is_valid(const AlgebraicNumber& a);

}  // namespace nefslope
