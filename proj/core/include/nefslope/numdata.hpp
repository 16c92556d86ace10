#pragma once

#include "nefslope/numbers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nefslope {

/// Intersection numbers v[k] = L^k . M^(n-k), k = 0..n, of a bundle M
/// against a polarization L on an n-dimensional abelian variety.
struct IntersectionProfile {
  unsigned n = 0;
  std::vector<Integer> v;

  const Integer& top_power_L() const { return v.at(n); }
  const Integer& top_power_M() const { return v.at(0); }

  friend bool operator==(const IntersectionProfile&, const IntersectionProfile&) = default;
};

/// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), data_(n * n) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const std::vector<Rational>& entries);

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_symmetric() const;
  bool is_zero() const;
  Rational trace() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

/// Characteristic polynomial det(u*I - a), coefficients ascending, monic.
std::vector<Rational> characteristic_polynomial(const RationalMatrix& a);

/// Nullity of a over Q, by fraction-exact Gaussian elimination.
std::size_t nullity(const RationalMatrix& a);

/// Matrix model of f_M = phi_L^{-1} o phi_M on a product of elliptic curves
/// E^n with End(E) = Z; Ln is the value of L^n (n! for the product
/// principal polarization).
struct SymMatrixModel {
  unsigned n = 0;
  RationalMatrix F;
  Integer Ln;

  friend bool operator==(const SymMatrixModel&, const SymMatrixModel&) = default;
};

/// Throws InputError unless F is n x n, symmetric and Ln > 0.
void check_model(const SymMatrixModel& m);

class NonIntegralProfile : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidProfile : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ValidationLevel { Syntactic, Spectral, SurfaceHodge };

std::string to_string(ValidationLevel level);
ValidationLevel parse_validation_level(std::string_view text);

struct Violation {
  std::string check;   // "length", "polarization", "real-spectrum", "hodge", "hodge-not-applicable"
  std::string detail;  // human-readable witness data
};

struct ValidationReport {
  ValidationLevel level = ValidationLevel::Syntactic;
  std::optional<Violation> violation;

  bool ok() const { return !violation.has_value(); }
};

/// v[k] = Ln * (-1)^(n-k) * [u^k] det(uI - F) / C(n,k). Throws NonIntegralProfile.
IntersectionProfile profile_from_matrix(const SymMatrixModel& m);

/// t with v[k] = t^(n-k) * v[n] for all k, if one exists.
std::optional<Rational> is_proportional(const IntersectionProfile& p);

ValidationReport validate(const IntersectionProfile& p, ValidationLevel level);

/// Throws InvalidProfile when the Syntactic checks fail.
void require_syntactic(const IntersectionProfile& p);

/// Profile of B = a*L + b*M against L.
IntersectionProfile binary_profile(const IntersectionProfile& p, const Integer& a, const Integer& b);

}  // namespace nefslope
