#include "nefslope/polyroot.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace nefslope {

// --- IntPolynomial ---------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::linear_factor(const Rational& root) {
  return IntPolynomial({Integer(-numerator_of(root)), denominator_of(root)});
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational IntPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
  if (is_zero()) return 0;
  // sum c_k a^k b^(d-k) has the sign of p(a/b) since b > 0
  const Integer a = numerator_of(x);
  const Integer b = denominator_of(x);
  Integer acc = 0;
  Integer b_pow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * a + *it * b_pow;
    b_pow *= b;
  }
  return acc.sign();
}

int IntPolynomial::sign_at_infinity(bool positive) const {
  if (is_zero()) return 0;
  int s = leading().sign();
  if (!positive && degree() % 2 == 1) s = -s;
  return s;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<Integer> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * k);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<Integer> r(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(r));
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
  return abs(g);
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c / g);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Integer> out;
  for (const auto& c : coeffs_) out.push_back(-c);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const Integer& s, const IntPolynomial& a) {
  std::vector<Integer> out;
  for (const auto& c : a.coeffs_) out.push_back(s * c);
  return IntPolynomial(std::move(out));
}

// --- division, gcd ----------------------------------------------------------

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  const Integer& lb = b.leading();
  // one multiplication by lc(b) per step, deg a - deg b + 1 steps in total
  for (int dr = a.degree(); dr >= db; --dr) {
    const Integer lr = r[dr];
    for (auto& c : r) c *= lb;
    for (int k = 0; k <= db; ++k) r[dr - db + k] -= lr * b.coeff(k);
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("exact_quotient by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("exact_quotient: divisor has larger degree");
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  std::vector<Integer> q(a.degree() - db + 1);
  for (int dr = a.degree(); dr >= db; --dr) {
    if (r[dr] == 0) continue;
    Integer qr, rem;
    boost::multiprecision::divide_qr(r[dr], b.leading(), qr, rem);
    if (rem != 0) throw std::domain_error("exact_quotient: non-integral quotient");
    q[dr - db] = qr;
    for (int k = 0; k <= db; ++k) r[dr - db + k] -= qr * b.coeff(k);
  }
  for (const auto& c : r)
    if (c != 0) throw std::domain_error("exact_quotient: nonzero remainder");
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p.primitive_part();
  IntPolynomial g = gcd(p, p.derivative());
  return exact_quotient(p.primitive_part(), g).primitive_part();
}

IntPolynomial chi_polynomial(const IntersectionProfile& p) {
  require_syntactic(p);
  std::vector<Integer> c(p.n + 1);
  for (unsigned k = 0; k <= p.n; ++k) {
    c[k] = binomial(p.n, k) * p.v[k];
    if ((p.n - k) % 2 == 1) c[k] = -c[k];
  }
  return IntPolynomial(std::move(c));
}

// --- Sturm chains -----------------------------------------------------------

SturmChain::SturmChain(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  seq_.push_back(square_free_part(p));
  if (seq_.front().degree() == 0) return;
  seq_.push_back(seq_.front().derivative().primitive_part());
  for (;;) {
    const IntPolynomial& a = seq_[seq_.size() - 2];
    const IntPolynomial& b = seq_.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^delta * a mod b; restore the sign of the true remainder
    const int delta = a.degree() - b.degree() + 1;
    const bool flip = b.leading() < 0 && delta % 2 == 1;
    Integer g = r.content();
    std::vector<Integer> next;
    for (const auto& c : r.coeffs()) next.push_back(flip ? Integer(c / g) : Integer(-c / g));
    seq_.emplace_back(std::move(next));
  }
}

namespace {

unsigned count_variations(const std::vector<int>& signs) {
  unsigned changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

unsigned SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& q : seq_) signs.push_back(q.sign_at(x));
  return count_variations(signs);
}

unsigned SturmChain::variations_at_infinity(bool positive) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& q : seq_) signs.push_back(q.sign_at_infinity(positive));
  return count_variations(signs);
}

unsigned sturm_count(const SturmChain& chain, const std::optional<Rational>& lo,
                     const std::optional<Rational>& hi) {
  if (lo && hi && !(*lo < *hi)) throw std::invalid_argument("sturm_count requires lo < hi");
  unsigned at_lo = lo ? chain.variations_at(*lo) : chain.variations_at_infinity(false);
  unsigned at_hi = hi ? chain.variations_at(*hi) : chain.variations_at_infinity(true);
  return at_lo - at_hi;
}

unsigned real_root_count_with_multiplicity(const IntPolynomial& p) {
  // A root of multiplicity m survives in exactly m of g, gcd(g, g'), ...
  unsigned total = 0;
  IntPolynomial g = p.primitive_part();
  while (g.degree() >= 1) {
    total += sturm_count(SturmChain(g), std::nullopt, std::nullopt);
    g = gcd(g, g.derivative());
  }
  return total;
}

Rational cauchy_bound(const IntPolynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("cauchy_bound needs degree >= 1");
  Integer best = 0;
  for (int k = 0; k < p.degree(); ++k) best = std::max(best, Integer(abs(p.coeff(k))));
  return Rational(1) + Rational(best, abs(p.leading()));
}

// --- rational roots -----------------------------------------------------------

namespace {

std::map<Integer, unsigned> factorize(Integer n) {
  std::map<Integer, unsigned> factors;
  n = abs(n);
  if (n < 2) return factors;
  if (n <= Integer(std::numeric_limits<std::uint64_t>::max())) {
    std::uint64_t m = n.convert_to<std::uint64_t>();
    for (std::uint64_t d = 2; d <= m / d; d += (d == 2 ? 1 : 2)) {
      while (m % d == 0) {
        ++factors[Integer(d)];
        m /= d;
      }
    }
    if (m > 1) ++factors[Integer(m)];
    return factors;
  }
  for (Integer d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    while (n % d == 0) {
      ++factors[d];
      n /= d;
    }
  }
  if (n > 1) ++factors[n];
  return factors;
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> divs{1};
  for (const auto& [prime, exp] : factorize(n)) {
    const std::size_t base = divs.size();
    Integer power = 1;
    for (unsigned e = 1; e <= exp; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
    }
  }
  return divs;
}

IntPolynomial strip_zero_roots(const IntPolynomial& p) {
  std::size_t m = 0;
  while (m < p.coeffs().size() && p.coeff(m) == 0) ++m;
  return IntPolynomial(std::vector<Integer>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(m), p.coeffs().end()));
}

}  // namespace

std::vector<Rational> rational_root_candidates(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_root_candidates of the zero polynomial");
  IntPolynomial q = strip_zero_roots(p);
  if (q.degree() < 1) return {};
  std::set<Rational> positive;
  for (const auto& r : positive_divisors(q.coeff(0)))
    for (const auto& s : positive_divisors(q.leading())) positive.insert(Rational(r, s));
  std::vector<Rational> out(positive.rbegin(), positive.rend());
  for (auto it = positive.begin(); it != positive.end(); ++it) out.push_back(-*it);
  return out;
}

std::vector<Rational> rational_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  const bool zero_root = p.coeff(0) == 0;
  IntPolynomial q = strip_zero_roots(p);
  if (q.degree() >= 1) {
    // no root lies outside the Cauchy radius, so those candidates are skipped
    const Rational bound = cauchy_bound(q);
    for (const auto& c : rational_root_candidates(q)) {
      if (c >= bound || c <= -bound) continue;
      if (q.sign_at(c) == 0) roots.push_back(c);
    }
  }
  if (zero_root) roots.push_back(0);
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

IntPolynomial irrational_part(const IntPolynomial& p) {
  IntPolynomial q = p.primitive_part();
  for (const auto& r : rational_roots(p)) {
    const IntPolynomial f = IntPolynomial::linear_factor(r);
    while (q.degree() >= 1 && q.sign_at(r) == 0) q = exact_quotient(q, f);
  }
  return square_free_part(q);
}

// --- algebraic numbers --------------------------------------------------------

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& r) {
  return AlgebraicNumber{IntPolynomial::linear_factor(r), r - 1, r, r};
}

double AlgebraicNumber::approx() const {
  if (exact) return to_double(*exact);
  return to_double((lo + hi) / 2);
}

namespace {

// Max root of a square-free polynomial with at least one real root.
AlgebraicNumber isolate_max_of_square_free(const IntPolynomial& q, const SturmChain& chain) {
  const Rational bound = cauchy_bound(q);
  Rational lo = -bound;
  Rational hi = bound;
  while (sturm_count(chain, lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (sturm_count(chain, mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  return AlgebraicNumber{q, lo, hi, std::nullopt};
}

void isolate_all(const SturmChain& chain, const IntPolynomial& q, const Rational& lo, const Rational& hi,
                 std::vector<AlgebraicNumber>& out) {
  unsigned count = sturm_count(chain, lo, hi);
  if (count == 0) return;
  if (count == 1) {
    out.push_back(AlgebraicNumber{q, lo, hi, std::nullopt});
    return;
  }
  Rational mid = (lo + hi) / 2;
  isolate_all(chain, q, lo, mid, out);
  isolate_all(chain, q, mid, hi, out);
}

}  // namespace

std::optional<AlgebraicNumber> isolate_max_root(const IntPolynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("isolate_max_root needs degree >= 1");
  const std::vector<Rational> rational = rational_roots(p);
  const IntPolynomial irr = irrational_part(p);

  std::optional<AlgebraicNumber> best;
  if (irr.degree() >= 1) {
    SturmChain chain(irr);
    if (sturm_count(chain, std::nullopt, std::nullopt) > 0) best = isolate_max_of_square_free(irr, chain);
  }
  if (rational.empty()) return best;

  const Rational& top = rational.front();
  if (!best) return AlgebraicNumber::from_rational(top);
  // the irrational root differs from top, so bisection separates them
  AlgebraicNumber a = *best;
  while (a.lo < top && top <= a.hi) a = bisect(a);
  if (top > a.hi) return AlgebraicNumber::from_rational(top);
  return a;
}

std::vector<AlgebraicNumber> isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots of the zero polynomial");
  std::vector<AlgebraicNumber> out;
  for (const auto& r : rational_roots(p)) out.push_back(AlgebraicNumber::from_rational(r));
  const IntPolynomial irr = irrational_part(p);
  if (irr.degree() >= 1) {
    SturmChain chain(irr);
    const Rational bound = cauchy_bound(irr);
    isolate_all(chain, irr, -bound, bound, out);
  }
  // irrational intervals are disjoint; rationals are placed by exact comparison
  std::sort(out.begin(), out.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.exact && b.exact) return *a.exact < *b.exact;
    if (a.exact) return compare(b, *a.exact) > 0;
    if (b.exact) return compare(a, *b.exact) < 0;
    return a.hi < b.hi;
  });
  return out;
}

AlgebraicNumber bisect(const AlgebraicNumber& a) {
  if (a.exact) return a;
  SturmChain chain(a.minpoly_factor);
  Rational mid = (a.lo + a.hi) / 2;
  AlgebraicNumber out = a;
  if (sturm_count(chain, a.lo, mid) == 1)
    out.hi = mid;
  else
    out.lo = mid;
  return out;
}

AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("refine width must be positive");
  if (a.exact) return a;
  SturmChain chain(a.minpoly_factor);
  AlgebraicNumber out = a;
  while (out.hi - out.lo > width) {
    Rational mid = (out.lo + out.hi) / 2;
    if (sturm_count(chain, out.lo, mid) == 1)
      out.hi = mid;
    else
      out.lo = mid;
  }
  return out;
}

int compare(const AlgebraicNumber& a, const Rational& r) {
  if (a.exact) return (*a.exact > r) - (*a.exact < r);
  if (r <= a.lo) return 1;
  if (r > a.hi) return -1;
  // r in (lo, hi]: a == r iff r is the isolated root
  if (a.minpoly_factor.sign_at(r) == 0) return 0;
  SturmChain chain(a.minpoly_factor);
  return sturm_count(chain, a.lo, r) == 1 ? -1 : 1;
}

AlgebraicNumber reciprocal(const AlgebraicNumber& a) {
  if (a.exact) {
    if (*a.exact == 0) throw std::domain_error("reciprocal of zero");
    return AlgebraicNumber::from_rational(1 / *a.exact);
  }
  if (compare(a, 0) <= 0) throw std::domain_error("reciprocal needs a positive number");
  AlgebraicNumber pos = a;
  const IntPolynomial& f = pos.minpoly_factor;
  while (pos.lo <= 0 || f.sign_at(pos.lo) == 0 || f.sign_at(pos.hi) == 0) pos = bisect(pos);
  // x in (lo, hi] with root-free endpoints <=> 1/x in (1/hi, 1/lo]
  return AlgebraicNumber{f.reversed().primitive_part(), 1 / pos.hi, 1 / pos.lo, std::nullopt};
}

bool is_valid(const AlgebraicNumber& a) {
  if (a.minpoly_factor.degree() < 1 || !(a.lo < a.hi)) return false;
  if (square_free_part(a.minpoly_factor).degree() != a.minpoly_factor.degree()) return false;
  SturmChain chain(a.minpoly_factor);
  if (sturm_count(chain, a.lo, a.hi) != 1) return false;
  if (a.exact) return a.lo < *a.exact && *a.exact <= a.hi && a.minpoly_factor.sign_at(*a.exact) == 0;
  return true;
}

}  // namespace nefslope
