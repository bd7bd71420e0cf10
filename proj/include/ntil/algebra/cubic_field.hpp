#pragma once

#include "ntil/algebra/polynomial.hpp"
#include "ntil/algebra/sturm.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ntil {

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline Sign operator*(Sign a, Sign b) { return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b)); }
inline Sign operator-(Sign a) { return static_cast<Sign>(-static_cast<int>(a)); }
inline char sign_char(Sign s) { return s == Sign::positive ? '+' : s == Sign::negative ? '-' : '0'; }

class FieldElem;

namespace detail {

inline std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  if (n > BigInt(1000000000000LL)) throw std::invalid_argument("rational root test: coefficient too large to factor");
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Every rational root of an integer-scaled polynomial with nonzero constant
/// term has the form +-u/w with u | a0 and w | a_deg.
inline bool has_rational_root(const RatPoly& poly) {
  if (poly.coeff(0) == 0) return true;
  BigInt lcm = 1;
  for (const auto& c : poly.coeffs()) lcm = boost::multiprecision::lcm(lcm, denominator_of(c));
  const BigInt a0 = numerator_of(poly.coeff(0) * Rational(lcm));
  const BigInt an = numerator_of(poly.leading() * Rational(lcm));
  for (const auto& u : positive_divisors(a0))
    for (const auto& w : positive_divisors(an))
      for (int s : {1, -1})
        if (poly(Rational(u * s, w)) == 0) return true;
  return false;
}

}  // namespace detail

/// The number field Q(p) for a fixed real root p of an irreducible cubic,
/// located by an isolating interval. The interval is the only mutable state;
/// it is refined under a lock and only ever shrinks.
class CubicField : public std::enable_shared_from_this<CubicField> {
  struct Token {};

 public:
  CubicField(Token, RatPoly minpoly, RootInterval iv) : minpoly_(std::move(minpoly)), iv_(std::move(iv)) {
    if (minpoly_.degree() != 3) throw std::invalid_argument("CubicField: minimal polynomial must be cubic");
    if (detail::has_rational_root(minpoly_))
      throw std::invalid_argument("CubicField: polynomial has a rational root and is reducible");
    if (sturm_count(minpoly_, iv_.lo, iv_.hi) != 1)
      throw std::invalid_argument("CubicField: interval does not isolate exactly one root");
    const Rational lead = minpoly_.leading();
    for (int i = 0; i < 3; ++i) cube_rule_[static_cast<std::size_t>(i)] = -minpoly_.coeff(i) / lead;
  }

  static std::shared_ptr<const CubicField> create(RatPoly minpoly, RootInterval iv) {
    return std::make_shared<const CubicField>(Token{}, std::move(minpoly), std::move(iv));
  }

  const RatPoly& minimal_polynomial() const { return minpoly_; }

  /// p^3 = rule[0] + rule[1] p + rule[2] p^2.
  const std::array<Rational, 3>& cube_rule() const { return cube_rule_; }

  RootInterval root_interval() const {
    std::lock_guard lock(mu_);
    return iv_;
  }

  /// Shrinks the shared isolating interval to width <= `width` and returns it.
  RootInterval refine(const Rational& width) const {
    RootInterval snapshot = root_interval();
    if (snapshot.width() <= width) return snapshot;
    RootInterval narrower = refine_root(minpoly_, snapshot, width);
    std::lock_guard lock(mu_);
    if (narrower.width() < iv_.width()) iv_ = narrower;
    return iv_;
  }

  FieldElem element(Rational c0, Rational c1 = 0, Rational c2 = 0) const;
  FieldElem generator() const;

 private:
  RatPoly minpoly_;
  std::array<Rational, 3> cube_rule_;
  mutable std::mutex mu_;
  mutable RootInterval iv_;
};

using FieldPtr = std::shared_ptr<const CubicField>;

/// c0 + c1 p + c2 p^2, always reduced. Zero iff all coefficients vanish,
/// which is sound because the minimal cubic is irreducible.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldPtr field, Rational c0, Rational c1 = 0, Rational c2 = 0)
      : field_(std::move(field)), c_{std::move(c0), std::move(c1), std::move(c2)} {}

  const FieldPtr& field() const { return field_; }
  const Rational& c0() const { return c_[0]; }
  const Rational& c1() const { return c_[1]; }
  const Rational& c2() const { return c_[2]; }
  const std::array<Rational, 3>& coeffs() const { return c_; }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0; }

  FieldElem operator-() const { return {field_, -c_[0], -c_[1], -c_[2]}; }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    const auto& f = a.common_field(b);
    return {f, a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]};
  }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    const auto& f = a.common_field(b);
    return {f, a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]};
  }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    const auto& f = a.common_field(b);
    // Schoolbook product, then fold p^4 and p^3 back down.
    std::array<Rational, 5> t;
    for (std::size_t i = 0; i < 3; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < 3; ++j)
        if (b.c_[j] != 0) t[i + j] += a.c_[i] * b.c_[j];
    }
    const auto& rule = f->cube_rule();
    for (std::size_t k = 4; k >= 3; --k) {
      if (t[k] == 0) continue;
      for (std::size_t i = 0; i < 3; ++i) t[k - 3 + i] += t[k] * rule[i];
      t[k] = 0;
    }
    return {f, std::move(t[0]), std::move(t[1]), std::move(t[2])};
  }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

  friend FieldElem operator+(const FieldElem& a, const Rational& r) { return {a.field_, a.c_[0] + r, a.c_[1], a.c_[2]}; }
  friend FieldElem operator+(const Rational& r, const FieldElem& a) { return a + r; }
  friend FieldElem operator-(const FieldElem& a, const Rational& r) { return a + (-r); }
  friend FieldElem operator-(const Rational& r, const FieldElem& a) { return (-a) + r; }
  friend FieldElem operator*(const FieldElem& a, const Rational& r) {
    return {a.field_, a.c_[0] * r, a.c_[1] * r, a.c_[2] * r};
  }
  friend FieldElem operator*(const Rational& r, const FieldElem& a) { return a * r; }
  friend FieldElem operator/(const FieldElem& a, const Rational& r) {
    if (r == 0) throw std::domain_error("field element divided by rational zero");
    return a * (Rational(1) / r);
  }

  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  /// Structural equality; exact because elements are reduced.
  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.c_ == b.c_; }

  friend bool operator<(const FieldElem& a, const FieldElem& b) { return (a - b).sign() == Sign::negative; }
  friend bool operator>(const FieldElem& a, const FieldElem& b) { return b < a; }
  friend bool operator<=(const FieldElem& a, const FieldElem& b) { return !(b < a); }
  friend bool operator>=(const FieldElem& a, const FieldElem& b) { return !(a < b); }

  FieldElem pow(int e) const {
    FieldElem r{field_, 1};
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// Exact range of c0 + c1 t + c2 t^2 over t in the closed interval `iv`.
  std::pair<Rational, Rational> enclose(const RootInterval& iv) const {
    auto eval = [&](const Rational& t) { return c_[0] + t * (c_[1] + t * c_[2]); };
    Rational lo = eval(iv.lo), hi = eval(iv.hi);
    if (lo > hi) std::swap(lo, hi);
    if (c_[2] != 0) {
      const Rational vertex = -c_[1] / (2 * c_[2]);
      if (iv.lo < vertex && vertex < iv.hi) {
        const Rational v = eval(vertex);
        if (v < lo) lo = v;
        if (v > hi) hi = v;
      }
    }
    return {lo, hi};
  }

  /// Sign of the element at p. Refines the field's isolating interval until
  /// the enclosure excludes zero; this terminates for every nonzero element.
  Sign sign() const {
    if (is_zero()) return Sign::zero;
    if (is_rational()) return static_cast<Sign>(c_[0].sign());
    RootInterval iv = field_->root_interval();
    for (;;) {
      const auto [lo, hi] = enclose(iv);
      if (lo.sign() > 0) return Sign::positive;
      if (hi.sign() < 0) return Sign::negative;
      iv = field_->refine(iv.width() / 1024);
    }
  }

  /// Multiplicative inverse by the extended Euclidean algorithm against the
  /// minimal polynomial.
  FieldElem inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero field element");
    RatPoly r0 = field_->minimal_polynomial(), r1({c_[0], c_[1], c_[2]});
    RatPoly s0, s1 = RatPoly::constant(1);  // invariant: r_i == s_i * a  (mod minpoly)
    while (r1.degree() > 0) {
      auto [q, r] = divmod(r0, r1);
      RatPoly s = s0 - q * s1;
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    // r1 is a nonzero constant because the minimal polynomial is irreducible.
    const RatPoly inv = Rational(1) / r1.leading() * divmod(s1, field_->minimal_polynomial()).second;
    return {field_, inv.coeff(0), inv.coeff(1), inv.coeff(2)};
  }

  /// Decimal rendering with `places` fractional digits (round half to even),
  /// refining until both ends of the enclosure round identically.
  std::string decimal(int places) const {
    if (is_rational()) return to_decimal(c_[0], places);
    RootInterval iv = field_->root_interval();
    for (;;) {
      const auto [lo, hi] = enclose(iv);
      std::string a = to_decimal(lo, places);
      if (a == to_decimal(hi, places)) return a;
      iv = field_->refine(iv.width() / 1024);
    }
  }

  /// Rational approximation within `tol` of the true value.
  Rational approximate(const Rational& tol) const {
    RootInterval iv = field_->root_interval();
    for (;;) {
      const auto [lo, hi] = enclose(iv);
      if (hi - lo <= tol) return (lo + hi) / 2;
      iv = field_->refine(iv.width() / 1024);
    }
  }

  double to_double() const { return ntil::to_double(approximate(Rational(1, BigInt(1) << 64))); }

 private:
  const FieldPtr& common_field(const FieldElem& o) const {
    if (field_ != o.field_) {
      if (!field_) return o.field_;
      if (o.field_) throw std::logic_error("mixing elements of different fields");
    }
    return field_;
  }

  FieldPtr field_;
  std::array<Rational, 3> c_;
};

inline FieldElem CubicField::element(Rational c0, Rational c1, Rational c2) const {
  return {shared_from_this(), std::move(c0), std::move(c1), std::move(c2)};
}
inline FieldElem CubicField::generator() const { return element(0, 1, 0); }

inline FieldElem field_mul(const FieldElem& a, const FieldElem& b) { return a * b; }
inline Sign field_sign(const FieldElem& x) { return x.sign(); }
inline FieldElem field_inverse(const FieldElem& x) { return x.inverse(); }

/// Substitutes a field element into a rational polynomial.
inline FieldElem evaluate(const RatPoly& poly, const FieldElem& x) {
  FieldElem acc{x.field(), 0};
  for (auto it = poly.coeffs().rbegin(); it != poly.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// The field of the certificate: Q(p) with 401p^3 - 331p^2 + 19p + 7 = 0 and
/// 2115883/10^7 < p < 2115884/10^7.
inline FieldPtr certificate_field() {
  static const FieldPtr field = CubicField::create(
      RatPoly({Rational(7), Rational(19), Rational(-331), Rational(401)}),
      RootInterval{Rational(2115883, 10000000), Rational(2115884, 10000000)});
  return field;
}

/// "c0<TAB>c1<TAB>c2".
inline std::string to_tsv(const FieldElem& x) {
  return to_string(x.c0()) + "\t" + to_string(x.c1()) + "\t" + to_string(x.c2());
}

}  // namespace ntil
