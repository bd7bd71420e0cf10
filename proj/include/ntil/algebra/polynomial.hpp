#pragma once

#include "ntil/algebra/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ntil {

/// Univariate polynomial with rational coefficients, lowest degree first.
/// The leading coefficient is nonzero unless the polynomial is zero.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  RatPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static RatPoly constant(const Rational& v) { return RatPoly({v}); }
  static RatPoly x() { return RatPoly({Rational(0), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Rational(0);
  }
  Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  RatPoly derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return RatPoly(std::move(d));
  }

  RatPoly operator-() const {
    RatPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return RatPoly(std::move(r));
  }
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(r));
  }
  friend RatPoly operator*(const Rational& s, const RatPoly& a) { return RatPoly::constant(s) * a; }

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division: returns (quotient, remainder) with deg(rem) < deg(divisor).
  friend std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    const int db = b.degree();
    std::vector<Rational> quot(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)));
    for (int k = a.degree() - db; k >= 0; --k) {
      const Rational f = rem[static_cast<std::size_t>(k + db)] / b.c_.back();
      quot[static_cast<std::size_t>(k)] = f;
      if (f == 0) continue;
      for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * b.c_[static_cast<std::size_t>(j)];
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
  }

  RatPoly pow(int e) const {
    RatPoly r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  std::string str(char var = 'x') const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Rational& v = c_[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      if (!out.empty()) out += v.sign() < 0 ? " - " : " + ";
      else if (v.sign() < 0) out += "-";
      const Rational a = abs(v);
      if (a != 1 || i == 0) out += to_string(a);
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace ntil
