#pragma once

#include "ntil/algebra/polynomial.hpp"
#include "ntil/algebra/rational.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace ntil {

/// Sparse polynomial over Q in four variables. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
class MPoly {
 public:
  static constexpr std::size_t kVars = 4;
  using Exponent = std::array<int, kVars>;

  MPoly() = default;
  MPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_[Exponent{}] = c;
  }
  MPoly(int c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MPoly var(std::size_t i) {
    if (i >= kVars) throw std::out_of_range("MPoly::var: index out of range");
    Exponent e{};
    e[i] = 1;
    MPoly r;
    r.terms_[e] = 1;
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }

  int degree_in(std::size_t i) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t i = 0; i < kVars; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend MPoly operator+(const MPoly& a, const Rational& b) { return a + MPoly(b); }
  friend MPoly operator+(const Rational& a, const MPoly& b) { return MPoly(a) + b; }
  friend MPoly operator-(const MPoly& a, const Rational& b) { return a + MPoly(-b); }
  friend MPoly operator-(const Rational& a, const MPoly& b) { return MPoly(a) - b; }
  friend MPoly operator*(const MPoly& a, const Rational& b) { return a * MPoly(b); }
  friend MPoly operator*(const Rational& a, const MPoly& b) { return MPoly(a) * b; }
  friend MPoly operator/(const MPoly& a, const Rational& b) { return a * (Rational(1) / b); }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  /// Coefficient of var(i)^k as a polynomial in var(j); every other variable
  /// must be absent.
  RatPoly coefficient_in(std::size_t i, int k, std::size_t j) const {
    std::vector<Rational> out;
    for (const auto& [e, c] : terms_) {
      for (std::size_t t = 0; t < kVars; ++t)
        if (t != i && t != j && e[t] != 0) throw std::invalid_argument("MPoly::coefficient_in: extra variable");
      if (e[i] != k) continue;
      const auto d = static_cast<std::size_t>(e[j]);
      if (out.size() <= d) out.resize(d + 1);
      out[d] += c;
    }
    return RatPoly(std::move(out));
  }

  /// The polynomial in var(i) alone; throws if another variable occurs.
  RatPoly univariate(std::size_t i) const {
    std::vector<Rational> out;
    for (const auto& [e, c] : terms_) {
      for (std::size_t t = 0; t < kVars; ++t)
        if (t != i && e[t] != 0) throw std::invalid_argument("MPoly::univariate: extra variable");
      const auto d = static_cast<std::size_t>(e[i]);
      if (out.size() <= d) out.resize(d + 1);
      out[d] += c;
    }
    return RatPoly(std::move(out));
  }

 private:
  void add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  std::map<Exponent, Rational> terms_;
};

/// Determinant of a square matrix of univariate polynomials by cofactor
/// expansion along the first row. Meant for the small Sylvester matrices of
/// the audit.
inline RatPoly poly_determinant(const std::vector<std::vector<RatPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return RatPoly::constant(1);
  if (n == 1) return m[0][0];
  RatPoly det;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<RatPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<RatPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const RatPoly term = m[0][col] * poly_determinant(minor);
    det = col % 2 == 0 ? det + term : det - term;
  }
  return det;
}

/// Resultant in var(i) of two polynomials in var(i) and var(j), as a
/// polynomial in var(j), via the Sylvester matrix (rows of `a` first).
inline RatPoly resultant(const MPoly& a, const MPoly& b, std::size_t i, std::size_t j) {
  const int da = a.degree_in(i), db = b.degree_in(i);
  if (da < 1 || db < 1) throw std::invalid_argument("resultant: both polynomials need positive degree");
  const auto size = static_cast<std::size_t>(da + db);
  std::vector<std::vector<RatPoly>> syl(size, std::vector<RatPoly>(size));
  for (int r = 0; r < db; ++r)
    for (int k = 0; k <= da; ++k)
      syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + da - k)] = a.coefficient_in(i, k, j);
  for (int r = 0; r < da; ++r)
    for (int k = 0; k <= db; ++k)
      syl[static_cast<std::size_t>(db + r)][static_cast<std::size_t>(r + db - k)] = b.coefficient_in(i, k, j);
  return poly_determinant(syl);
}

}  // namespace ntil
