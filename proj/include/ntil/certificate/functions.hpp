#pragma once

#include "ntil/algebra/cubic_field.hpp"
#include "ntil/certificate/constants.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ntil::cert {

/// c0 + c1 t + c2 t^2 over Q(p).
struct FQuad {
  FieldElem c0, c1, c2;

  FieldElem operator()(const FieldElem& t) const { return c0 + t * (c1 + t * c2); }
  /// Exact integral over [a, b].
  FieldElem integral(const FieldElem& a, const FieldElem& b) const {
    const Rational half(1, 2), third(1, 3);
    return c0 * (b - a) + c1 * half * (b * b - a * a) + c2 * third * (b * b * b - a * a * a);
  }
};

/// A function on [0, 1] given by one quadratic piece per interval
/// [breakpoints[i], breakpoints[i+1]].
struct PiecewiseFunc {
  std::string name;
  std::vector<FieldElem> breakpoints;
  std::vector<FQuad> pieces;
  std::vector<std::string> piece_names;

  /// Index of the piece whose open interval contains t, or -1 if t is a
  /// breakpoint or lies outside [0, 1].
  int open_piece(const FieldElem& t) const {
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (t > breakpoints[i] && t < breakpoints[i + 1]) return static_cast<int>(i);
    return -1;
  }

  /// Whether t lies in the closed interval of piece i.
  bool in_piece(std::size_t i, const FieldElem& t) const { return t >= breakpoints[i] && t <= breakpoints[i + 1]; }

  FieldElem operator()(const FieldElem& t) const {
    if (t < breakpoints.front() || t > breakpoints.back())
      throw std::domain_error(name + ": argument outside [0, 1]");
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (t <= breakpoints[i + 1]) return pieces[i](t);
    return pieces.back()(t);
  }

  FieldElem integral() const {
    FieldElem total = breakpoints.front().field()->element(0);
    for (std::size_t i = 0; i < pieces.size(); ++i) total += pieces[i].integral(breakpoints[i], breakpoints[i + 1]);
    return total;
  }

  /// Names of interior breakpoints where adjacent pieces disagree.
  std::vector<std::string> continuity_failures() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
      if (pieces[i](breakpoints[i + 1]) != pieces[i + 1](breakpoints[i + 1]))
        out.push_back(name + " at " + piece_names[i] + "/" + piece_names[i + 1]);
    return out;
  }
};

struct CertificateFunctions {
  FQuad A1, AL, A2, BQ, BL;
  PiecewiseFunc A, B;
};

/// A = 0, A1, AL, A2 on [0, p, c, d, 1]; B = BQ, BL, BQ, 0 on [0, e, f, g, 1].
/// Throws if a function is discontinuous or A1(p), BQ(g) do not vanish.
inline CertificateFunctions build_functions(const CertificateConstants& k) {
  const FieldPtr field = k.p.field();
  const FieldElem zero = field->element(0), one = field->element(1);
  const Rational half(1, 2);
  CertificateFunctions fn;
  fn.BQ = {k.s, k.r, k.K * half};
  fn.BL = {k.q, -k.ell, zero};
  fn.A1 = {k.n1, -Rational(2) * k.r, -k.K};
  fn.AL = {k.nu, k.ell, zero};
  fn.A2 = {k.n2, Rational(2) * k.K, -k.K};
  const FQuad z{zero, zero, zero};
  fn.A = {"A", {zero, k.p, k.c, k.d, one}, {z, fn.A1, fn.AL, fn.A2}, {"0", "A1", "AL", "A2"}};
  fn.B = {"B", {zero, k.e, k.f, k.g, one}, {fn.BQ, fn.BL, fn.BQ, z}, {"BQ", "BL", "BQ", "0"}};
  std::string bad;
  for (const auto& s : fn.A.continuity_failures()) bad += " " + s;
  for (const auto& s : fn.B.continuity_failures()) bad += " " + s;
  if (!bad.empty()) throw std::runtime_error("build_functions: discontinuous at" + bad);
  if (!fn.A1(k.p).is_zero()) throw std::runtime_error("build_functions: A1(p) != 0");
  if (!fn.BQ(k.g).is_zero()) throw std::runtime_error("build_functions: BQ(g) != 0");
  return fn;
}

struct SignCheck {
  std::string name;
  Sign expected;
  Sign computed;
  bool pass() const { return expected == computed; }
};

inline SignCheck check_sign(std::string name, Sign expected, const FieldElem& x) {
  return {std::move(name), expected, field_sign(x)};
}

/// 0 < p < c < d < 1 and 0 < e < f < g < 1.
inline std::vector<SignCheck> ordering_checks(const CertificateConstants& k) {
  const auto pos = Sign::positive;
  return {
      check_sign("p > 0", pos, k.p),          check_sign("c - p > 0", pos, k.c - k.p),
      check_sign("d - c > 0", pos, k.d - k.c), check_sign("1 - d > 0", pos, Rational(1) - k.d),
      check_sign("e > 0", pos, k.e),          check_sign("f - e > 0", pos, k.f - k.e),
      check_sign("g - f > 0", pos, k.g - k.f), check_sign("1 - g > 0", pos, Rational(1) - k.g),
  };
}

/// The endpoint and shape facts that make A and B nonnegative on [0, 1]:
/// A1, A2 concave with positive ends, AL and BL linear with positive ends,
/// BQ convex with zeros at g and -2r/K - g > g.
inline std::vector<SignCheck> nonnegativity_checks(const CertificateConstants& k, const CertificateFunctions& fn) {
  const auto pos = Sign::positive, neg = Sign::negative, zero = Sign::zero;
  const FieldElem one = k.p.field()->element(1), nil = k.p.field()->element(0);
  const FieldElem second_zero = -Rational(2) * k.r / k.K - k.g;
  return {
      check_sign("K > 0", pos, k.K),
      check_sign("r < 0", neg, k.r),
      check_sign("A1(p) = 0", zero, fn.A1(k.p)),
      check_sign("A1(c) > 0", pos, fn.A1(k.c)),
      check_sign("AL(c) = A1(c)", zero, fn.AL(k.c) - fn.A1(k.c)),
      check_sign("AL(d) > 0", pos, fn.AL(k.d)),
      check_sign("A2(d) = AL(d)", zero, fn.A2(k.d) - fn.AL(k.d)),
      check_sign("A2(1) > 0", pos, fn.A2(one)),
      check_sign("A1 leading coefficient -K < 0", neg, fn.A1.c2),
      check_sign("A2 leading coefficient -K < 0", neg, fn.A2.c2),
      check_sign("BQ(0) > 0", pos, fn.BQ(nil)),
      check_sign("BQ(e) > 0", pos, fn.BQ(k.e)),
      check_sign("BL(e) = BQ(e)", zero, fn.BL(k.e) - fn.BQ(k.e)),
      check_sign("BL(f) > 0", pos, fn.BL(k.f)),
      check_sign("BQ(f) = BL(f)", zero, fn.BQ(k.f) - fn.BL(k.f)),
      check_sign("BQ(g) = 0", zero, fn.BQ(k.g)),
      check_sign("BQ leading coefficient K/2 > 0", pos, fn.BQ.c2),
      check_sign("BQ second zero -2r/K - g > g", pos, second_zero - k.g),
  };
}

/// 4 * integral of A + B, by direct piecewise integration.
inline FieldElem objective_direct(const CertificateFunctions& fn) {
  return Rational(4) * (fn.A.integral() + fn.B.integral());
}

/// The closed form K * calA + r * calB.
inline FieldElem objective_closed_form(const CertificateConstants& k) {
  return k.K * formulas::calA(k.p, k.c, k.d, k.e, k.f, k.g) + k.r * formulas::calB(k.p, k.c, k.d, k.g);
}

/// The certificate objective; both computations must agree exactly.
inline FieldElem objective_alpha(const CertificateConstants& k, const CertificateFunctions& fn) {
  const FieldElem direct = objective_direct(fn);
  if (direct != objective_closed_form(k))
    throw std::runtime_error("objective_alpha: direct integration disagrees with K*calA + r*calB");
  return direct;
}

/// 401 a^3 - 1744 a^2 + 2240 a - 768.
inline RatPoly alpha_minimal_polynomial() { return RatPoly({-768, 2240, -1744, 401}); }

}  // namespace ntil::cert
