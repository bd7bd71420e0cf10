#pragma once

#include "ntil/algebra/cubic_field.hpp"
#include "ntil/certificate/formulas.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ntil::cert {

/// Breakpoints and coefficients of the odd-fat certificate, all in Q(p).
struct CertificateConstants {
  RootInterval p_interval;
  FieldElem p, c, d, e, f, g;
  FieldElem calC, calD, calE, calH;
  FieldElem K, r;
  FieldElem s, ell, q, n1, nu, n2;

  /// (name, value) in the order of constants.tsv, without p and alpha.
  std::vector<std::pair<std::string, FieldElem>> named() const {
    return {{"c", c},   {"d", d},       {"e", e},       {"f", f},       {"g", g},       {"K", K},
            {"r", r},   {"s", s},       {"ell", ell},   {"q", q},       {"n1", n1},     {"nu", nu},
            {"n2", n2}, {"calC", calC}, {"calD", calD}, {"calE", calE}, {"calH", calH}};
  }
};

/// Recomputes s, ell, q, n1, nu, n2 from K, r and the breakpoints.
inline void derive_coefficients(CertificateConstants& k) {
  using formulas::q;
  const auto &p = k.p, &c = k.c, &d = k.d, &e = k.e, &f = k.f, &g = k.g, &K = k.K, &r = k.r;
  const FieldElem halfK = K * q(1, 2);
  k.s = -halfK * g * g - r * g;
  k.ell = -(halfK * (e + f) + r);
  k.q = -halfK * e * f - halfK * g * g - r * g;
  k.n1 = K * p * p + q(2) * r * p;
  k.nu = (-q(2) * K * c * c + K * c * e + K * c * f + q(2) * K * p * p - q(2) * c * r + q(4) * p * r) * q(1, 2);
  k.n2 = (-q(2) * K * c * c + K * c * e + K * c * f + q(2) * K * d * d - K * d * e - K * d * f - q(4) * K * d +
          q(2) * K * p * p - q(2) * c * r - q(2) * d * r + q(4) * p * r) *
         q(1, 2);
}

/// Builds Q(p), the breakpoints, and K, r from the 2x2 system
/// K C + r D = 1, K E + r H = 1.
inline CertificateConstants compute_constants() {
  using formulas::q;
  const FieldPtr field = certificate_field();
  CertificateConstants k;
  k.p_interval = RootInterval{Rational(2115883, 10000000), Rational(2115884, 10000000)};
  const FieldElem p = field->generator();
  k.p = p;
  const FieldElem p2 = p * p, p3 = p2 * p;
  const FieldElem num = q(187) * p3 - q(211) * p2 + q(61) * p - q(5);
  const FieldElem den = q(2) * (q(71) * p2 - q(66) * p + q(11));
  k.c = num / den;
  k.d = formulas::d_of(p, k.c);
  k.e = formulas::e_of(p, k.c);
  k.f = formulas::f_of(p, k.c);
  k.g = formulas::g_of(p, k.c);
  k.calC = formulas::calC(p, k.c, k.d, k.e, k.f, k.g);
  k.calD = formulas::calD(p, k.c, k.d, k.g);
  k.calE = formulas::calE(p, k.c, k.e, k.f, k.g);
  k.calH = formulas::calH(p, k.c, k.g);
  const FieldElem det = k.calC * k.calH - k.calD * k.calE;
  if (det.is_zero()) throw std::runtime_error("compute_constants: the system for K and r is singular");
  k.K = (k.calH - k.calD) / det;
  k.r = (k.calC - k.calE) / det;
  derive_coefficients(k);
  return k;
}

}  // namespace ntil::cert
