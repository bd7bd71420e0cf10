#pragma once

#include "ntil/algebra/rational.hpp"

// The closed-form expressions of the odd-fat certificate, written once and
// instantiated both over Q(p) (numerical values) and over MPoly (symbolic
// identities in the audit). T needs +, -, * with T and with Rational.

namespace ntil::cert::formulas {

inline Rational q(long n, long d = 1) { return Rational(n, d); }

template <class T>
T calC(const T& p, const T& c, const T& d, const T& e, const T& f, const T& g) {
  return -(c * c) + q(1, 2) * c * e + q(1, 2) * c * f + d * d - q(1, 2) * d * e - q(1, 2) * d * f - q(2) * d - g * g +
         q(2) * p * p + q(1);
}

template <class T>
T calD(const T& p, const T& c, const T& d, const T& g) {
  return -c - d - q(2) * g + q(4) * p;
}

template <class T>
T calE(const T& p, const T& c, const T& e, const T& f, const T& g) {
  return -q(2) * c * c + c * e + c * f - q(1, 2) * e * f - q(1, 2) * e - q(1, 2) * f - q(1, 2) * g * g + q(2) * p * p;
}

template <class T>
T calH(const T& p, const T& c, const T& g) {
  return -q(2) * c - g + q(4) * p - q(1);
}

/// Objective coefficient of K after integration.
template <class T>
T calA(const T& p, const T& c, const T& d, const T& e, const T& f, const T& g) {
  return q(8, 3) * c * c * c - c * c * e - c * c * f - q(4) * c * c + q(2) * c * e + q(2) * c * f -
         q(8, 3) * d * d * d + d * d * e + d * d * f + q(8) * d * d - q(2) * d * e - q(2) * d * f - q(8) * d -
         q(1, 3) * e * e * e + e * e * f - e * f * f + q(1, 3) * f * f * f - q(4, 3) * g * g * g -
         q(8, 3) * p * p * p + q(4) * p * p + q(8, 3);
}

/// Objective coefficient of r after integration.
template <class T>
T calB(const T& p, const T& c, const T& d, const T& g) {
  return q(2) * c * c - q(4) * c + q(2) * d * d - q(4) * d - q(2) * g * g - q(4) * p * p + q(8) * p;
}

template <class T>
T d_of(const T& p, const T& c) { return q(1) + p - c; }
template <class T>
T e_of(const T& p, const T& c) { return (q(2) * c + q(3) * p - q(1)) * q(1, 4); }
template <class T>
T f_of(const T& p, const T& c) { return (-q(2) * c + q(5) * p + q(1)) * q(1, 4); }
template <class T>
T g_of(const T& p, const T& c) { return (q(1) - q(3) * p + q(2) * c) * q(1, 2); }
template <class T>
T lambda_of(const T& p, const T& c) { return q(4) * (p - c); }
template <class T>
T mu_of(const T& p, const T& c) { return q(4) * c - q(2) * p - q(2); }

/// Stationarity in the first of the two breakpoint variables.
template <class T>
T stationarity_e1(const T& c, const T& d, const T& e, const T& f, const T& lam, const T& mu) {
  return q(2) * c * c - c * lam - q(2) * c * mu - q(4) * c - q(2) * d * d + d * lam + q(4) * d + q(2) * e * e -
         q(4) * e * f + q(2) * f * f + f * mu + mu;
}

/// Stationarity in the second breakpoint variable. `stray` scales an extra
/// "-e" term: 0 gives the consistent form, 1 the variant with that term.
template <class T>
T stationarity_e2(const T& c, const T& d, const T& e, const T& f, const T& lam, const T& mu, long stray = 0) {
  return q(2) * c * c - c * lam - q(2) * c * mu - q(4) * c - q(2) * d * d + d * lam + q(4) * d - q(2) * e * e +
         q(4) * e * f + e * mu - q(stray) * e - q(2) * f * f + mu;
}

/// The two relations in (p, c) left after substituting the branch.
template <class T>
T relation_pc1(const T& p, const T& c) {
  return -q(4) * c * c - q(4) * c * p + q(4) * c + q(13) * p * p - q(10) * p + q(1);
}

template <class T>
T relation_pc2(const T& p, const T& c) {
  return q(88) * c * c * c - q(36) * c * c * p - q(36) * c * c - q(126) * c * p * p + q(132) * c * p - q(30) * c +
         q(29) * p * p * p - q(57) * p * p + q(39) * p - q(3);
}

}  // namespace ntil::cert::formulas
