#pragma once

#include "ntil/algebra/mpoly.hpp"
#include "ntil/certificate/constants.hpp"
#include "ntil/certificate/formulas.hpp"
#include "ntil/certificate/functions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ntil::cert {

struct AuditItem {
  std::string name;
  bool holds = false;
  /// Informational items are reported but do not enter the verdict.
  bool informational = false;
  std::string note;
};

/// Rational factor f with a == f * b, if one exists (b nonzero).
inline std::optional<Rational> proportional(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero() || a.degree() != b.degree()) return std::nullopt;
  const Rational f = a.leading() / b.leading();
  if (a == f * b) return f;
  return std::nullopt;
}

/// Symbolic checks: the e/f factorizations in (p, c, e, f), the reduction of
/// the K and r stationarity equations to the two (p, c) relations, and the
/// elimination of c.
inline std::vector<AuditItem> symbolic_audit() {
  namespace F = formulas;
  using F::q;
  const MPoly P = MPoly::var(0), C = MPoly::var(1), E = MPoly::var(2), Fv = MPoly::var(3);
  const MPoly d = F::d_of(P, C), g = F::g_of(P, C), lam = F::lambda_of(P, C), mu = F::mu_of(P, C);
  std::vector<AuditItem> out;

  const MPoly e1 = F::stationarity_e1(C, d, E, Fv, lam, mu);
  const MPoly e2 = F::stationarity_e2(C, d, E, Fv, lam, mu);
  out.push_back({"sum of e/f equations = 2(2p-e-f)(-2c+p+1)",
                 e1 + e2 == q(2) * (q(2) * P - E - Fv) * (-q(2) * C + P + q(1)), false, ""});
  out.push_back({"difference of e/f equations = 2(e-f)(-2c+2e-2f+p+1)",
                 e1 - e2 == q(2) * (E - Fv) * (-q(2) * C + q(2) * E - q(2) * Fv + P + q(1)), false, ""});

  const MPoly e = F::e_of(P, C), f = F::f_of(P, C);
  const MPoly st_K = F::calA(P, C, d, e, f, g) + lam * F::calC(P, C, d, e, f, g) + mu * F::calE(P, C, e, f, g);
  const MPoly st_r = F::calB(P, C, d, g) + lam * F::calD(P, C, d, g) + mu * F::calH(P, C, g);
  const MPoly rel1 = F::relation_pc1(P, C), rel2 = F::relation_pc2(P, C);
  out.push_back({"r-stationarity on the branch = (1/2) * relation 1", st_r == q(1, 2) * rel1, false, ""});
  out.push_back({"K-stationarity on the branch = (-1/48) * relation 2", st_K == q(-1, 48) * rel2, false, ""});

  const RatPoly res = resultant(rel1, rel2, 1, 0);
  const RatPoly pm1({-1, 1});
  const RatPoly expected = pm1 * pm1 * RatPoly({-1, 5}) * RatPoly({7, 19, -331, 401});
  const auto factor = proportional(res, expected);
  out.push_back({"Res_c = const * (p-1)^2 (5p-1)(401p^3-331p^2+19p+7)", factor.has_value() && *factor != 0, false,
                 factor ? "factor " + to_string(*factor) : "not proportional"});
  return out;
}

/// Every residual of the derivation evaluated in Q(p), followed by the
/// symbolic checks.
inline std::vector<AuditItem> derivation_audit(const CertificateConstants& k) {
  namespace F = formulas;
  using F::q;
  const auto &p = k.p, &c = k.c, &d = k.d, &e = k.e, &f = k.f, &g = k.g, &K = k.K, &r = k.r;
  const FieldElem lam = F::lambda_of(p, c), mu = F::mu_of(p, c);
  std::vector<AuditItem> out;
  auto zero = [&](std::string name, const FieldElem& x) { out.push_back({std::move(name), x.is_zero(), false, ""}); };

  const FieldElem Q = k.n1 + k.n2 + K + q(2) * k.s - q(1);
  const FieldElem R = k.ell + q(2) * k.nu + k.q - q(1);
  zero("Q = n1 + n2 + K + 2s - 1", Q);
  zero("R = ell + 2 nu + q - 1", R);
  zero("Q - (K calC + r calD - 1)", Q - (K * k.calC + r * k.calD - q(1)));
  zero("R - (K calE + r calH - 1)", R - (K * k.calE + r * k.calH - q(1)));
  const FieldElem A1c = -K * c * c - q(2) * r * c + k.n1;
  zero("nu - (A1(c) - ell c)", k.nu - (A1c - k.ell * c));
  const FieldElem ALd = k.ell * d + k.nu;
  zero("n2 - (AL(d) + K d^2 - 2 K d)", k.n2 - (ALd + K * d * d - q(2) * K * d));

  const FieldElem calA = F::calA(p, c, d, e, f, g), calB = F::calB(p, c, d, g);
  zero("calA + lambda calC + mu calE", calA + lam * k.calC + mu * k.calE);
  zero("calB + lambda calD + mu calH", calB + lam * k.calD + mu * k.calH);
  zero("(Kp + r)(2p - 2 - lambda - mu)", (K * p + r) * (q(2) * p - q(2) - lam - mu));
  zero("(4c - lambda - 2mu - 4)(4Kc - Ke - Kf + 2r)",
       (q(4) * c - lam - q(2) * mu - q(4)) * (q(4) * K * c - K * e - K * f + q(2) * r));
  zero("(4d - lambda - 4)(-4Kd + Ke + Kf + 4K + 2r)",
       (q(4) * d - lam - q(4)) * (-q(4) * K * d + K * e + K * f + q(4) * K + q(2) * r));
  zero("first e/f stationarity equation", F::stationarity_e1(c, d, e, f, lam, mu));
  zero("second e/f stationarity equation", F::stationarity_e2(c, d, e, f, lam, mu));
  {
    const FieldElem printed = F::stationarity_e2(c, d, e, f, lam, mu, 1);
    out.push_back({"second e/f equation with the extra -e term", printed.is_zero(), true,
                   "residual " + printed.decimal(15) + " (equals -e: " + ((printed + e).is_zero() ? "yes" : "no") + ")"});
  }
  zero("(Kg + r)(4g + 2 lambda + mu)", (K * g + r) * (q(4) * g + q(2) * lam + mu));

  zero("d - (1 + p - c)", d - (q(1) + p - c));
  zero("lambda + mu - (2p - 2)", lam + mu - (q(2) * p - q(2)));
  zero("lambda + 2mu - (4c - 4)", lam + q(2) * mu - (q(4) * c - q(4)));
  zero("lambda - (4d - 4)", lam - (q(4) * d - q(4)));
  zero("2 lambda + mu + 4g", q(2) * lam + mu + q(4) * g);
  zero("g - (1 - 3p + 2c)/2", g - (q(1) - q(3) * p + q(2) * c) * q(1, 2));
  zero("e + f - 2p", e + f - q(2) * p);
  zero("f - e - (1 + p - 2c)/2", f - e - (q(1) + p - q(2) * c) * q(1, 2));
  zero("(2p - e - f)(-2c + p + 1)", (q(2) * p - e - f) * (-q(2) * c + p + q(1)));
  zero("(e - f)(-2c + 2e - 2f + p + 1)", (e - f) * (-q(2) * c + q(2) * e - q(2) * f + p + q(1)));
  zero("-4c^2 - 4cp + 4c + 13p^2 - 10p + 1", F::relation_pc1(p, c));
  zero("88c^3 - 36c^2p - ... - 3", F::relation_pc2(p, c));
  zero("401p^3 - 331p^2 + 19p + 7", evaluate(RatPoly({7, 19, -331, 401}), p));

  for (auto& item : symbolic_audit()) out.push_back(std::move(item));
  return out;
}

inline bool audit_passes(const std::vector<AuditItem>& items) {
  for (const auto& it : items)
    if (!it.informational && !it.holds) return false;
  return true;
}

}  // namespace ntil::cert
