#pragma once

#include "ntil/algebra/sturm.hpp"
#include "ntil/certificate/audit.hpp"
#include "ntil/certificate/bernstein.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace ntil::cert {

struct VerifyOptions {
  int threads = 1;
  /// Fault injection: replace r by -r before the coefficients are derived.
  bool flip_r = false;
  /// Fault injection: negate the first nonzero Bernstein coefficient of this
  /// triangle (no effect if all six vanish).
  std::optional<int> negate_triangle = std::nullopt;
};

struct CertificateReport {
  CertificateConstants constants;
  CertificateFunctions functions;
  std::vector<SignCheck> checks;  // ordering, nonnegativity, alpha
  std::vector<Cell> cells;
  std::vector<Triangle> triangles;
  std::vector<BernsteinRecord> bernstein;
  std::vector<AuditItem> audit;
  int zero_coeffs = 0, positive_coeffs = 0, negative_coeffs = 0;
  std::vector<int> failing_triangles;
  FieldElem alpha;
  RatPoly alpha_minpoly;
  std::vector<RootInterval> alpha_roots;
  std::string failed_stage;  // empty when every stage passed
  std::string diagnostic;
  bool verdict = false;

  std::size_t coefficient_count() const { return bernstein.size() * 6; }
};

namespace detail {

inline void fail(CertificateReport& rep, const std::string& stage, const std::string& why) {
  if (rep.failed_stage.empty()) {
    rep.failed_stage = stage;
    rep.diagnostic = why;
  }
}

inline bool all_pass(const std::vector<SignCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass()) return false;
  return true;
}

}  // namespace detail

inline constexpr int kExpectedCells = 24;
inline constexpr int kExpectedTriangles = 40;

/// Runs constants, functions, nonnegativity, subdivision, triangulation,
/// Bernstein, objective and audit. The verdict is true iff every stage
/// passed; a fatal stage stops the run and is named in the report.
inline CertificateReport verify_all(const VerifyOptions& opts = {}) {
  CertificateReport rep;
  std::string stage = "constants";
  try {
    rep.constants = compute_constants();
    auto& k = rep.constants;
    if (opts.flip_r) {
      k.r = -k.r;
      derive_coefficients(k);
    }
    for (auto& c : ordering_checks(k)) rep.checks.push_back(std::move(c));
    if (!detail::all_pass(rep.checks)) detail::fail(rep, stage, "breakpoint ordering");

    stage = "functions";
    rep.functions = build_functions(k);

    stage = "nonnegativity";
    const auto nn = nonnegativity_checks(k, rep.functions);
    if (!detail::all_pass(nn)) detail::fail(rep, stage, "an endpoint or shape check failed");
    rep.checks.insert(rep.checks.end(), nn.begin(), nn.end());

    stage = "subdivision";
    rep.cells = subdivide(k, rep.functions);
    if (static_cast<int>(rep.cells.size()) != kExpectedCells)
      throw std::runtime_error("expected " + std::to_string(kExpectedCells) + " cells, got " +
                               std::to_string(rep.cells.size()));
    {
      const SignCheck outside{"u-v=2(1-p) misses the triangle", Sign::negative,
                              field_sign(Rational(1) - Rational(2) * (Rational(1) - k.p))};
      rep.checks.push_back(outside);
      if (!outside.pass()) detail::fail(rep, stage, outside.name);
    }

    stage = "triangulation";
    rep.triangles = triangulate(rep.cells);
    if (static_cast<int>(rep.triangles.size()) != kExpectedTriangles) {
      for (auto& cell : rep.cells) cell.vertices = merge_collinear(cell.vertices);
      rep.triangles = triangulate(rep.cells);
    }
    if (static_cast<int>(rep.triangles.size()) != kExpectedTriangles)
      throw std::runtime_error("expected " + std::to_string(kExpectedTriangles) + " triangles, got " +
                               std::to_string(rep.triangles.size()));

    stage = "bernstein";
    std::vector<BivQuad> slack;
    for (const auto& cell : rep.cells) slack.push_back(slack_on_cell(cell, rep.functions));
    rep.bernstein.resize(rep.triangles.size());
    const int threads = std::max(1, opts.threads);
    auto work = [&](int t) {
      for (std::size_t i = static_cast<std::size_t>(t); i < rep.triangles.size(); i += static_cast<std::size_t>(threads)) {
        const auto& tri = rep.triangles[i];
        rep.bernstein[i] = bernstein(tri, slack[static_cast<std::size_t>(tri.cell)]);
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    if (opts.negate_triangle) {
      for (auto& rec : rep.bernstein) {
        if (rec.triangle != *opts.negate_triangle) continue;
        for (std::size_t j = 0; j < 6; ++j)
          if (!rec.coeffs[j].is_zero()) {
            rec.coeffs[j] = -rec.coeffs[j];
            rec.signs[j] = field_sign(rec.coeffs[j]);
            break;
          }
      }
    }
    for (const auto& rec : rep.bernstein) {
      bool bad = false;
      for (auto s : rec.signs) {
        rep.zero_coeffs += s == Sign::zero;
        rep.positive_coeffs += s == Sign::positive;
        rep.negative_coeffs += s == Sign::negative;
        bad = bad || s == Sign::negative;
      }
      if (bad) rep.failing_triangles.push_back(rec.triangle);
    }
    if (!rep.failing_triangles.empty()) {
      std::string ids;
      for (int id : rep.failing_triangles) ids += (ids.empty() ? "" : ",") + std::to_string(id);
      detail::fail(rep, stage, "negative coefficient on triangle " + ids);
    }

    stage = "objective";
    rep.alpha = objective_alpha(k, rep.functions);
    rep.alpha_minpoly = alpha_minimal_polynomial();
    {
      const SignCheck root{"401a^3 - 1744a^2 + 2240a - 768 at alpha = 0", Sign::zero,
                           field_sign(evaluate(rep.alpha_minpoly, rep.alpha))};
      rep.checks.push_back(root);
      rep.alpha_roots = isolate_real_roots(rep.alpha_minpoly);
      const bool three = rep.alpha_roots.size() == 3;
      rep.checks.push_back({"alpha cubic has three real roots", Sign::positive, three ? Sign::positive : Sign::zero});
      if (three) {
        rep.checks.push_back({"alpha above the first root", Sign::positive, field_sign(rep.alpha - rep.alpha_roots[0].hi)});
        rep.checks.push_back({"alpha below the third root", Sign::negative, field_sign(rep.alpha - rep.alpha_roots[2].lo)});
      }
      for (std::size_t i = rep.checks.size() - (three ? 4 : 2); i < rep.checks.size(); ++i)
        if (!rep.checks[i].pass()) detail::fail(rep, stage, rep.checks[i].name);
    }

    stage = "audit";
    rep.audit = derivation_audit(k);
    if (!audit_passes(rep.audit)) detail::fail(rep, stage, "a derivation residual did not vanish");
  } catch (const std::exception& ex) {
    detail::fail(rep, stage, ex.what());
  }
  rep.verdict = rep.failed_stage.empty();
  return rep;
}

using Decimal50 = boost::multiprecision::cpp_dec_float_50;

inline Decimal50 to_decimal50(const FieldElem& x) {
  const Rational q = x.approximate(Rational(1) / pow10(60));
  return Decimal50(numerator_of(q).str()) / Decimal50(denominator_of(q).str());
}

/// Floating sanity layer: G >= 0 at random interior points of random
/// triangles, evaluated piecewise with 50-digit decimals. Returns the number
/// of points where G < -1e-40.
inline int spot_check(const CertificateReport& rep, int triangles, int points, unsigned seed) {
  std::mt19937 rng(seed);
  const auto& fn = rep.functions;
  std::vector<std::vector<Decimal50>> bp(2);
  std::vector<std::vector<std::array<Decimal50, 3>>> pc(2);
  for (int h = 0; h < 2; ++h) {
    const auto& func = h == 0 ? fn.A : fn.B;
    for (const auto& b : func.breakpoints) bp[static_cast<std::size_t>(h)].push_back(to_decimal50(b));
    for (const auto& q : func.pieces)
      pc[static_cast<std::size_t>(h)].push_back({to_decimal50(q.c0), to_decimal50(q.c1), to_decimal50(q.c2)});
  }
  auto eval = [&](int h, const Decimal50& t) {
    const auto& b = bp[static_cast<std::size_t>(h)];
    std::size_t i = 0;
    while (i + 2 < b.size() && t > b[i + 1]) ++i;
    const auto& q = pc[static_cast<std::size_t>(h)][i];
    return q[0] + t * (q[1] + t * q[2]);
  };
  std::uniform_int_distribution<std::size_t> pick(0, rep.triangles.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Decimal50 tol("1e-40");
  int bad = 0;
  for (int t = 0; t < triangles; ++t) {
    const auto& tri = rep.triangles[pick(rng)];
    std::array<std::array<Decimal50, 2>, 3> v;
    for (std::size_t i = 0; i < 3; ++i) v[i] = {to_decimal50(tri.v[i].u), to_decimal50(tri.v[i].v)};
    for (int s = 0; s < points; ++s) {
      double l0 = unit(rng), l1 = unit(rng);
      if (l0 + l1 > 1) {
        l0 = 1 - l0;
        l1 = 1 - l1;
      }
      const Decimal50 w0(l0), w1(l1), w2 = Decimal50(1) - w0 - w1;
      const Decimal50 u = w0 * v[0][0] + w1 * v[1][0] + w2 * v[2][0];
      const Decimal50 vv = w0 * v[0][1] + w1 * v[1][1] + w2 * v[2][1];
      const Decimal50 g = eval(0, (u + vv) / 2) + eval(0, (2 - u + vv) / 2) + eval(1, u) + eval(1, vv) - 1;
      if (g < -tol) ++bad;
    }
  }
  return bad;
}

/// "c0,c1,c2".
inline std::string field_triple(const FieldElem& x) {
  return to_string(x.c0()) + "," + to_string(x.c1()) + "," + to_string(x.c2());
}

inline std::string constants_tsv(const CertificateReport& rep, int places) {
  std::ostringstream os;
  const auto& k = rep.constants;
  os << "name\tc0\tc1\tc2\tdecimal\n";
  os << "p\t" << to_string(k.p_interval.lo) << '\t' << to_string(k.p_interval.hi) << "\t-\tinterval\n";
  for (const auto& [name, value] : k.named()) os << name << '\t' << to_tsv(value) << '\t' << value.decimal(places) << '\n';
  if (rep.alpha.field())
    os << "alpha\t" << to_tsv(rep.alpha) << '\t' << rep.alpha.decimal(places) << '\n';
  return os.str();
}

inline std::string sign_checks_tsv(const CertificateReport& rep) {
  std::ostringstream os;
  os << "name\texpected\tcomputed\tpass\n";
  for (const auto& c : rep.checks)
    os << c.name << '\t' << sign_char(c.expected) << '\t' << sign_char(c.computed) << '\t'
       << (c.pass() ? "true" : "false") << '\n';
  return os.str();
}

inline std::string triangles_tsv(const CertificateReport& rep) {
  std::ostringstream os;
  os << "tri_id\tcell_id\tu0 v0\tu1 v1\tu2 v2\n";
  for (const auto& t : rep.triangles) {
    os << t.id << '\t' << t.cell;
    for (const auto& x : t.v) os << '\t' << field_triple(x.u) << ' ' << field_triple(x.v);
    os << '\n';
  }
  return os.str();
}

inline std::string bernstein_tsv(const CertificateReport& rep) {
  std::ostringstream os;
  os << "tri_id\tijk\tc0\tc1\tc2\tsign\n";
  for (const auto& rec : rep.bernstein)
    for (std::size_t j = 0; j < 6; ++j)
      os << rec.triangle << '\t' << bernstein_labels()[j] << '\t' << to_tsv(rec.coeffs[j]) << '\t'
         << sign_char(rec.signs[j]) << '\n';
  return os.str();
}

inline std::string report_text(const CertificateReport& rep, int places) {
  std::ostringstream os;
  os << "odd-fat continuum certificate\n";
  os << "field: 401p^3 - 331p^2 + 19p + 7 = 0, " << to_string(rep.constants.p_interval.lo) << " < p < "
     << to_string(rep.constants.p_interval.hi) << '\n';
  if (rep.constants.p.field()) os << "p = " << rep.constants.p.decimal(places) << '\n';
  int passed = 0;
  for (const auto& c : rep.checks) passed += c.pass();
  os << "sign checks: " << passed << "/" << rep.checks.size() << " passed\n";
  if (rep.constants.ell.field()) os << "sign of ell: " << sign_char(field_sign(rep.constants.ell)) << " (not asserted)\n";
  os << "cells: " << rep.cells.size() << '\n';
  os << "triangles: " << rep.triangles.size() << '\n';
  os << "bernstein coefficients: " << rep.coefficient_count() << " (zero " << rep.zero_coeffs << ", positive "
     << rep.positive_coeffs << ", negative " << rep.negative_coeffs << ")\n";
  if (!rep.failing_triangles.empty()) {
    os << "triangles with a negative coefficient:";
    for (int id : rep.failing_triangles) os << ' ' << id;
    os << '\n';
  }
  if (rep.alpha.field()) {
    os << "alpha = " << to_string(rep.alpha.c0()) << " + " << to_string(rep.alpha.c1()) << " p + "
       << to_string(rep.alpha.c2()) << " p^2\n";
    os << "alpha ~ " << rep.alpha.decimal(places) << '\n';
    os << "alpha is the middle real root of 401a^3 - 1744a^2 + 2240a - 768\n";
  }
  int audit_ok = 0, audit_total = 0;
  for (const auto& a : rep.audit) {
    if (a.informational) continue;
    ++audit_total;
    audit_ok += a.holds;
  }
  os << "derivation audit: " << audit_ok << "/" << audit_total << " identities hold\n";
  for (const auto& a : rep.audit)
    if (a.informational || !a.holds || !a.note.empty())
      os << "  " << (a.informational ? "[info] " : "") << a.name << ": " << (a.holds ? "holds" : "fails")
         << (a.note.empty() ? "" : " (" + a.note + ")") << '\n';
  if (!rep.verdict) os << "failed stage: " << rep.failed_stage << " (" << rep.diagnostic << ")\n";
  os << "verdict: " << (rep.verdict ? "true" : "false") << '\n';
  if (rep.verdict) os << "conclusion: Lambda_fat <= alpha\n";
  return os.str();
}

/// Writes constants.tsv, sign_checks.tsv, triangles.tsv,
/// bernstein_coefficients.tsv and report.txt into `dir`.
inline void write_package(const CertificateReport& rep, const std::filesystem::path& dir, int places) {
  std::filesystem::create_directories(dir);
  auto put = [&](const char* name, const std::string& text) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw std::runtime_error(std::string("cannot write ") + (dir / name).string());
    out << text;
  };
  put("constants.tsv", constants_tsv(rep, places));
  put("sign_checks.tsv", sign_checks_tsv(rep));
  put("triangles.tsv", triangles_tsv(rep));
  put("bernstein_coefficients.tsv", bernstein_tsv(rep));
  put("report.txt", report_text(rep, places));
}

}  // namespace ntil::cert
