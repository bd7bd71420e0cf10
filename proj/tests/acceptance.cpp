// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "ntil/certificate/verify.hpp"
#include "ntil/relaxation.hpp"
#include "ntil/search.hpp"
#include "support/lp_oracle.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace ntil;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << s << "s";
  return os.str();
}

struct Table1Row {
  int n;
  const char* l0;
  int d0;
  const char* l1;
  int d1;
};

const Table1Row kTable1[] = {
    {2, "2.000", 2, "2.000", 2},      {3, "4.000", 4, "4.000", 4},      {4, "6.000", 6, "6.000", 6},
    {5, "7.200", 7, "8.000", 8},      {6, "9.000", 8, "9.000", 8},      {7, "10.667", 10, "10.667", 10},
    {8, "12.333", 12, "12.333", 12},  {9, "14.133", 14, "13.714", 13},  {10, "15.556", 15, "15.556", 15},
    {11, "17.120", 16, "17.000", 16}, {12, "18.750", 18, "18.750", 18}, {13, "20.267", 20, "20.364", 20},
    {14, "22.000", 21, "22.000", 21}, {15, "23.478", 23, "23.500", 23}, {16, "25.091", 24, "25.091", 24},
};

struct Options {
  double search_budget = 60;
  int max_search_n = 16;
  bool m80 = false;
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Shared between criteria 4, 5 and 6.
struct TableState {
  std::array<std::array<Rational, 2>, 17> lp;
  std::array<std::array<NtilWitness, 2>, 17> search;
  std::array<bool, 17> searched{};
};

Outcome certificate_end_to_end(const cert::CertificateReport& rep, double secs) {
  const bool ok = rep.verdict && rep.cells.size() == 24 && rep.triangles.size() == 40 &&
                  rep.coefficient_count() == 240 && rep.zero_coeffs == 102 && rep.positive_coeffs == 138 &&
                  rep.negative_coeffs == 0 && secs <= 300;
  std::ostringstream os;
  os << "verdict " << (rep.verdict ? "true" : "false") << ", cells " << rep.cells.size() << ", triangles "
     << rep.triangles.size() << ", coefficients " << rep.coefficient_count() << " (zero " << rep.zero_coeffs
     << ", positive " << rep.positive_coeffs << ", negative " << rep.negative_coeffs
     << "; expected 102/138/0), " << fmt_seconds(secs);
  return {ok, os.str()};
}

Outcome alpha_identity(const cert::CertificateReport& rep) {
  if (!rep.alpha.field()) return {false, "no objective value"};
  const bool root = evaluate(cert::alpha_minimal_polynomial(), rep.alpha).is_zero();
  const auto roots = isolate_real_roots(cert::alpha_minimal_polynomial());
  const bool middle = roots.size() == 3 && field_sign(rep.alpha - roots[0].hi) == Sign::positive &&
                      field_sign(rep.alpha - roots[2].lo) == Sign::negative;
  const FieldElem target = rep.alpha.field()->element(parse_rational("1576823396873808") / pow10(15));
  const Rational tol = Rational(1) / pow10(14);
  const FieldElem diff = rep.alpha - target;
  const bool close = field_sign(diff - tol) == Sign::negative && field_sign(diff + tol) == Sign::positive;
  std::ostringstream os;
  os << "cubic residual " << (root ? "0" : "nonzero") << ", real roots " << roots.size() << ", middle "
     << (middle ? "yes" : "no") << ", alpha " << rep.alpha.decimal(15);
  return {root && middle && close, os.str()};
}

Outcome derivation_audit(const cert::CertificateReport& rep) {
  int ok = 0, total = 0;
  for (const auto& a : rep.audit) {
    if (a.informational) continue;
    ++total;
    ok += a.holds;
  }
  return {total > 0 && ok == total, std::to_string(ok) + "/" + std::to_string(total) + " identities hold"};
}

Outcome table1_lp(TableState& st) {
  const auto t0 = Clock::now();
  int matched = 0;
  std::string bad;
  for (const auto& row : kTable1)
    for (int eps : {0, 1}) {
      const auto model = relax::build_four_direction(row.n, eps);
      const auto sol = lp::solve(model);
      st.lp[static_cast<std::size_t>(row.n)][static_cast<std::size_t>(eps)] = sol.value;
      const std::string got = to_decimal(sol.value, 3);
      if (sol.status == lp::Status::optimal && got == (eps ? row.l1 : row.l0) && lp::check_certificate(model, sol))
        ++matched;
      else
        bad += " n=" + std::to_string(row.n) + "/eps=" + std::to_string(eps) + ":" + got;
    }
  const double secs = seconds_since(t0);
  return {matched == 30 && secs <= 60,
          std::to_string(matched) + "/30 match at 3 places, " + fmt_seconds(secs) + (bad.empty() ? "" : ";" + bad)};
}

Outcome table1_search(TableState& st, const Options& opt) {
  const auto t0 = Clock::now();
  bool ok = true;
  int exact = 0, truncated = 0;
  std::string notes;
  for (const auto& row : kTable1) {
    if (row.n > opt.max_search_n) continue;
    for (int eps : {0, 1}) {
      SearchOptions so;
      if (row.n >= 11) so.budget = std::chrono::duration<double>(opt.search_budget);
      const auto w = max_ntil(row.n, eps, so);
      const std::size_t n = static_cast<std::size_t>(row.n), e = static_cast<std::size_t>(eps);
      st.search[n][e] = w;
      st.searched[n] = true;
      const int want = eps ? row.d1 : row.d0;
      if (!verify_ntil(w)) {
        ok = false;
        notes += " n=" + std::to_string(row.n) + "/eps=" + std::to_string(eps) + ":invalid witness";
      } else if (w.exact) {
        ++exact;
        if (w.size != want) {
          ok = false;
          notes += " n=" + std::to_string(row.n) + "/eps=" + std::to_string(eps) + ":" + std::to_string(w.size);
        }
      } else {
        ++truncated;
        if (row.n <= 10 || w.size > want) ok = false;
        notes += " n=" + std::to_string(row.n) + "/eps=" + std::to_string(eps) + ":>=" + std::to_string(w.size);
      }
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << exact << " exact, " << truncated << " truncated (budget " << opt.search_budget << "s for n>=11), "
     << fmt_seconds(secs) << (notes.empty() ? "" : ";" + notes);
  return {ok, os.str()};
}

Outcome floor_gap(const TableState& st) {
  bool ok = true;
  int checked = 0;
  std::string gaps;
  for (int n = 2; n <= 16; ++n) {
    if (!st.searched[static_cast<std::size_t>(n)]) continue;
    for (int eps : {0, 1}) {
      const auto& w = st.search[static_cast<std::size_t>(n)][static_cast<std::size_t>(eps)];
      if (!w.exact) continue;
      const BigInt gap = floor(st.lp[static_cast<std::size_t>(n)][static_cast<std::size_t>(eps)]) - w.size;
      const int want = (n == 6 || n == 11 || n == 14 || n == 16) ? 1 : 0;
      ++checked;
      if (gap != want) ok = false;
      if (gap != 0) gaps += " n=" + std::to_string(n) + "/eps=" + std::to_string(eps) + ":" + gap.str();
    }
  }
  return {ok && checked > 0, std::to_string(checked) + " completed cases, nonzero gaps:" + (gaps.empty() ? " none" : gaps)};
}

Outcome reduction_soundness() {
  using relax::CaseKind;
  int checked = 0;
  std::string bad;
  auto full = [](int n, int eps) { return lp::solve(relax::build_four_direction(n, eps)).value; };
  for (int m = 1; 2 * m + 1 <= 13; ++m) {
    checked += 2;
    if (relax::solve_reduced({CaseKind::oddFat, m}).value != full(2 * m + 1, 0)) bad += " fat m=" + std::to_string(m);
    if (relax::solve_reduced({CaseKind::oddThin, m}).value != full(2 * m + 1, 1)) bad += " thin m=" + std::to_string(m);
  }
  for (int m = 1; 2 * m <= 12; ++m) {
    const Rational even = relax::solve_reduced({CaseKind::even, m}).value;
    for (int eps : {0, 1}) {
      ++checked;
      if (even != full(2 * m, eps)) bad += " even m=" + std::to_string(m) + "/eps=" + std::to_string(eps);
    }
  }
  return {bad.empty(), std::to_string(checked) + " reduced/full pairs equal exactly" + (bad.empty() ? "" : "; mismatch:" + bad)};
}

struct FatRun {
  relax::ProfileSolution profiles;
  double seconds = 0;
};

FatRun solve_fat(int m) {
  const auto t0 = Clock::now();
  FatRun r{relax::solve_reduced({relax::CaseKind::oddFat, m}), 0};
  r.seconds = seconds_since(t0);
  return r;
}

Outcome table2_spot(const FatRun& run40, const std::optional<FatRun>& run80) {
  const Rational ratio = run40.profiles.value / run40.profiles.rc.side();
  const std::string got = to_decimal(ratio, 15);
  bool ok = got == "1.576420575749053" && run40.seconds <= 600;
  std::string detail = "m=40 ratio " + got + " in " + fmt_seconds(run40.seconds);
  if (run80) {
    const std::string got80 = to_decimal(run80->profiles.value / run80->profiles.rc.side(), 15);
    ok = ok && got80 == "1.576808190150374" && run80->seconds <= 7200;
    detail += "; m=80 ratio " + got80 + " in " + fmt_seconds(run80->seconds);
  } else {
    detail += "; m=80 stretch not run (--m80)";
  }
  return {ok, detail};
}

Outcome curvature(const FatRun& run40) {
  const auto rep = relax::curvature_diagnostic(run40.profiles, {30, 38}, {15, 22});
  const std::string a = to_decimal(rep.a_scaled, 10), b = to_decimal(rep.b_scaled, 10);
  std::string detail = "a " + a + ", b " + b + ", ratio " + (rep.ratio ? to_decimal(*rep.ratio, 10) : "undefined");
  if (rep.ratio && *rep.ratio == -2) {
    const bool ok = a == "-2.4794669146" && b == "1.2397334573";
    return {ok, detail + " (ratio exactly -2, averages " + (ok ? "match" : "differ") + ")"};
  }
  return {true, detail + " (optimizer differs from the published pattern; reported only)"};
}

Outcome property_suites() {
  std::vector<std::string> failed;

  std::mt19937_64 rng64(7);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 50);
  auto rnd = [&] { return Rational(num(rng64), den(rng64)); };
  const FieldPtr field = certificate_field();
  for (int i = 0; i < 100; ++i) {
    const auto a = field->element(rnd(), rnd(), rnd()), b = field->element(rnd(), rnd(), rnd());
    if (field_sign(a * b) != field_sign(a) * field_sign(b)) {
      failed.push_back("sign multiplicativity");
      break;
    }
  }

  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = lp::testing::random_model(rng, trial);
    const auto oracle = lp::testing::vertex_oracle(m);
    const auto s = lp::solve(m);
    const bool agree = oracle ? (s.status == lp::Status::optimal && s.value == *oracle && lp::check_certificate(m, s))
                              : s.status == lp::Status::infeasible;
    if (!agree) {
      failed.push_back("LP vertex oracle (trial " + std::to_string(trial) + ")");
      break;
    }
  }

  const auto rep = cert::verify_all();
  FieldElem area = field->element(0);
  bool disjoint = true;
  for (std::size_t i = 0; i < rep.cells.size(); ++i) {
    area += cert::polygon_area(rep.cells[i].vertices);
    for (std::size_t j = i + 1; j < rep.cells.size(); ++j)
      disjoint = disjoint && cert::interiors_disjoint(rep.cells[i].vertices, rep.cells[j].vertices);
  }
  if (area != field->element(Rational(1, 2)) || !disjoint) failed.push_back("tiling area");

  const auto flipped = cert::verify_all({.flip_r = true});
  const auto negated = cert::verify_all({.negate_triangle = 5});
  if (flipped.verdict || flipped.failed_stage != "nonnegativity" || negated.verdict ||
      negated.failing_triangles != std::vector<int>{5})
    failed.push_back("mutation");

  std::string detail = "sign multiplicativity x100, LP oracle x200, tiling area, mutation";
  if (!failed.empty()) {
    detail += "; failed:";
    for (const auto& f : failed) detail += " " + f;
  }
  return {failed.empty(), detail};
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Acceptance criteria"};
  app.add_option("--search-budget", opt.search_budget, "Seconds per search for n >= 11")->capture_default_str();
  app.add_option("--max-search-n", opt.max_search_n, "Largest n searched")->capture_default_str();
  app.add_flag("--m80", opt.m80, "Also run the m = 80 reduced program (slow)");
  CLI11_PARSE(app, argc, argv);

  int failures = 0;
  auto report = [&](int id, const std::string& title, const Outcome& o) {
    std::cout << "criterion " << id << " " << (o.pass ? "PASS" : "FAIL") << "  " << title << ": " << o.detail
              << std::endl;
    failures += !o.pass;
  };
  auto guarded = [&](int id, const std::string& title, const std::function<Outcome()>& fn) {
    try {
      report(id, title, fn());
    } catch (const std::exception& e) {
      report(id, title, {false, std::string("exception: ") + e.what()});
    }
  };

  const auto t0 = Clock::now();
  const auto rep = cert::verify_all();
  const double cert_secs = seconds_since(t0);
  guarded(1, "certificate end-to-end", [&] { return certificate_end_to_end(rep, cert_secs); });
  guarded(2, "alpha identity", [&] { return alpha_identity(rep); });
  guarded(3, "derivation audit", [&] { return derivation_audit(rep); });

  TableState st;
  guarded(4, "four-direction LP values", [&] { return table1_lp(st); });
  guarded(5, "exact search values", [&] { return table1_search(st, opt); });
  guarded(6, "floor gap", [&] { return floor_gap(st); });
  guarded(7, "reduction soundness", [&] { return reduction_soundness(); });

  std::optional<FatRun> run40, run80;
  guarded(8, "reduced odd-fat ratios", [&] {
    run40 = solve_fat(40);
    if (opt.m80) run80 = solve_fat(80);
    return table2_spot(*run40, run80);
  });
  guarded(9, "curvature diagnostic", [&] {
    if (!run40) return Outcome{false, "m=40 optimum unavailable"};
    return curvature(*run40);
  });
  guarded(10, "property suites", [&] { return property_suites(); });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
