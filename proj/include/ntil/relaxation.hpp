#pragma once

#include "ntil/algebra/rational.hpp"
#include "ntil/grid.hpp"
#include "ntil/lp.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ntil::relax {

using lp::LpModel;
using lp::LpSolution;

/// Row labels of the four-direction model: the lines meeting C_eps, ordered
/// rows, columns, D+ (c ascending), D- (c ascending).
inline std::vector<LineId> four_direction_lines(int n, int eps) {
  const ParityClass pc(n, eps);
  std::vector<LineId> out;
  for (auto f : kLineFamilies)
    for (const auto& l : family_lines(f, n)) {
      const auto pts = line_points(l, n);
      if (std::any_of(pts.begin(), pts.end(), [&](const GridPoint& p) { return pc.contains(p); })) out.push_back(l);
    }
  return out;
}

/// max sum z_p over C_eps with at most 2 (fractional) points on every row,
/// column and diagonal. Variables follow class_points order, rows follow
/// four_direction_lines.
inline LpModel build_four_direction(int n, int eps) {
  if (n < 2) throw std::invalid_argument("build_four_direction: n must be at least 2");
  const ParityClass pc(n, eps);
  const auto pts = class_points(pc);
  LpModel model;
  model.sense = lp::Sense::maximize;
  model.objective.assign(pts.size(), Rational(1));
  for (const auto& l : four_direction_lines(n, eps)) {
    lp::Constraint row{std::vector<Rational>(pts.size(), Rational(0)), lp::Relation::le, Rational(2)};
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (on_line(l, pts[j])) row.coeffs[j] = 1;
    model.rows.push_back(std::move(row));
  }
  return model;
}

/// Nonnegative weights on every line of the four families, indexed by
/// offset - min_offset within each family.
struct LineWeights {
  int n = 0;
  std::array<std::vector<Rational>, 4> w;

  explicit LineWeights(int n_ = 0) : n(n_) {
    for (auto f : kLineFamilies)
      w[static_cast<std::size_t>(f)].assign(static_cast<std::size_t>(n_ > 0 ? max_offset(f, n_) - min_offset(f, n_) + 1 : 0),
                                            Rational(0));
  }
  Rational& operator[](const LineId& l) {
    return w[static_cast<std::size_t>(l.family)].at(static_cast<std::size_t>(l.offset - min_offset(l.family, n)));
  }
  const Rational& operator[](const LineId& l) const {
    return w[static_cast<std::size_t>(l.family)].at(static_cast<std::size_t>(l.offset - min_offset(l.family, n)));
  }
  Rational total() const {
    Rational s = 0;
    for (const auto& fam : w)
      for (const auto& x : fam) s += x;
    return s;
  }
};

/// True iff all weights are nonnegative and every point of C_eps has total
/// weight at least 1 on its four lines. Such weights bound L_mono by
/// 2 * weights.total().
inline bool dual_cover_check(int n, int eps, const LineWeights& weights) {
  if (weights.n != n) return false;
  for (const auto& fam : weights.w)
    for (const auto& x : fam)
      if (x < 0) return false;
  for (const auto& p : class_points(ParityClass(n, eps))) {
    Rational cover = 0;
    for (auto f : kLineFamilies) cover += weights[LineId{f, line_offset(f, p)}];
    if (cover < 1) return false;
  }
  return true;
}

/// Line weights read off the row duals of an optimal four-direction solve.
inline LineWeights weights_from_duals(int n, int eps, const LpSolution& sol) {
  const auto lines = four_direction_lines(n, eps);
  if (sol.status != lp::Status::optimal || sol.dual.size() != lines.size())
    throw std::invalid_argument("weights_from_duals: need an optimal four-direction solution");
  LineWeights w(n);
  for (std::size_t i = 0; i < lines.size(); ++i) w[lines[i]] = sol.dual[i];
  return w;
}

enum class CaseKind { oddFat, oddThin, even };

inline const char* case_name(CaseKind k) {
  switch (k) {
    case CaseKind::oddFat: return "fat";
    case CaseKind::oddThin: return "thin";
    case CaseKind::even: return "even";
  }
  return "?";
}

inline CaseKind parse_case(const std::string& s) {
  if (s == "fat" || s == "oddFat") return CaseKind::oddFat;
  if (s == "thin" || s == "oddThin") return CaseKind::oddThin;
  if (s == "even") return CaseKind::even;
  throw std::invalid_argument("unknown reduced case '" + s + "' (expected fat, thin or even)");
}

struct ReducedDualCase {
  CaseKind kind = CaseKind::oddFat;
  int m = 1;

  int side() const { return kind == CaseKind::even ? 2 * m : 2 * m + 1; }
  int eps() const { return kind == CaseKind::oddThin ? 1 : 0; }
  std::size_t a_len() const { return static_cast<std::size_t>(kind == CaseKind::oddFat ? m + 1 : m); }
  std::size_t b_len() const { return static_cast<std::size_t>(kind == CaseKind::even ? m : m + 1); }
  std::size_t c_len() const { return static_cast<std::size_t>(kind == CaseKind::even ? m : 0); }
  std::size_t num_vars() const { return a_len() + b_len() + c_len(); }
};

/// Variable names a0.., b0.., c0.. in model column order.
inline std::vector<std::string> reduced_variable_names(const ReducedDualCase& rc) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < rc.a_len(); ++i) out.push_back("a" + std::to_string(i));
  for (std::size_t i = 0; i < rc.b_len(); ++i) out.push_back("b" + std::to_string(i));
  for (std::size_t i = 0; i < rc.c_len(); ++i) out.push_back("c" + std::to_string(i));
  return out;
}

/// The symmetry-reduced dual program: minimize Phi subject to one >= 1 row
/// per representative (u, v), in lexicographic (u, v) order.
inline LpModel build_reduced(const ReducedDualCase& rc) {
  if (rc.m < 1) throw std::invalid_argument("build_reduced: m must be at least 1");
  const int m = rc.m;
  const std::size_t A = 0, B = rc.a_len(), C = rc.a_len() + rc.b_len();
  LpModel model;
  model.sense = lp::Sense::minimize;
  model.objective.assign(rc.num_vars(), Rational(8));
  switch (rc.kind) {
    case CaseKind::oddFat:
      model.objective[A + static_cast<std::size_t>(m)] = 4;
      model.objective[B + static_cast<std::size_t>(m)] = 4;
      break;
    case CaseKind::oddThin: model.objective[B + static_cast<std::size_t>(m)] = 4; break;
    case CaseKind::even:
      for (std::size_t i = B; i < rc.num_vars(); ++i) model.objective[i] = 4;
      model.objective[C] = 2;
      break;
  }
  auto add = [&](std::initializer_list<std::size_t> cols) {
    lp::Constraint row{std::vector<Rational>(rc.num_vars(), Rational(0)), lp::Relation::ge, Rational(1)};
    for (auto c : cols) row.coeffs[c] += 1;
    model.rows.push_back(std::move(row));
  };
  auto at = [](std::size_t base, int i) { return base + static_cast<std::size_t>(i); };
  for (int u = 0; u <= m; ++u)
    for (int v = 0; v <= u; ++v) switch (rc.kind) {
        case CaseKind::oddFat:
          if (u + v <= m) add({at(A, u), at(A, m - v), at(B, u + v), at(B, u - v)});
          break;
        case CaseKind::oddThin:
          if (u + v <= m - 1) add({at(A, u), at(A, m - v - 1), at(B, u + v + 1), at(B, u - v)});
          break;
        case CaseKind::even:
          if (u <= m - 1) add({at(A, u - v), at(A, std::min(u + v, 2 * m - 1 - u - v)), at(B, u), at(C, v)});
          break;
      }
  return model;
}

struct ProfileSolution {
  ReducedDualCase rc;
  std::vector<Rational> a, b, c;
  Rational value;
};

/// Splits an optimal reduced solve into its profiles.
inline ProfileSolution to_profiles(const ReducedDualCase& rc, const LpSolution& sol) {
  if (sol.status != lp::Status::optimal || sol.primal.size() != rc.num_vars())
    throw std::invalid_argument("to_profiles: need an optimal reduced solution");
  ProfileSolution p{rc, {}, {}, {}, sol.value};
  auto it = sol.primal.begin();
  p.a.assign(it, it + static_cast<std::ptrdiff_t>(rc.a_len()));
  it += static_cast<std::ptrdiff_t>(rc.a_len());
  p.b.assign(it, it + static_cast<std::ptrdiff_t>(rc.b_len()));
  it += static_cast<std::ptrdiff_t>(rc.b_len());
  p.c.assign(it, sol.primal.end());
  return p;
}

inline ProfileSolution solve_reduced(const ReducedDualCase& rc) {
  const auto sol = lp::solve(build_reduced(rc));
  if (sol.status != lp::Status::optimal) throw std::runtime_error("solve_reduced: reduced program not optimal");
  return to_profiles(rc, sol);
}

/// Phi evaluated on the profiles.
inline Rational objective_value(const ProfileSolution& p) {
  const auto model = build_reduced(p.rc);
  std::vector<Rational> x = p.a;
  x.insert(x.end(), p.b.begin(), p.b.end());
  x.insert(x.end(), p.c.begin(), p.c.end());
  Rational s = 0;
  for (std::size_t j = 0; j < x.size(); ++j) s += model.objective[j] * x[j];
  return s;
}

/// Assigns every profile value to each line in its orbit. For the even case
/// with eps = 1 the weights are carried over by the reflection x -> n-1-x.
inline LineWeights unfold(const ProfileSolution& p, int eps) {
  const int m = p.rc.m, n = p.rc.side();
  if (p.rc.kind != CaseKind::even && eps != p.rc.eps())
    throw std::invalid_argument("unfold: odd cases fix the colour class");
  auto idx = [](int i) { return static_cast<std::size_t>(i); };
  LineWeights w(n);
  auto weight0 = [&](const LineId& l) -> Rational {
    const int o = l.offset;
    switch (p.rc.kind) {
      case CaseKind::oddFat:
        if (l.family == LineFamily::row || l.family == LineFamily::column) return p.b[idx(std::min(o, n - 1 - o))];
        if (o % 2 != 0) return 0;
        if (l.family == LineFamily::diag_minus) return p.a[idx(std::min(o / 2, 2 * m - o / 2))];
        return p.a[idx(m - std::abs(o) / 2)];
      case CaseKind::oddThin:
        if (l.family == LineFamily::row || l.family == LineFamily::column) return p.b[idx(std::min(o, n - 1 - o))];
        if (o % 2 == 0) return 0;
        if (l.family == LineFamily::diag_minus) return p.a[idx(std::min((o - 1) / 2, 2 * m - 1 - (o - 1) / 2))];
        return p.a[idx(m - (std::abs(o) + 1) / 2)];
      case CaseKind::even:
        if (l.family == LineFamily::row || l.family == LineFamily::column) return p.a[idx(std::min(o, n - 1 - o))];
        if (o % 2 != 0) return 0;
        if (l.family == LineFamily::diag_minus) return p.b[idx(std::min(o / 2, 2 * m - 1 - o / 2))];
        return p.c[idx(std::abs(o) / 2)];
    }
    return 0;
  };
  for (auto f : kLineFamilies)
    for (const auto& l : family_lines(f, n)) {
      if (eps == 0 || p.rc.kind != CaseKind::even) {
        w[l] = weight0(l);
        continue;
      }
      LineId r = l;
      if (f == LineFamily::column) r.offset = n - 1 - l.offset;
      if (f == LineFamily::diag_plus) r = {LineFamily::diag_minus, n - 1 - l.offset};
      if (f == LineFamily::diag_minus) r = {LineFamily::diag_plus, n - 1 - l.offset};
      w[l] = weight0(r);
    }
  return w;
}

/// optimum / n for the reduced program of the case.
inline Rational ratio_report(const ReducedDualCase& rc) {
  return solve_reduced(rc).value / rc.side();
}

struct IndexRange {
  int lo = 0;
  int hi = 0;
};

/// "LO..HI" with LO <= HI.
inline IndexRange parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("range must look like LO..HI: '" + s + "'");
  IndexRange r;
  try {
    std::size_t used = 0;
    r.lo = std::stoi(s.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("");
    const auto tail = s.substr(dots + 2);
    r.hi = std::stoi(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("range must look like LO..HI: '" + s + "'");
  }
  if (r.lo > r.hi) throw std::invalid_argument("range is empty: '" + s + "'");
  return r;
}

struct CurvatureReport {
  Rational a_scaled;             // m^2 * avg second difference of a
  Rational b_scaled;             // m^2 * avg second difference of b
  std::optional<Rational> ratio; // empty when the b average vanishes
};

namespace detail {

/// Mean of x_{i+1} - 2 x_i + x_{i-1} over the interior points of the window.
inline Rational mean_second_difference(const std::vector<Rational>& x, const IndexRange& w, const char* name) {
  if (w.lo < 0 || w.hi >= static_cast<int>(x.size()))
    throw std::invalid_argument(std::string("curvature_diagnostic: ") + name + " window outside the profile");
  if (w.hi - w.lo + 1 < 3)
    throw std::invalid_argument(std::string("curvature_diagnostic: ") + name + " window needs at least 3 points");
  Rational s = 0;
  for (int i = w.lo + 1; i < w.hi; ++i) {
    const auto k = static_cast<std::size_t>(i);
    s += x[k + 1] - 2 * x[k] + x[k - 1];
  }
  return s / (w.hi - w.lo - 1);
}

}  // namespace detail

/// Scaled second-difference averages of the a and b profiles over the
/// interior of each window.
inline CurvatureReport curvature_diagnostic(const ProfileSolution& p, const IndexRange& a_window,
                                            const IndexRange& b_window) {
  const Rational m2 = Rational(p.rc.m) * p.rc.m;
  CurvatureReport r;
  const Rational da = detail::mean_second_difference(p.a, a_window, "a");
  const Rational db = detail::mean_second_difference(p.b, b_window, "b");
  r.a_scaled = m2 * da;
  r.b_scaled = m2 * db;
  if (db != 0) r.ratio = da / db;
  return r;
}

/// Profile dump: "index<TAB>a<TAB>b[<TAB>c]" exact, then one decimal column
/// per profile. Entries past a profile's length are "-".
inline std::string profiles_to_tsv(const ProfileSolution& p, int places = 15) {
  const bool has_c = p.rc.kind == CaseKind::even;
  std::ostringstream os;
  os << "index\ta\tb" << (has_c ? "\tc" : "") << "\ta_decimal\tb_decimal" << (has_c ? "\tc_decimal" : "") << '\n';
  const std::size_t len = std::max({p.a.size(), p.b.size(), p.c.size()});
  auto cell = [&](const std::vector<Rational>& v, std::size_t i, bool dec) {
    if (i >= v.size()) return std::string("-");
    return dec ? to_decimal(v[i], places) : to_string(v[i]);
  };
  for (std::size_t i = 0; i < len; ++i) {
    os << i << '\t' << cell(p.a, i, false) << '\t' << cell(p.b, i, false);
    if (has_c) os << '\t' << cell(p.c, i, false);
    os << '\t' << cell(p.a, i, true) << '\t' << cell(p.b, i, true);
    if (has_c) os << '\t' << cell(p.c, i, true);
    os << '\n';
  }
  return os.str();
}

}  // namespace ntil::relax
