#pragma once

#include "ntil/algebra/rational.hpp"

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ntil::lp {

enum class Sense { maximize, minimize };
enum class Relation { le, ge, eq };
enum class Status { optimal, infeasible, unbounded };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
  }
  return "?";
}

struct Constraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::le;
  Rational rhs;
};

/// Inequality-form linear program over the rationals with per-variable lower
/// bounds (all zero when `lower` is empty).
struct LpModel {
  Sense sense = Sense::maximize;
  std::vector<Rational> objective;
  std::vector<Constraint> rows;
  std::vector<Rational> lower;

  std::size_t num_vars() const { return objective.size(); }
  Rational lower_bound(std::size_t j) const { return lower.empty() ? Rational(0) : lower[j]; }
  bool zero_lower_bounds() const {
    for (const auto& l : lower)
      if (l != 0) return false;
    return true;
  }

  void validate() const {
    if (objective.empty()) throw std::invalid_argument("LpModel: no variables");
    if (!lower.empty() && lower.size() != objective.size())
      throw std::invalid_argument("LpModel: lower bounds have the wrong width");
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].coeffs.size() != objective.size())
        throw std::invalid_argument("LpModel: row " + std::to_string(i) + " has the wrong width");
  }
};

/// Optimal primal/dual pair. Dual signs follow the Lagrangian convention:
/// for maximize, y >= 0 on <= rows and y <= 0 on >= rows with c - A^T y <= 0;
/// for minimize, y >= 0 on >= rows and y <= 0 on <= rows with c - A^T y >= 0.
/// Equality rows carry free duals. At optimality value = b^T y + (c - A^T y)^T l.
struct LpSolution {
  Status status = Status::infeasible;
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
  std::size_t pivots = 0;
  bool transposed = false;
};

struct SolveOptions {
  /// Solve the dual program instead when rows outnumber columns by this factor.
  std::size_t transpose_ratio = 2;
  bool allow_transpose = true;
};

namespace detail {

/// Dense two-phase tableau simplex for  max c x  s.t. rows, x >= 0, using
/// Bland's rule: lowest-index entering column, lowest-index leaving basic
/// variable among ratio ties.
class Tableau {
 public:
  Tableau(const std::vector<std::vector<Rational>>& a, const std::vector<Relation>& rel,
          const std::vector<Rational>& b, const std::vector<Rational>& c)
      : m_(b.size()), n_(c.size()) {
    flip_.assign(m_, 1);
    std::vector<Relation> r = rel;
    for (std::size_t i = 0; i < m_; ++i)
      if (b[i] < 0) {
        flip_[i] = -1;
        if (r[i] == Relation::le) r[i] = Relation::ge;
        else if (r[i] == Relation::ge) r[i] = Relation::le;
      }

    // Column layout: structural | one slack/surplus per inequality | artificials.
    std::size_t col = n_;
    slack_col_.assign(m_, npos);
    for (std::size_t i = 0; i < m_; ++i)
      if (r[i] != Relation::eq) slack_col_[i] = col++;
    first_art_ = col;
    id_col_.assign(m_, npos);
    for (std::size_t i = 0; i < m_; ++i) id_col_[i] = r[i] == Relation::le ? slack_col_[i] : col++;
    cols_ = col;

    t_.assign(m_, std::vector<Rational>(cols_ + 1));
    basis_.assign(m_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational s = flip_[i];
      for (std::size_t j = 0; j < n_; ++j)
        if (a[i][j] != 0) t_[i][j] = s * a[i][j];
      if (slack_col_[i] != npos) t_[i][slack_col_[i]] = r[i] == Relation::le ? 1 : -1;
      t_[i][id_col_[i]] = 1;
      t_[i][cols_] = s * b[i];
      basis_[i] = id_col_[i];
    }
    cost_.assign(cols_, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) cost_[j] = c[j];
  }

  Status run() {
    // Phase 1: maximize minus the sum of artificials.
    if (first_art_ < cols_) {
      std::vector<Rational> phase1(cols_, Rational(0));
      for (std::size_t j = first_art_; j < cols_; ++j) phase1[j] = -1;
      price(phase1);
      if (iterate(true) != Status::optimal) throw std::logic_error("simplex: phase 1 cannot be unbounded");
      if (obj_[cols_] < 0) return Status::infeasible;
      drive_out_artificials();
    }
    price(cost_);
    return iterate(false);
  }

  Rational value() const { return obj_[cols_]; }
  std::size_t pivots() const { return pivots_; }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = t_[i][cols_];
    return x;
  }

  /// Row duals of the max problem in the caller's row orientation.
  std::vector<Rational> dual() const {
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < m_; ++i) y[i] = obj_[id_col_[i]] * flip_[i];
    return y;
  }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  /// obj_[j] = c_B B^-1 a_j - c_j for the given costs; obj_[cols_] = c_B x_B.
  void price(const std::vector<Rational>& cost) {
    obj_.assign(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) obj_[j] = -cost[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j)
        if (t_[i][j] != 0) obj_[j] += cb * t_[i][j];
    }
  }

  Status iterate(bool phase1) {
    const std::size_t limit = phase1 ? cols_ : first_art_;
    for (;;) {
      std::size_t enter = npos;
      for (std::size_t j = 0; j < limit; ++j)
        if (obj_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == npos) return Status::optimal;

      std::size_t leave = npos;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave == npos || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == npos) return Status::unbounded;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    ++pivots_;
    auto& pr = t_[row];
    const Rational inv = Rational(1) / pr[col];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= cols_; ++j)
      if (pr[j] != 0) {
        pr[j] *= inv;
        nz.push_back(j);
      }
    auto eliminate = [&](std::vector<Rational>& r) {
      if (r[col] == 0) return;
      const Rational f = r[col];
      for (std::size_t j : nz) sub_mul(r[j], f, pr[j], scratch_);
    };
    for (std::size_t i = 0; i < m_; ++i)
      if (i != row) eliminate(t_[i]);
    eliminate(obj_);
    basis_[row] = col;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < first_art_) continue;
      for (std::size_t j = 0; j < first_art_; ++j)
        if (t_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      // A row with no nonzero outside the artificials is redundant; its
      // artificial stays basic at level zero and never re-enters.
    }
  }

  std::size_t m_, n_, cols_ = 0, first_art_ = 0;
  std::vector<int> flip_;
  std::vector<std::size_t> slack_col_, id_col_, basis_;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> cost_, obj_;
  std::size_t pivots_ = 0;
  Rational scratch_;
};

inline LpSolution solve_direct(const LpModel& model) {
  const std::size_t n = model.num_vars(), m = model.rows.size();
  const Rational dir = model.sense == Sense::maximize ? 1 : -1;
  std::vector<std::vector<Rational>> a(m);
  std::vector<Relation> rel(m);
  std::vector<Rational> b(m), c(n);
  for (std::size_t j = 0; j < n; ++j) c[j] = dir * model.objective[j];
  for (std::size_t i = 0; i < m; ++i) {
    a[i] = model.rows[i].coeffs;
    rel[i] = model.rows[i].rel;
    b[i] = model.rows[i].rhs;
    for (std::size_t j = 0; j < n; ++j) b[i] -= a[i][j] * model.lower_bound(j);
  }

  Tableau tab(a, rel, b, c);
  LpSolution sol;
  sol.status = tab.run();
  sol.pivots = tab.pivots();
  if (sol.status != Status::optimal) return sol;

  sol.primal = tab.primal();
  for (std::size_t j = 0; j < n; ++j) sol.primal[j] += model.lower_bound(j);
  sol.dual = tab.dual();
  for (auto& y : sol.dual) y *= dir;
  sol.value = 0;
  for (std::size_t j = 0; j < n; ++j) sol.value += model.objective[j] * sol.primal[j];
  return sol;
}

/// Solves the LP dual of `model` (zero lower bounds) and maps both solutions back.
inline LpSolution solve_transposed(const LpModel& model) {
  const std::size_t n = model.num_vars(), m = model.rows.size();
  const Rational dir = model.sense == Sense::maximize ? 1 : -1;

  // In max form the row duals satisfy: y >= 0 (<=), y <= 0 (>=), free (=).
  // Substitute y = s * w with w >= 0, splitting free duals into two columns.
  struct DualColumn {
    std::size_t row;
    int s;
  };
  std::vector<DualColumn> cols;
  for (std::size_t i = 0; i < m; ++i) {
    switch (model.rows[i].rel) {
      case Relation::le: cols.push_back({i, 1}); break;
      case Relation::ge: cols.push_back({i, -1}); break;
      case Relation::eq:
        cols.push_back({i, 1});
        cols.push_back({i, -1});
        break;
    }
  }

  LpModel dual;
  dual.sense = Sense::minimize;
  for (const auto& dc : cols) dual.objective.push_back(dc.s * model.rows[dc.row].rhs);
  for (std::size_t j = 0; j < n; ++j) {
    Constraint row;
    row.rel = Relation::ge;
    row.rhs = dir * model.objective[j];
    for (const auto& dc : cols) row.coeffs.push_back(dc.s * model.rows[dc.row].coeffs[j]);
    dual.rows.push_back(std::move(row));
  }

  const LpSolution inner = solve_direct(dual);
  LpSolution sol;
  sol.pivots = inner.pivots;
  sol.transposed = true;
  switch (inner.status) {
    case Status::optimal: break;
    case Status::infeasible: sol.status = Status::unbounded; return sol;  // primal feasibility is checked below
    case Status::unbounded: sol.status = Status::infeasible; return sol;
  }
  sol.status = Status::optimal;
  sol.primal = inner.dual;
  sol.dual.assign(m, Rational(0));
  for (std::size_t k = 0; k < cols.size(); ++k) sol.dual[cols[k].row] += cols[k].s * inner.primal[k];
  for (auto& y : sol.dual) y *= dir;
  sol.value = 0;
  for (std::size_t j = 0; j < n; ++j) sol.value += model.objective[j] * sol.primal[j];
  return sol;
}

}  // namespace detail

/// Exact optimum by two-phase simplex with Bland's rule. Tall models with zero
/// lower bounds are solved through their dual to keep the tableau narrow.
inline LpSolution solve(const LpModel& model, const SolveOptions& opts = {}) {
  model.validate();
  const bool tall = model.rows.size() > opts.transpose_ratio * model.num_vars();
  if (opts.allow_transpose && tall && model.zero_lower_bounds()) {
    LpSolution sol = detail::solve_transposed(model);
    // An infeasible dual leaves primal infeasible or unbounded; settle it directly.
    if (sol.status != Status::optimal) return detail::solve_direct(model);
    return sol;
  }
  return detail::solve_direct(model);
}

/// Independent re-verification of an optimal solution: primal feasibility,
/// dual feasibility with the sign convention of LpSolution, and equality of
/// the primal and dual objective values.
inline bool check_certificate(const LpModel& model, const LpSolution& sol) {
  if (sol.status != Status::optimal) return false;
  const std::size_t n = model.num_vars(), m = model.rows.size();
  if (sol.primal.size() != n || sol.dual.size() != m) return false;

  Rational primal_value = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sol.primal[j] < model.lower_bound(j)) return false;
    primal_value += model.objective[j] * sol.primal[j];
  }
  if (primal_value != sol.value) return false;
  for (const auto& row : model.rows) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < n; ++j) lhs += row.coeffs[j] * sol.primal[j];
    if ((row.rel == Relation::le && lhs > row.rhs) || (row.rel == Relation::ge && lhs < row.rhs) ||
        (row.rel == Relation::eq && lhs != row.rhs))
      return false;
  }

  const bool max = model.sense == Sense::maximize;
  Rational dual_value = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const int s = sol.dual[i].sign();
    const Relation rel = model.rows[i].rel;
    if (rel == Relation::le && s != 0 && s != (max ? 1 : -1)) return false;
    if (rel == Relation::ge && s != 0 && s != (max ? -1 : 1)) return false;
    dual_value += model.rows[i].rhs * sol.dual[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational reduced = model.objective[j];
    for (std::size_t i = 0; i < m; ++i) reduced -= model.rows[i].coeffs[j] * sol.dual[i];
    if (max ? reduced > 0 : reduced < 0) return false;
    dual_value += reduced * model.lower_bound(j);
  }
  return dual_value == sol.value;
}

}  // namespace ntil::lp
