#pragma once

#include "ntil/lp.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ntil::lp {

// Model TSV:
//   kind<TAB>rel<TAB>rhs<TAB>x0<TAB>x1 ...          (header, variable names)
//   objective<TAB>max|min<TAB>0<TAB>c0<TAB>c1 ...
//   lower<TAB>>=<TAB>0<TAB>l0<TAB>l1 ...            (optional)
//   row<TAB><=|>=|=<TAB>rhs<TAB>a0<TAB>a1 ...
// Solution TSV:
//   kind<TAB>index<TAB>value
//   status<TAB>-<TAB>optimal|infeasible|unbounded
//   value<TAB>-<TAB>q
//   primal<TAB>j<TAB>q   and   dual<TAB>i<TAB>q
// Every number is a rational "num/den" (or an integer).

namespace detail {

inline std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

inline const char* relation_text(Relation r) {
  return r == Relation::le ? "<=" : r == Relation::ge ? ">=" : "=";
}

inline Relation parse_relation(const std::string& s) {
  if (s == "<=") return Relation::le;
  if (s == ">=") return Relation::ge;
  if (s == "=") return Relation::eq;
  throw std::invalid_argument("unknown relation '" + s + "'");
}

}  // namespace detail

inline std::string model_to_tsv(const LpModel& model, const std::vector<std::string>& names = {}) {
  std::ostringstream os;
  os << "kind\trel\trhs";
  for (std::size_t j = 0; j < model.num_vars(); ++j)
    os << '\t' << (j < names.size() ? names[j] : "x" + std::to_string(j));
  os << "\nobjective\t" << (model.sense == Sense::maximize ? "max" : "min") << "\t0";
  for (const auto& c : model.objective) os << '\t' << ntil::to_string(c);
  os << '\n';
  if (!model.zero_lower_bounds()) {
    os << "lower\t>=\t0";
    for (const auto& l : model.lower) os << '\t' << ntil::to_string(l);
    os << '\n';
  }
  for (const auto& row : model.rows) {
    os << "row\t" << detail::relation_text(row.rel) << '\t' << ntil::to_string(row.rhs);
    for (const auto& a : row.coeffs) os << '\t' << ntil::to_string(a);
    os << '\n';
  }
  return os.str();
}

inline LpModel model_from_tsv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("model TSV: empty input");
  const auto header = detail::split_tabs(line);
  if (header.size() < 4 || header[0] != "kind") throw std::invalid_argument("model TSV: bad header");
  const std::size_t n = header.size() - 3;
  LpModel model;
  bool have_objective = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = detail::split_tabs(line);
    if (f.size() != n + 3) throw std::invalid_argument("model TSV: row width mismatch: '" + line + "'");
    std::vector<Rational> v;
    for (std::size_t j = 3; j < f.size(); ++j) v.push_back(parse_rational(f[j]));
    if (f[0] == "objective") {
      if (f[1] != "max" && f[1] != "min") throw std::invalid_argument("model TSV: sense must be max or min");
      model.sense = f[1] == "max" ? Sense::maximize : Sense::minimize;
      model.objective = std::move(v);
      have_objective = true;
    } else if (f[0] == "lower") {
      model.lower = std::move(v);
    } else if (f[0] == "row") {
      model.rows.push_back({std::move(v), detail::parse_relation(f[1]), parse_rational(f[2])});
    } else {
      throw std::invalid_argument("model TSV: unknown row kind '" + f[0] + "'");
    }
  }
  if (!have_objective) throw std::invalid_argument("model TSV: missing objective row");
  model.validate();
  return model;
}

inline std::string solution_to_tsv(const LpSolution& sol) {
  std::ostringstream os;
  os << "kind\tindex\tvalue\n";
  os << "status\t-\t" << to_string(sol.status) << '\n';
  if (sol.status != Status::optimal) return os.str();
  os << "value\t-\t" << ntil::to_string(sol.value) << '\n';
  for (std::size_t j = 0; j < sol.primal.size(); ++j) os << "primal\t" << j << '\t' << ntil::to_string(sol.primal[j]) << '\n';
  for (std::size_t i = 0; i < sol.dual.size(); ++i) os << "dual\t" << i << '\t' << ntil::to_string(sol.dual[i]) << '\n';
  return os.str();
}

inline LpSolution solution_from_tsv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  if (line != "kind\tindex\tvalue") throw std::invalid_argument("solution TSV: bad header");
  LpSolution sol;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = detail::split_tabs(line);
    if (f.size() != 3) throw std::invalid_argument("solution TSV: malformed row '" + line + "'");
    if (f[0] == "status") {
      if (f[2] == "optimal") sol.status = Status::optimal;
      else if (f[2] == "infeasible") sol.status = Status::infeasible;
      else if (f[2] == "unbounded") sol.status = Status::unbounded;
      else throw std::invalid_argument("solution TSV: unknown status");
    } else if (f[0] == "value") {
      sol.value = parse_rational(f[2]);
    } else if (f[0] == "primal" || f[0] == "dual") {
      auto& vec = f[0] == "primal" ? sol.primal : sol.dual;
      const std::size_t idx = std::stoul(f[1]);
      if (idx != vec.size()) throw std::invalid_argument("solution TSV: indices must be consecutive");
      vec.push_back(parse_rational(f[2]));
    } else {
      throw std::invalid_argument("solution TSV: unknown row kind '" + f[0] + "'");
    }
  }
  return sol;
}

}  // namespace ntil::lp
