#pragma once

#include "ntil/certificate/verify.hpp"
#include "ntil/relaxation.hpp"
#include "ntil/search.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ntil::cli {

enum class Command { search, lp, reduced, diagnose, certify, audit, export_tables };

/// Largest n searched without an explicit time budget.
inline constexpr int kUnbudgetedMaxN = 12;

struct RunConfig {
  Command command = Command::search;
  int n = 0;
  int eps = 0;
  int m = 0;
  int max_n = 0;
  relax::CaseKind case_kind = relax::CaseKind::oddFat;
  std::optional<relax::IndexRange> a_window, b_window;
  std::optional<double> budget_seconds;
  bool symmetry_breaking = false;
  std::string witness_out;
  std::string profiles_out;
  std::filesystem::path out_dir = "out";
  int precision = 15;
  int threads = 1;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Windows used for the curvature rows with published data.
inline std::optional<std::pair<relax::IndexRange, relax::IndexRange>> default_windows(int m) {
  switch (m) {
    case 40: return std::pair{relax::IndexRange{30, 38}, relax::IndexRange{15, 22}};
    case 80: return std::pair{relax::IndexRange{60, 78}, relax::IndexRange{30, 44}};
    case 120: return std::pair{relax::IndexRange{90, 118}, relax::IndexRange{45, 66}};
    case 160: return std::pair{relax::IndexRange{120, 158}, relax::IndexRange{60, 88}};
    default: return std::nullopt;
  }
}

/// Checks parameter ranges for the selected command; throws UsageError.
inline void validate(const RunConfig& c) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw UsageError(what);
  };
  require(c.precision >= 0 && c.precision <= 200, "--precision must be in [0, 200]");
  require(c.threads >= 1, "--threads must be at least 1");
  require(!c.budget_seconds || *c.budget_seconds > 0, "--budget must be positive");
  switch (c.command) {
    case Command::search:
    case Command::lp:
      require(c.n >= 2 && c.n <= 16, "--n must be in [2, 16]");
      require(c.eps == 0 || c.eps == 1, "--eps must be 0 or 1");
      if (c.command == Command::search)
        require(c.n <= kUnbudgetedMaxN || c.budget_seconds.has_value(), "--budget is required for n > 12");
      break;
    case Command::reduced:
      require(c.m >= 1, "--m must be positive");
      break;
    case Command::diagnose:
      require(c.m >= 2, "--m must be at least 2");
      require(c.case_kind == relax::CaseKind::oddFat, "diagnose supports --case fat only");
      require((c.a_window && c.b_window) || default_windows(c.m).has_value(),
              "--a-window and --b-window are required for this m");
      break;
    case Command::export_tables:
      require(c.max_n >= 2 && c.max_n <= 16, "--max-n must be in [2, 16]");
      require(c.max_n <= kUnbudgetedMaxN || c.budget_seconds.has_value(), "--budget is required for max-n > 12");
      break;
    case Command::certify:
    case Command::audit:
      break;
  }
}

/// Parses argv into a validated RunConfig. Returns nullopt after printing
/// help; throws UsageError on bad input.
inline std::optional<RunConfig> parse(int argc, const char* const* argv, std::ostream& out) {
  RunConfig c;
  CLI::App app{"Checkerboard no-three-in-line search, LP relaxations and the continuum certificate", "ntil"};
  app.require_subcommand(1);
  std::string out_dir = c.out_dir.string();
  app.add_option("--out", out_dir, "Output directory")->capture_default_str();
  app.add_option("--precision", c.precision, "Decimal digits in printed values")->capture_default_str();
  app.add_option("--threads", c.threads, "Worker threads")->capture_default_str();

  std::string case_name = "fat", a_window, b_window;
  double budget = 0;

  auto* search = app.add_subcommand("search", "Exact maximum NTIL subset of one colour class");
  search->add_option("--n", c.n)->required();
  search->add_option("--eps", c.eps)->required();
  auto* search_budget = search->add_option("--budget", budget, "Time budget in seconds");
  search->add_option("--witness-out", c.witness_out, "Witness TSV file");
  search->add_flag("--symmetry-breaking", c.symmetry_breaking);

  auto* lp = app.add_subcommand("lp", "Four-direction LP relaxation");
  lp->add_option("--n", c.n)->required();
  lp->add_option("--eps", c.eps)->required();

  auto* reduced = app.add_subcommand("reduced", "Symmetry-reduced dual program");
  reduced->add_option("--case", case_name)->required();
  reduced->add_option("--m", c.m)->required();
  reduced->add_option("--profiles-out", c.profiles_out, "Profile TSV file");

  auto* diagnose = app.add_subcommand("diagnose", "Second-difference curvature of the fat profiles");
  diagnose->add_option("--case", case_name)->capture_default_str();
  diagnose->add_option("--m", c.m)->required();
  diagnose->add_option("--a-window", a_window, "LO..HI");
  diagnose->add_option("--b-window", b_window, "LO..HI");

  auto* certify = app.add_subcommand("certify", "Verify the continuum certificate and write the package");
  auto* audit = app.add_subcommand("audit", "Derivation audit of the certificate constants");

  auto* tables = app.add_subcommand("export-tables", "LP versus exact search table");
  tables->add_option("--max-n", c.max_n)->required();
  auto* tables_budget = tables->add_option("--budget", budget, "Per-search time budget in seconds");

  for (auto* sub : {search, lp, reduced, diagnose, certify, audit, tables}) {
    sub->add_option("--out", out_dir, "Output directory");
    sub->add_option("--precision", c.precision, "Decimal digits in printed values");
    sub->add_option("--threads", c.threads, "Worker threads");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  c.out_dir = out_dir;
  if (*search) c.command = Command::search;
  if (*lp) c.command = Command::lp;
  if (*reduced) c.command = Command::reduced;
  if (*diagnose) c.command = Command::diagnose;
  if (*certify) c.command = Command::certify;
  if (*audit) c.command = Command::audit;
  if (*tables) c.command = Command::export_tables;
  if (search_budget->count() > 0 || tables_budget->count() > 0) c.budget_seconds = budget;
  try {
    c.case_kind = relax::parse_case(case_name);
    if (!a_window.empty()) c.a_window = relax::parse_range(a_window);
    if (!b_window.empty()) c.b_window = relax::parse_range(b_window);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  validate(c);
  return c;
}

namespace detail {

inline std::filesystem::path output_path(const RunConfig& c, const std::string& file) {
  const std::filesystem::path p(file);
  return p.is_absolute() ? p : c.out_dir / p;
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << text;
}

inline SearchOptions search_options(const RunConfig& c) {
  SearchOptions o;
  if (c.budget_seconds) o.budget = std::chrono::duration<double>(*c.budget_seconds);
  o.symmetry_breaking = c.symmetry_breaking;
  o.threads = c.threads;
  return o;
}

}  // namespace detail

struct TableRow {
  int n = 0;
  std::array<Rational, 2> lp;
  std::array<NtilWitness, 2> search;
};

/// LP optimum and exact (or budget-truncated) search value for both colour
/// classes, 2 <= n <= max_n.
inline std::vector<TableRow> table_rows(int max_n, const SearchOptions& opts) {
  std::vector<TableRow> rows;
  for (int n = 2; n <= max_n; ++n) {
    TableRow row;
    row.n = n;
    for (int eps : {0, 1}) {
      row.lp[static_cast<std::size_t>(eps)] = lp::solve(relax::build_four_direction(n, eps)).value;
      row.search[static_cast<std::size_t>(eps)] = max_ntil(n, eps, opts);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// n, L(n,0) exact and to 3 places, D(n,0), then the same for eps = 1.
/// Truncated search values carry a ">=" prefix.
inline std::string table_tsv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "n\tL0\tL0_decimal\tD0\tL1\tL1_decimal\tD1\n";
  for (const auto& r : rows) {
    os << r.n;
    for (std::size_t e = 0; e < 2; ++e)
      os << '\t' << to_string(r.lp[e]) << '\t' << to_decimal(r.lp[e], 3) << '\t' << (r.search[e].exact ? "" : ">=")
         << r.search[e].size;
    os << '\n';
  }
  return os.str();
}

/// Runs one command. Exit status: 0 success, 1 verification failure,
/// 2 usage error.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    validate(c);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  try {
    switch (c.command) {
      case Command::search: {
        SearchStats stats;
        const auto w = max_ntil(c.n, c.eps, detail::search_options(c), &stats);
        out << w.size << (w.exact ? "" : " (lower bound, budget exhausted)") << '\n';
        out << points_to_tsv(w.points);
        if (!c.witness_out.empty()) detail::write_file(detail::output_path(c, c.witness_out), points_to_tsv(w.points));
        if (!verify_ntil(w)) {
          err << "error: witness failed the collinearity check\n";
          return 1;
        }
        return 0;
      }
      case Command::lp: {
        const auto model = relax::build_four_direction(c.n, c.eps);
        const auto sol = lp::solve(model);
        if (sol.status != lp::Status::optimal || !lp::check_certificate(model, sol)) {
          err << "error: LP did not certify an optimum\n";
          return 1;
        }
        out << to_string(sol.value) << '\n' << to_decimal(sol.value, 3) << '\n';
        return 0;
      }
      case Command::reduced: {
        const relax::ReducedDualCase rc{c.case_kind, c.m};
        const auto model = relax::build_reduced(rc);
        const auto sol = lp::solve(model);
        if (sol.status != lp::Status::optimal || !lp::check_certificate(model, sol)) {
          err << "error: reduced LP did not certify an optimum\n";
          return 1;
        }
        const auto prof = relax::to_profiles(rc, sol);
        const Rational ratio = prof.value / rc.side();
        out << "case " << relax::case_name(c.case_kind) << " m " << c.m << " side " << rc.side() << '\n';
        out << "value " << to_string(prof.value) << '\n';
        out << "ratio " << to_decimal(ratio, c.precision) << '\n';
        if (!c.profiles_out.empty())
          detail::write_file(detail::output_path(c, c.profiles_out), relax::profiles_to_tsv(prof, c.precision));
        return 0;
      }
      case Command::diagnose: {
        const auto windows = c.a_window && c.b_window ? std::pair{*c.a_window, *c.b_window} : *default_windows(c.m);
        const relax::ReducedDualCase rc{relax::CaseKind::oddFat, c.m};
        const auto prof = relax::solve_reduced(rc);
        const auto rep = relax::curvature_diagnostic(prof, windows.first, windows.second);
        out << "a window " << windows.first.lo << ".." << windows.first.hi << "  m^2 avg d2a "
            << to_decimal(rep.a_scaled, 10) << '\n';
        out << "b window " << windows.second.lo << ".." << windows.second.hi << "  m^2 avg d2b "
            << to_decimal(rep.b_scaled, 10) << '\n';
        out << "ratio " << (rep.ratio ? to_decimal(*rep.ratio, 10) : std::string("undefined")) << '\n';
        return 0;
      }
      case Command::certify: {
        const auto rep = cert::verify_all({.threads = c.threads});
        cert::write_package(rep, c.out_dir, c.precision);
        out << cert::report_text(rep, c.precision);
        return rep.verdict ? 0 : 1;
      }
      case Command::audit: {
        const auto items = cert::derivation_audit(cert::compute_constants());
        for (const auto& it : items)
          out << (it.informational ? "info" : it.holds ? "ok  " : "FAIL") << '\t' << it.name
              << (it.note.empty() ? "" : "\t" + it.note) << '\n';
        const bool ok = cert::audit_passes(items);
        out << "audit " << (ok ? "passed" : "failed") << '\n';
        return ok ? 0 : 1;
      }
      case Command::export_tables: {
        const std::string tsv = table_tsv(table_rows(c.max_n, detail::search_options(c)));
        detail::write_file(c.out_dir / "table1.tsv", tsv);
        out << tsv;
        return 0;
      }
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

/// parse + run with usage errors mapped to exit status 2.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> c;
  try {
    c = parse(argc, argv, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return 2;
  }
  return c ? run(*c, out, err) : 0;
}

}  // namespace ntil::cli
