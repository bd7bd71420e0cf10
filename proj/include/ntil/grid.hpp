#pragma once

#include <array>
#include <compare>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ntil {

/// A lattice point of G_n = {0..n-1}^2. Ordered row-major (y, then x).
struct GridPoint {
  int x = 0;
  int y = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend std::strong_ordering operator<=>(const GridPoint& a, const GridPoint& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

inline std::ostream& operator<<(std::ostream& os, const GridPoint& p) { return os << '(' << p.x << ',' << p.y << ')'; }

/// Checkerboard class C_eps = {(x, y) : x + y = eps mod 2}. eps = 0 holds the
/// corner (0, 0), so for odd n it is the fat class.
struct ParityClass {
  int n = 0;
  int eps = 0;

  ParityClass(int n_, int eps_) : n(n_), eps(eps_) {
    if (n_ < 1) throw std::invalid_argument("ParityClass: n must be positive");
    if (eps_ != 0 && eps_ != 1) throw std::invalid_argument("ParityClass: eps must be 0 or 1");
  }

  bool contains(const GridPoint& p) const {
    return p.x >= 0 && p.y >= 0 && p.x < n && p.y < n && (p.x + p.y) % 2 == eps;
  }
  int size() const { return eps == 0 ? (n * n + 1) / 2 : n * n / 2; }
  bool is_fat() const { return n % 2 == 1 && eps == 0; }
};

/// All points of the class in row-major order.
inline std::vector<GridPoint> class_points(const ParityClass& pc) {
  std::vector<GridPoint> out;
  out.reserve(static_cast<std::size_t>(pc.size()));
  for (int y = 0; y < pc.n; ++y)
    for (int x = 0; x < pc.n; ++x)
      if ((x + y) % 2 == pc.eps) out.push_back({x, y});
  return out;
}

/// True iff (b - a) x (c - a) = 0. The points must be pairwise distinct.
inline bool collinear(const GridPoint& a, const GridPoint& b, const GridPoint& c) {
  if (a == b || a == c || b == c) throw std::invalid_argument("collinear: points must be distinct");
  const long cross = static_cast<long>(b.x - a.x) * (c.y - a.y) - static_cast<long>(b.y - a.y) * (c.x - a.x);
  return cross == 0;
}

enum class LineFamily { row, column, diag_plus, diag_minus };

inline constexpr std::array<LineFamily, 4> kLineFamilies{LineFamily::row, LineFamily::column,
                                                        LineFamily::diag_plus, LineFamily::diag_minus};

inline const char* family_name(LineFamily f) {
  switch (f) {
    case LineFamily::row: return "row";
    case LineFamily::column: return "column";
    case LineFamily::diag_plus: return "diag_plus";
    case LineFamily::diag_minus: return "diag_minus";
  }
  return "?";
}

/// Row H_y (offset y), column V_x (offset x), D+_c (x - y = c) or D-_c (x + y = c).
struct LineId {
  LineFamily family = LineFamily::row;
  int offset = 0;
  friend bool operator==(const LineId&, const LineId&) = default;
};

inline int min_offset(LineFamily f, int n) { return f == LineFamily::diag_plus ? -(n - 1) : 0; }
inline int max_offset(LineFamily f, int n) {
  switch (f) {
    case LineFamily::row:
    case LineFamily::column: return n - 1;
    case LineFamily::diag_plus: return n - 1;
    case LineFamily::diag_minus: return 2 * n - 2;
  }
  return 0;
}
inline bool valid_line(const LineId& l, int n) {
  return l.offset >= min_offset(l.family, n) && l.offset <= max_offset(l.family, n);
}

/// The offset of the line of `family` through p.
inline int line_offset(LineFamily family, const GridPoint& p) {
  switch (family) {
    case LineFamily::row: return p.y;
    case LineFamily::column: return p.x;
    case LineFamily::diag_plus: return p.x - p.y;
    case LineFamily::diag_minus: return p.x + p.y;
  }
  return 0;
}

inline std::vector<LineId> family_lines(LineFamily f, int n) {
  std::vector<LineId> out;
  for (int c = min_offset(f, n); c <= max_offset(f, n); ++c) out.push_back({f, c});
  return out;
}

inline bool on_line(const LineId& l, const GridPoint& p) { return line_offset(l.family, p) == l.offset; }

/// Grid points on a line, row-major.
inline std::vector<GridPoint> line_points(const LineId& l, int n) {
  std::vector<GridPoint> out;
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if (on_line(l, {x, y})) out.push_back({x, y});
  return out;
}

/// Whether every grid point of the line lies in one parity class. Diagonals
/// always do; a row or column alternates colours once it has two points.
inline bool line_monochromatic(const LineId& l, int n) {
  if (!valid_line(l, n)) throw std::invalid_argument("line_monochromatic: line outside the grid");
  if (l.family == LineFamily::diag_plus || l.family == LineFamily::diag_minus) return true;
  return n == 1;
}

/// Diagonal-capacity accounting for one diagonal family inside C_eps: each
/// diagonal contributes min(|D cap C_eps|, 2).
struct CapacityAccounting {
  int diagonals_met = 0;
  int singleton_diagonals = 0;
  int total = 0;
};

inline CapacityAccounting diagonal_capacity(const ParityClass& pc, LineFamily family) {
  if (family != LineFamily::diag_plus && family != LineFamily::diag_minus)
    throw std::invalid_argument("diagonal_capacity: not a diagonal family");
  CapacityAccounting acc;
  for (const auto& l : family_lines(family, pc.n)) {
    int k = 0;
    for (const auto& p : line_points(l, pc.n)) k += pc.contains(p) ? 1 : 0;
    if (k == 0) continue;
    ++acc.diagonals_met;
    if (k == 1) ++acc.singleton_diagonals;
    acc.total += std::min(k, 2);
  }
  return acc;
}

/// Elementary upper bound 2n - 2 on any NTIL subset of one parity class.
inline int capacity_bound(int n) {
  if (n < 2) throw std::invalid_argument("capacity_bound: n must be at least 2");
  return 2 * n - 2;
}

/// The eight symmetries of the square acting on G_n.
inline GridPoint apply_symmetry(int g, const GridPoint& p, int n) {
  const int m = n - 1;
  switch (g) {
    case 0: return {p.x, p.y};
    case 1: return {m - p.y, p.x};
    case 2: return {m - p.x, m - p.y};
    case 3: return {p.y, m - p.x};
    case 4: return {m - p.x, p.y};
    case 5: return {p.x, m - p.y};
    case 6: return {p.y, p.x};
    case 7: return {m - p.y, m - p.x};
    default: throw std::out_of_range("apply_symmetry: index must be in [0, 8)");
  }
}

/// Indices of the symmetries mapping C_eps onto itself: all eight for odd n,
/// the four that fix the diagonal directions' colour for even n.
inline std::vector<int> color_preserving_symmetries(const ParityClass& pc) {
  std::vector<int> out;
  for (int g = 0; g < 8; ++g) {
    const GridPoint img = apply_symmetry(g, {0, 0}, pc.n);
    if ((img.x + img.y) % 2 == 0) out.push_back(g);
  }
  return out;
}

/// TSV rows "x<TAB>y".
inline std::string points_to_tsv(const std::vector<GridPoint>& pts) {
  std::ostringstream os;
  for (const auto& p : pts) os << p.x << '\t' << p.y << '\n';
  return os.str();
}

inline std::vector<GridPoint> points_from_tsv(const std::string& text) {
  std::vector<GridPoint> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    GridPoint p;
    if (!(ls >> p.x >> p.y)) throw std::invalid_argument("points_from_tsv: malformed row '" + line + "'");
    out.push_back(p);
  }
  return out;
}

}  // namespace ntil
