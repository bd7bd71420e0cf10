#pragma once

#include "ntil/algebra/cubic_field.hpp"
#include "ntil/certificate/constants.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace ntil::cert {

/// A point in the (u, v) plane, u = x + y, v = x - y.
struct Point {
  FieldElem u, v;
  friend bool operator==(const Point&, const Point&) = default;
};

inline Point midpoint(const Point& a, const Point& b) {
  const Rational half(1, 2);
  return {(a.u + b.u) * half, (a.v + b.v) * half};
}

/// Twice the signed area of (a, b, c).
inline FieldElem cross(const Point& a, const Point& b, const Point& c) {
  return (b.u - a.u) * (c.v - a.v) - (b.v - a.v) * (c.u - a.u);
}

/// a u + b v = rhs.
struct CutLine {
  std::string name;
  Rational a, b;
  FieldElem rhs;

  FieldElem eval(const Point& x) const { return a * x.u + b * x.v - rhs; }
};

using Polygon = std::vector<Point>;

/// Signed shoelace area; positive for counterclockwise vertex order.
inline FieldElem polygon_area(const Polygon& poly) {
  FieldElem twice = poly.front().u.field()->element(0);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    twice += a.u * b.v - b.u * a.v;
  }
  return twice * Rational(1, 2);
}

/// The cut lines in splitting order: u = e, f, g; v = e, f, g;
/// u + v = 2p, 2c, 2d; u - v = 2(1 - d), 2(1 - c).
inline std::vector<CutLine> cut_lines(const CertificateConstants& k) {
  const Rational two(2);
  return {
      {"u=e", 1, 0, k.e},
      {"u=f", 1, 0, k.f},
      {"u=g", 1, 0, k.g},
      {"v=e", 0, 1, k.e},
      {"v=f", 0, 1, k.f},
      {"v=g", 0, 1, k.g},
      {"u+v=2p", 1, 1, two * k.p},
      {"u+v=2c", 1, 1, two * k.c},
      {"u+v=2d", 1, 1, two * k.d},
      {"u-v=2(1-d)", 1, -1, two * (Rational(1) - k.d)},
      {"u-v=2(1-c)", 1, -1, two * (Rational(1) - k.c)},
  };
}

/// The triangle 0 <= v <= u <= 1, counterclockwise.
inline Polygon domain_triangle(const FieldPtr& field) {
  return {{field->element(0), field->element(0)}, {field->element(1), field->element(0)},
          {field->element(1), field->element(1)}};
}

namespace detail {

inline void drop_repeats(Polygon& poly) {
  Polygon out;
  for (const auto& x : poly)
    if (out.empty() || !(out.back() == x)) out.push_back(x);
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  poly = std::move(out);
}

}  // namespace detail

/// Splits a convex polygon by a line into its closed nonnegative and
/// nonpositive parts. Degenerate parts (fewer than three vertices or zero
/// area) come back empty.
inline std::pair<Polygon, Polygon> split_polygon(const Polygon& poly, const CutLine& line) {
  std::vector<FieldElem> val;
  std::vector<Sign> sg;
  for (const auto& x : poly) {
    val.push_back(line.eval(x));
    sg.push_back(field_sign(val.back()));
  }
  Polygon pos, neg;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const std::size_t j = (i + 1) % poly.size();
    if (sg[i] != Sign::negative) pos.push_back(poly[i]);
    if (sg[i] != Sign::positive) neg.push_back(poly[i]);
    if (sg[i] * sg[j] == Sign::negative) {
      const FieldElem t = val[i] / (val[i] - val[j]);
      const Point x{poly[i].u + t * (poly[j].u - poly[i].u), poly[i].v + t * (poly[j].v - poly[i].v)};
      pos.push_back(x);
      neg.push_back(x);
    }
  }
  for (Polygon* part : {&pos, &neg}) {
    detail::drop_repeats(*part);
    if (part->size() < 3 || polygon_area(*part).is_zero()) part->clear();
  }
  return {pos, neg};
}

/// Successive exact half-plane splitting of the domain triangle by every cut
/// line, in cut_lines order.
inline std::vector<Polygon> split_all(const CertificateConstants& k) {
  std::vector<Polygon> cells{domain_triangle(k.p.field())};
  for (const auto& line : cut_lines(k)) {
    std::vector<Polygon> next;
    for (const auto& poly : cells) {
      auto [pos, neg] = split_polygon(poly, line);
      if (!neg.empty()) next.push_back(std::move(neg));
      if (!pos.empty()) next.push_back(std::move(pos));
    }
    cells = std::move(next);
  }
  return cells;
}

/// A cell of the subdivision with the piece index active for each argument
/// of G: A(x), A(1 - y), B(u), B(v).
struct Cell {
  int id = 0;
  Polygon vertices;
  std::array<int, 4> pieces{};
};

/// Lexicographically smallest vertex (u, then v).
inline std::size_t lex_min_vertex(const Polygon& poly) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < poly.size(); ++i) {
    const Sign du = field_sign(poly[i].u - poly[best].u);
    if (du == Sign::negative || (du == Sign::zero && poly[i].v < poly[best].v)) best = i;
  }
  return best;
}

/// Removes vertices lying on the segment between their neighbours.
inline Polygon merge_collinear(const Polygon& poly) {
  Polygon out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& prev = poly[(i + poly.size() - 1) % poly.size()];
    const Point& next = poly[(i + 1) % poly.size()];
    if (!cross(prev, poly[i], next).is_zero()) out.push_back(poly[i]);
  }
  return out;
}

struct Triangle {
  int id = 0;
  int cell = 0;
  std::array<Point, 3> v;
};

/// Fan triangulation of every cell from its lexicographically smallest
/// vertex; a k-gon gives k - 2 triangles.
inline std::vector<Triangle> triangulate(const std::vector<Cell>& cells) {
  std::vector<Triangle> out;
  for (const auto& cell : cells) {
    const Polygon& poly = cell.vertices;
    const std::size_t s = lex_min_vertex(poly), k = poly.size();
    for (std::size_t i = 1; i + 1 < k; ++i)
      out.push_back({static_cast<int>(out.size()), cell.id, {poly[s], poly[(s + i) % k], poly[(s + i + 1) % k]}});
  }
  return out;
}

/// Whether the interiors of two convex counterclockwise polygons are
/// disjoint: some edge of one has the other entirely on its closed outer side.
inline bool interiors_disjoint(const Polygon& a, const Polygon& b) {
  auto separates = [](const Polygon& p, const Polygon& q) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Point& s = p[i];
      const Point& t = p[(i + 1) % p.size()];
      bool all_out = true;
      for (const auto& x : q)
        if (field_sign(cross(s, t, x)) == Sign::positive) {
          all_out = false;
          break;
        }
      if (all_out) return true;
    }
    return false;
  };
  return separates(a, b) || separates(b, a);
}

/// Whether a polygon is convex and counterclockwise (collinear runs allowed).
inline bool convex_ccw(const Polygon& poly) {
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (field_sign(cross(poly[i], poly[(i + 1) % poly.size()], poly[(i + 2) % poly.size()])) == Sign::negative)
      return false;
  return field_sign(polygon_area(poly)) == Sign::positive;
}

}  // namespace ntil::cert
