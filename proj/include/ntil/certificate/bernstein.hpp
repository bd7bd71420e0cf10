#pragma once

#include "ntil/certificate/functions.hpp"
#include "ntil/certificate/tiling.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace ntil::cert {

/// Quadratic in (u, v) over Q(p): k[0] + k[1] u + k[2] v + k[3] u^2 + k[4] uv + k[5] v^2.
struct BivQuad {
  std::array<FieldElem, 6> k;

  FieldElem operator()(const Point& x) const {
    return k[0] + k[1] * x.u + k[2] * x.v + k[3] * x.u * x.u + k[4] * x.u * x.v + k[5] * x.v * x.v;
  }
  BivQuad& operator+=(const BivQuad& o) {
    for (std::size_t i = 0; i < 6; ++i) k[i] += o.k[i];
    return *this;
  }
};

/// The affine argument alpha + beta u + gamma v.
struct Affine {
  Rational alpha, beta, gamma;
};

/// Arguments of G(u, v) = A((u+v)/2) + A((2-u+v)/2) + B(u) + B(v) - 1.
inline const std::array<Affine, 4>& slack_arguments() {
  static const std::array<Affine, 4> args{Affine{0, Rational(1, 2), Rational(1, 2)},
                                          Affine{1, Rational(-1, 2), Rational(1, 2)}, Affine{0, 1, 0},
                                          Affine{0, 0, 1}};
  return args;
}

inline FieldElem apply(const Affine& a, const Point& x) { return a.alpha + a.beta * x.u + a.gamma * x.v; }

/// q(alpha + beta u + gamma v) expanded in (u, v).
inline BivQuad compose(const FQuad& q, const Affine& a) {
  const Rational &al = a.alpha, &be = a.beta, &ga = a.gamma;
  return {{q.c0 + q.c1 * al + q.c2 * (al * al), q.c1 * be + q.c2 * (2 * al * be), q.c1 * ga + q.c2 * (2 * al * ga),
           q.c2 * (be * be), q.c2 * (2 * be * ga), q.c2 * (ga * ga)}};
}

inline const PiecewiseFunc& slack_function(const CertificateFunctions& fn, std::size_t arg) {
  return arg < 2 ? fn.A : fn.B;
}

/// Direct piecewise evaluation of G at a point of the domain.
inline FieldElem slack_direct(const CertificateFunctions& fn, const Point& x) {
  FieldElem g = fn.A.breakpoints.front().field()->element(-1);
  for (std::size_t i = 0; i < 4; ++i) g += slack_function(fn, i)(apply(slack_arguments()[i], x));
  return g;
}

inline Point centroid(const Polygon& poly) {
  Point c{poly.front().u.field()->element(0), poly.front().u.field()->element(0)};
  for (const auto& x : poly) {
    c.u += x.u;
    c.v += x.v;
  }
  const Rational inv(1, static_cast<long>(poly.size()));
  return {c.u * inv, c.v * inv};
}

/// Assigns each argument's active piece from the cell centroid and checks
/// that every vertex stays inside that piece's closed interval.
inline std::array<int, 4> active_pieces(const Polygon& poly, const CertificateFunctions& fn) {
  const Point ctr = centroid(poly);
  std::array<int, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& func = slack_function(fn, i);
    const int piece = func.open_piece(apply(slack_arguments()[i], ctr));
    if (piece < 0) throw std::runtime_error("active_pieces: centroid argument on a breakpoint");
    for (const auto& x : poly)
      if (!func.in_piece(static_cast<std::size_t>(piece), apply(slack_arguments()[i], x)))
        throw std::runtime_error("active_pieces: cell straddles a breakpoint of " + func.name);
    out[i] = piece;
  }
  return out;
}

/// The subdivision: split_all followed by piece assignment. Cells are
/// numbered in the order produced.
inline std::vector<Cell> subdivide(const CertificateConstants& k, const CertificateFunctions& fn) {
  std::vector<Cell> cells;
  for (auto& poly : split_all(k)) {
    Cell cell;
    cell.id = static_cast<int>(cells.size());
    cell.pieces = active_pieces(poly, fn);
    cell.vertices = std::move(poly);
    cells.push_back(std::move(cell));
  }
  return cells;
}

/// The single quadratic representing G on the cell, constant -1 included.
inline BivQuad slack_on_cell(const Cell& cell, const CertificateFunctions& fn) {
  const FieldPtr field = fn.A.breakpoints.front().field();
  if (active_pieces(cell.vertices, fn) != cell.pieces)
    throw std::runtime_error("slack_on_cell: inconsistent active pieces on cell " + std::to_string(cell.id));
  BivQuad g{{field->element(-1), field->element(0), field->element(0), field->element(0), field->element(0),
             field->element(0)}};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& func = slack_function(fn, i);
    g += compose(func.pieces[static_cast<std::size_t>(cell.pieces[i])], slack_arguments()[i]);
  }
  return g;
}

inline const std::array<const char*, 6>& bernstein_labels() {
  static const std::array<const char*, 6> labels{"200", "020", "002", "110", "101", "011"};
  return labels;
}

struct BernsteinRecord {
  int triangle = 0;
  std::array<FieldElem, 6> coeffs;  // b200, b020, b002, b110, b101, b011
  std::array<Sign, 6> signs{};
};

/// Degree-2 Bernstein coefficients of G on a triangle from its vertex and
/// edge-midpoint values.
inline BernsteinRecord bernstein(const Triangle& tri, const BivQuad& g) {
  const Rational half(1, 2);
  const FieldElem g0 = g(tri.v[0]), g1 = g(tri.v[1]), g2 = g(tri.v[2]);
  BernsteinRecord rec;
  rec.triangle = tri.id;
  rec.coeffs = {g0,
                g1,
                g2,
                Rational(2) * g(midpoint(tri.v[0], tri.v[1])) - (g0 + g1) * half,
                Rational(2) * g(midpoint(tri.v[0], tri.v[2])) - (g0 + g2) * half,
                Rational(2) * g(midpoint(tri.v[1], tri.v[2])) - (g1 + g2) * half};
  for (std::size_t i = 0; i < 6; ++i) rec.signs[i] = field_sign(rec.coeffs[i]);
  return rec;
}

}  // namespace ntil::cert
