#pragma once

#include "ntil/algebra/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace ntil {

/// Open interval (lo, hi) isolating exactly one root of some polynomial,
/// with no root at either endpoint.
struct RootInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

class EndpointRootError : public std::domain_error {
 public:
  explicit EndpointRootError(const std::string& what) : std::domain_error(what) {}
};

/// Sturm chain p0 = f, p1 = f', p_{k+1} = -rem(p_{k-1}, p_k). Each remainder
/// is divided by the absolute value of its leading coefficient; positive
/// scaling leaves every sign variation count unchanged.
inline std::vector<RatPoly> sturm_chain(const RatPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  std::vector<RatPoly> chain{f};
  RatPoly next = f.derivative();
  while (!next.is_zero()) {
    chain.push_back(next);
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    RatPoly rem = -divmod(a, b).second;
    if (!rem.is_zero()) rem = Rational(1) / abs(rem.leading()) * rem;
    next = std::move(rem);
  }
  return chain;
}

inline int sign_variations(const std::vector<RatPoly>& chain, const Rational& t) {
  int count = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = q(t).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

/// Number of distinct real roots of `poly` in the open interval (lo, hi).
inline int sturm_count(const RatPoly& poly, const Rational& lo, const Rational& hi) {
  if (poly.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("sturm_count: empty interval");
  if (poly(lo) == 0) throw EndpointRootError("sturm_count: lower endpoint " + to_string(lo) + " is a root");
  if (poly(hi) == 0) throw EndpointRootError("sturm_count: upper endpoint " + to_string(hi) + " is a root");
  const auto chain = sturm_chain(poly);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

/// Cauchy bound: every real root lies strictly inside (-B, B).
inline Rational root_bound(const RatPoly& poly) {
  Rational m = 0;
  for (int i = 0; i < poly.degree(); ++i) m = std::max(m, Rational(abs(poly.coeff(i) / poly.leading())));
  return m + 1;
}

/// Total number of distinct real roots.
inline int real_root_count(const RatPoly& poly) {
  const Rational b = root_bound(poly);
  return sturm_count(poly, -b, b);
}

/// Bisection refinement of a sign-changing isolating interval until its width
/// is at most `width`. Each step keeps the half across which `poly` changes sign.
inline RootInterval refine_root(const RatPoly& poly, RootInterval iv, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("refine_root: width must be positive");
  int s_lo = poly(iv.lo).sign();
  const int s_hi = poly(iv.hi).sign();
  if (s_lo == 0 || s_hi == 0 || s_lo == s_hi)
    throw std::invalid_argument("refine_root: polynomial does not change sign across the interval");
  while (iv.width() > width) {
    const Rational mid = iv.midpoint();
    const int s_mid = poly(mid).sign();
    if (s_mid == 0) {
      // Exact rational root: shrink symmetrically around it.
      Rational half = width / 4;
      while (poly(mid - half).sign() == 0 || poly(mid + half).sign() == 0 ||
             sturm_count(poly, mid - half, mid + half) != 1)
        half /= 2;
      return {mid - half, mid + half};
    }
    if (s_mid == s_lo) {
      iv.lo = mid;
      s_lo = s_mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

/// Disjoint isolating intervals for every distinct real root, in increasing order.
inline std::vector<RootInterval> isolate_real_roots(const RatPoly& poly) {
  const auto chain = sturm_chain(poly);
  std::vector<RootInterval> out;
  const Rational b = root_bound(poly);
  std::vector<RootInterval> stack{{-b, b}};
  auto count = [&](const RootInterval& iv) {
    return sign_variations(chain, iv.lo) - sign_variations(chain, iv.hi);
  };
  while (!stack.empty()) {
    RootInterval iv = stack.back();
    stack.pop_back();
    const int k = count(iv);
    if (k == 0) continue;
    if (k == 1) {
      out.push_back(iv);
      continue;
    }
    Rational mid = iv.midpoint();
    // Nudge the split point off any root.
    Rational nudge = iv.width() / 8;
    while (poly(mid) == 0) {
      mid += nudge;
      nudge /= 2;
    }
    stack.push_back({mid, iv.hi});
    stack.push_back({iv.lo, mid});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  return out;
}

}  // namespace ntil
