#pragma once

#include "ntil/grid.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace ntil {

/// A no-three-in-line subset of C_eps. `exact` is false when a time budget
/// cut the search short, in which case `size` is only a lower bound.
struct NtilWitness {
  int n = 0;
  int eps = 0;
  std::vector<GridPoint> points;
  int size = 0;
  bool exact = true;
};

struct SearchOptions {
  std::optional<std::chrono::duration<double>> budget;
  /// Restrict to sets whose first point is minimal over its orbit under the
  /// colour-preserving symmetries.
  bool symmetry_breaking = false;
  int threads = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0;
};

/// Direct O(|S|^3) check of class membership and of every triple, over all slopes.
inline bool verify_ntil(const NtilWitness& w) {
  if (w.size != static_cast<int>(w.points.size())) return false;
  if (w.n < 1 || (w.eps != 0 && w.eps != 1)) return w.points.empty();
  const ParityClass pc(w.n, w.eps);
  for (const auto& p : w.points)
    if (!pc.contains(p)) return false;
  const std::size_t k = w.points.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (w.points[i] == w.points[j]) return false;
      for (std::size_t l = j + 1; l < k; ++l)
        if (collinear(w.points[i], w.points[j], w.points[l])) return false;
    }
  return true;
}

namespace detail {

/// 256-bit set over grid indices y * n + x (n <= 16).
struct Mask {
  std::array<std::uint64_t, 4> w{};

  void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1U; }
  int count() const {
    return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) + std::popcount(w[3]);
  }
  bool any() const { return (w[0] | w[1] | w[2] | w[3]) != 0; }
  Mask operator&(const Mask& o) const { return {{w[0] & o.w[0], w[1] & o.w[1], w[2] & o.w[2], w[3] & o.w[3]}}; }
  Mask operator|(const Mask& o) const { return {{w[0] | o.w[0], w[1] | o.w[1], w[2] | o.w[2], w[3] | o.w[3]}}; }
  Mask operator~() const { return {{~w[0], ~w[1], ~w[2], ~w[3]}}; }
  Mask& operator|=(const Mask& o) { return *this = *this | o; }

  template <class F>
  void for_each(F&& f) const {
    for (int k = 0; k < 4; ++k) {
      std::uint64_t bits = w[static_cast<std::size_t>(k)];
      while (bits) {
        f(k * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }
};

class NtilSearch {
 public:
  static constexpr int kMaxN = 16;

  NtilSearch(int n, int eps, const SearchOptions& opts) : pc_(n, eps), opts_(opts) {
    if (n < 2) throw std::invalid_argument("max_ntil: n must be at least 2");
    if (n > kMaxN) throw std::invalid_argument("max_ntil: n above 16 is not supported");
    n_ = n;
    for (const auto& p : class_points(pc_)) class_mask_.set(index(p));
    for (int y = 0; y < n; ++y) {
      Mask row;
      for (int x = 0; x < n; ++x)
        if (pc_.contains({x, y})) row.set(index({x, y}));
      rows_.push_back(row);
    }
    rows_from_.assign(static_cast<std::size_t>(n + 1), Mask{});
    for (int y = n - 1; y >= 0; --y) rows_from_[static_cast<std::size_t>(y)] = rows_from_[static_cast<std::size_t>(y + 1)] | rows_[static_cast<std::size_t>(y)];

    // Column and diagonal lines restricted to the class; rows are handled per row.
    for (int f = 1; f < 4; ++f) {
      const auto family = kLineFamilies[static_cast<std::size_t>(f)];
      for (const auto& l : family_lines(family, n)) {
        Mask m;
        for (const auto& p : line_points(l, n))
          if (pc_.contains(p)) m.set(index(p));
        if (!m.any()) continue;
        const int id = static_cast<int>(lines_.size());
        lines_.push_back(m);
        line_family_.push_back(f - 1);
        m.for_each([&](int i) { point_lines_[static_cast<std::size_t>(i)][static_cast<std::size_t>(f - 1)] = id; });
      }
    }

    // Every pair of class points determines a line; store its class points.
    const int cells = n * n;
    pair_line_.assign(static_cast<std::size_t>(cells * cells), Mask{});
    const auto pts = class_points(pc_);
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        Mask m;
        for (const auto& q : pts)
          if (q == pts[a] || q == pts[b] || collinear(pts[a], pts[b], q)) m.set(index(q));
        pair_line_[static_cast<std::size_t>(index(pts[a]) * cells + index(pts[b]))] = m;
        pair_line_[static_cast<std::size_t>(index(pts[b]) * cells + index(pts[a]))] = m;
      }

    if (opts_.symmetry_breaking) {
      const auto group = color_preserving_symmetries(pc_);
      orbit_min_.assign(static_cast<std::size_t>(cells), 0);
      for (const auto& p : pts) {
        int best = index(p);
        for (int g : group) best = std::min(best, index(apply_symmetry(g, p, n)));
        orbit_min_[static_cast<std::size_t>(index(p))] = best;
      }
    }
  }

  NtilWitness run(SearchStats* stats) {
    start_ = std::chrono::steady_clock::now();
    // Root tasks: every admissible choice of points on row 0.
    std::vector<std::vector<int>> tasks;
    const auto row0 = rows_[0];
    std::vector<int> r0;
    row0.for_each([&](int i) { r0.push_back(i); });
    for (std::size_t a = 0; a < r0.size(); ++a) {
      for (std::size_t b = a + 1; b < r0.size(); ++b) tasks.push_back({r0[a], r0[b]});
      tasks.push_back({r0[a]});
    }
    tasks.push_back({});

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      Worker w(*this);
      for (std::size_t t = next++; t < tasks.size() && !timed_out_.load(); t = next++) {
        bool ok = true;
        for (int i : tasks[t]) {
          if (!w.admissible(i)) {
            ok = false;
            break;
          }
          w.push(i);
        }
        if (ok) w.search_row(1);
        w.reset();
      }
      nodes_ += w.nodes;
    };
    const int threads = std::max(1, opts_.threads);
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }

    NtilWitness w;
    w.n = n_;
    w.eps = pc_.eps;
    for (int i : best_points_) w.points.push_back({i % n_, i / n_});
    std::sort(w.points.begin(), w.points.end());
    w.size = static_cast<int>(w.points.size());
    w.exact = !timed_out_.load();
    if (stats) {
      stats->nodes = nodes_.load();
      stats->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
    return w;
  }

 private:
  int index(const GridPoint& p) const { return p.y * n_ + p.x; }

  struct Worker {
    explicit Worker(NtilSearch& s) : s(s) {
      used.assign(s.lines_.size(), 0);
      allowed = s.class_mask_;
    }

    NtilSearch& s;
    std::vector<int> chosen;
    std::vector<Mask> blocked_stack;
    std::vector<Mask> allowed_stack;
    Mask blocked;
    Mask allowed;
    std::vector<int> used;
    std::uint64_t nodes = 0;

    bool admissible(int i) const {
      if (blocked.test(i) || !allowed.test(i)) return false;
      if (s.opts_.symmetry_breaking && chosen.empty() && s.orbit_min_[static_cast<std::size_t>(i)] != i) return false;
      return true;
    }

    void push(int i) {
      blocked_stack.push_back(blocked);
      allowed_stack.push_back(allowed);
      const int cells = s.n_ * s.n_;
      for (int j : chosen) blocked |= s.pair_line_[static_cast<std::size_t>(j * cells + i)];
      blocked.set(i);
      if (s.opts_.symmetry_breaking && chosen.empty()) {
        Mask keep;
        s.class_mask_.for_each([&](int q) {
          if (s.orbit_min_[static_cast<std::size_t>(q)] >= i) keep.set(q);
        });
        allowed = allowed & keep;
      }
      chosen.push_back(i);
      for (int id : s.point_lines_[static_cast<std::size_t>(i)]) ++used[static_cast<std::size_t>(id)];
    }

    void pop() {
      const int i = chosen.back();
      chosen.pop_back();
      for (int id : s.point_lines_[static_cast<std::size_t>(i)]) --used[static_cast<std::size_t>(id)];
      blocked = blocked_stack.back();
      blocked_stack.pop_back();
      allowed = allowed_stack.back();
      allowed_stack.pop_back();
    }

    void reset() {
      while (!chosen.empty()) pop();
    }

    /// Upper bound on the final size from the rows y.. onwards: the least,
    /// over the four line families, of summed residual line capacities.
    int bound(int y) const {
      const Mask avail = s.rows_from_[static_cast<std::size_t>(y)] & allowed & ~blocked;
      int rows = 0;
      for (int r = y; r < s.n_; ++r) rows += std::min(2, (avail & s.rows_[static_cast<std::size_t>(r)]).count());
      int best = rows;
      std::array<int, 3> fam{};
      for (std::size_t id = 0; id < s.lines_.size(); ++id) {
        const int room = 2 - used[id];
        if (room <= 0) continue;
        const int k = (avail & s.lines_[id]).count();
        fam[static_cast<std::size_t>(s.line_family_[id])] += std::min(room, k);
      }
      for (int v : fam) best = std::min(best, v);
      return static_cast<int>(chosen.size()) + best;
    }

    bool out_of_time() {
      if ((++nodes & 0xFFF) != 0 || !s.opts_.budget) return s.timed_out_.load(std::memory_order_relaxed);
      if (std::chrono::steady_clock::now() - s.start_ > *s.opts_.budget) s.timed_out_.store(true);
      return s.timed_out_.load();
    }

    void record() {
      const int size = static_cast<int>(chosen.size());
      if (size <= s.best_size_.load()) return;
      std::lock_guard lock(s.best_mu_);
      if (size <= s.best_size_.load()) return;
      s.best_points_ = chosen;
      s.best_size_.store(size);
    }

    void search_row(int y) {
      if (out_of_time()) return;
      record();
      if (y >= s.n_) return;
      const int best = s.best_size_.load(std::memory_order_relaxed);
      if (static_cast<int>(chosen.size()) + 2 * (s.n_ - y) <= best) return;
      if (bound(y) <= best) return;

      const Mask avail = s.rows_[static_cast<std::size_t>(y)] & allowed & ~blocked;
      std::vector<int> cand;
      avail.for_each([&](int i) { cand.push_back(i); });
      for (std::size_t a = 0; a < cand.size(); ++a) {
        if (!admissible(cand[a])) continue;
        push(cand[a]);
        for (std::size_t b = a + 1; b < cand.size(); ++b) {
          if (!admissible(cand[b])) continue;
          push(cand[b]);
          search_row(y + 1);
          pop();
        }
        search_row(y + 1);
        pop();
      }
      search_row(y + 1);
    }
  };

  int n_ = 0;
  ParityClass pc_;
  SearchOptions opts_;
  Mask class_mask_;
  std::vector<Mask> rows_;
  std::vector<Mask> rows_from_;
  std::vector<Mask> lines_;
  std::vector<int> line_family_;
  std::array<std::array<int, 3>, 256> point_lines_{};
  std::vector<Mask> pair_line_;
  std::vector<int> orbit_min_;

  std::chrono::steady_clock::time_point start_;
  std::atomic<bool> timed_out_{false};
  std::atomic<int> best_size_{0};
  std::atomic<std::uint64_t> nodes_{0};
  std::mutex best_mu_;
  std::vector<int> best_points_;
};

}  // namespace detail

/// Maximum NTIL subset of C_eps by depth-first branch-and-bound over rows.
/// With a budget, an interrupted search returns its incumbent marked inexact.
inline NtilWitness max_ntil(int n, int eps, const SearchOptions& opts = {}, SearchStats* stats = nullptr) {
  detail::NtilSearch search(n, eps, opts);
  return search.run(stats);
}

}  // namespace ntil
