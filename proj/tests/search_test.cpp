#include "ntil/search.hpp"

#include <gtest/gtest.h>

#include <functional>

namespace ntil {
namespace {

const std::vector<GridPoint> kFiveByFive{{0, 1}, {0, 3}, {1, 0}, {1, 4}, {3, 0}, {3, 4}, {4, 1}, {4, 3}};

/// Naive oracle: include/exclude every class point in row-major order, at most
/// two per row, rejecting a point that is collinear with any chosen pair.
int naive_max(int n, int eps) {
  const auto pts = class_points({n, eps});
  std::vector<GridPoint> chosen;
  std::vector<int> per_row(static_cast<std::size_t>(n), 0);
  int best = 0;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (k == pts.size()) return;
    const GridPoint q = pts[k];
    bool ok = per_row[static_cast<std::size_t>(q.y)] < 2;
    for (std::size_t i = 0; ok && i < chosen.size(); ++i)
      for (std::size_t j = i + 1; ok && j < chosen.size(); ++j)
        if (collinear(chosen[i], chosen[j], q)) ok = false;
    if (ok) {
      chosen.push_back(q);
      ++per_row[static_cast<std::size_t>(q.y)];
      go(k + 1);
      --per_row[static_cast<std::size_t>(q.y)];
      chosen.pop_back();
    }
    go(k + 1);
  };
  go(0);
  return best;
}

TEST(VerifyNtilTest, Examples) {
  EXPECT_TRUE(verify_ntil({5, 1, kFiveByFive, 8}));
  EXPECT_FALSE(verify_ntil({3, 0, {{0, 0}, {1, 1}, {2, 2}}, 3}));
  EXPECT_TRUE(verify_ntil({3, 0, {}, 0}));
  EXPECT_FALSE(verify_ntil({5, 0, kFiveByFive, 8}));      // wrong class
  EXPECT_FALSE(verify_ntil({5, 1, kFiveByFive, 7}));      // size mismatch
  EXPECT_FALSE(verify_ntil({5, 0, {{0, 0}, {1, 2}, {2, 4}}, 3}));  // slope 2
}

TEST(MaxNtilTest, TableValuesSmall) {
  EXPECT_EQ(max_ntil(2, 0).size, 2);
  EXPECT_EQ(max_ntil(2, 1).size, 2);
  EXPECT_EQ(max_ntil(5, 1).size, 8);
  EXPECT_EQ(max_ntil(5, 0).size, 7);
  EXPECT_EQ(max_ntil(6, 0).size, 8);
  EXPECT_EQ(max_ntil(9, 0).size, 14);
  EXPECT_EQ(max_ntil(9, 1).size, 13);
}

TEST(MaxNtilTest, AgreesWithNaiveOracle) {
  for (int n = 2; n <= 7; ++n)
    for (int eps : {0, 1}) {
      const auto w = max_ntil(n, eps);
      EXPECT_TRUE(w.exact);
      EXPECT_TRUE(verify_ntil(w));
      EXPECT_EQ(w.size, naive_max(n, eps)) << "n=" << n << " eps=" << eps;
    }
}

TEST(MaxNtilTest, SymmetryBreakingAndThreadsGiveSameSize) {
  for (int n = 3; n <= 8; ++n)
    for (int eps : {0, 1}) {
      const int plain = max_ntil(n, eps).size;
      SearchOptions sym;
      sym.symmetry_breaking = true;
      const auto ws = max_ntil(n, eps, sym);
      EXPECT_EQ(ws.size, plain) << "n=" << n << " eps=" << eps;
      EXPECT_TRUE(verify_ntil(ws));
      SearchOptions par;
      par.threads = 3;
      EXPECT_EQ(max_ntil(n, eps, par).size, plain);
    }
}

TEST(MaxNtilTest, CapacityAndMonotonicity) {
  std::vector<std::array<int, 2>> d(10);
  for (int n = 2; n <= 9; ++n)
    for (int eps : {0, 1}) {
      const auto w = max_ntil(n, eps);
      EXPECT_LE(w.size, capacity_bound(n));
      if (n >= 6) EXPECT_LE(w.size, 2 * n - 4);
      d[static_cast<std::size_t>(n)][static_cast<std::size_t>(eps)] = w.size;
    }
  for (int n = 2; n + 2 <= 9; ++n)
    for (int eps : {0, 1})
      EXPECT_LE(d[static_cast<std::size_t>(n)][static_cast<std::size_t>(eps)],
                d[static_cast<std::size_t>(n + 2)][static_cast<std::size_t>(eps)]);
}

TEST(MaxNtilTest, BudgetYieldsLowerBound) {
  SearchOptions opts;
  opts.budget = std::chrono::milliseconds(1);
  const auto w = max_ntil(14, 0, opts);
  EXPECT_FALSE(w.exact);
  EXPECT_TRUE(verify_ntil(w));
  EXPECT_LE(w.size, 21);
}

TEST(MaxNtilTest, RejectsBadArguments) {
  EXPECT_THROW(max_ntil(1, 0), std::invalid_argument);
  EXPECT_THROW(max_ntil(17, 0), std::invalid_argument);
  EXPECT_THROW(max_ntil(4, 2), std::invalid_argument);
}

}  // namespace
}  // namespace ntil
