#include "ntil/lp.hpp"
#include "ntil/lp_io.hpp"
#include "support/lp_oracle.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <optional>
#include <random>

namespace ntil::lp {
namespace {

using testing::vertex_oracle;

Constraint row(std::vector<Rational> a, Relation rel, Rational b) { return {std::move(a), rel, std::move(b)}; }

TEST(SolveTest, SingleVariable) {
  LpModel m{Sense::maximize, {1}, {row({1}, Relation::le, 2)}, {}};
  const auto s = solve(m);
  ASSERT_EQ(s.status, Status::optimal);
  EXPECT_EQ(s.value, 2);
  EXPECT_TRUE(check_certificate(m, s));
}

TEST(SolveTest, TwoVariablesSharedRow) {
  LpModel m{Sense::maximize, {1, 1}, {row({1, 1}, Relation::le, 1)}, {}};
  const auto s = solve(m);
  ASSERT_EQ(s.status, Status::optimal);
  EXPECT_EQ(s.value, 1);
  EXPECT_EQ(s.dual, std::vector<Rational>{1});
  EXPECT_TRUE(check_certificate(m, s));
}

TEST(SolveTest, MinimizeWithGreaterEqualAndEquality) {
  // min 2x + 3y  s.t. x + y >= 4, x - y = 1  ->  x = 5/2, y = 3/2, value 19/2.
  LpModel m{Sense::minimize, {2, 3}, {row({1, 1}, Relation::ge, 4), row({1, -1}, Relation::eq, 1)}, {}};
  const auto s = solve(m);
  ASSERT_EQ(s.status, Status::optimal);
  EXPECT_EQ(s.value, Rational(19, 2));
  EXPECT_TRUE(check_certificate(m, s));
}

TEST(SolveTest, LowerBounds) {
  // max -x - y s.t. x + y >= 1 with x >= 2: optimum x = 2, y = 0.
  LpModel m{Sense::maximize, {-1, -1}, {row({1, 1}, Relation::ge, 1)}, {2, 0}};
  const auto s = solve(m);
  ASSERT_EQ(s.status, Status::optimal);
  EXPECT_EQ(s.value, -2);
  EXPECT_EQ(s.primal, (std::vector<Rational>{2, 0}));
  EXPECT_TRUE(check_certificate(m, s));
}

TEST(SolveTest, InfeasibleAndUnbounded) {
  LpModel inf{Sense::maximize, {1}, {row({1}, Relation::le, 1), row({1}, Relation::ge, 2)}, {}};
  EXPECT_EQ(solve(inf).status, Status::infeasible);
  LpModel unb{Sense::maximize, {1, 1}, {row({1, -1}, Relation::le, 1)}, {}};
  EXPECT_EQ(solve(unb).status, Status::unbounded);
  EXPECT_FALSE(check_certificate(unb, solve(unb)));
}

TEST(SolveTest, MalformedModelThrows) {
  LpModel bad{Sense::maximize, {1, 1}, {row({1}, Relation::le, 1)}, {}};
  EXPECT_THROW(solve(bad), std::invalid_argument);
  EXPECT_THROW(solve(LpModel{}), std::invalid_argument);
}

TEST(SolveTest, BealeCyclingInstanceTerminates) {
  // Cycles under the textbook largest-coefficient rule; Bland's rule terminates.
  LpModel m{Sense::maximize,
            {Rational(3, 4), -150, Rational(1, 50), -6},
            {row({Rational(1, 4), -60, Rational(-1, 25), 9}, Relation::le, 0),
             row({Rational(1, 2), -90, Rational(-1, 50), 3}, Relation::le, 0),
             row({0, 0, 1, 0}, Relation::le, 1)},
            {}};
  const auto s = solve(m);
  ASSERT_EQ(s.status, Status::optimal);
  EXPECT_EQ(s.value, Rational(1, 20));
  EXPECT_TRUE(check_certificate(m, s));
}

TEST(CertificateTest, PerturbedDualIsRejected) {
  LpModel m{Sense::maximize, {1, 1}, {row({1, 1}, Relation::le, 1), row({1, 0}, Relation::le, 1)}, {}};
  auto s = solve(m);
  ASSERT_TRUE(check_certificate(m, s));
  for (std::size_t i = 0; i < s.dual.size(); ++i) {
    if (s.dual[i] == 0) continue;
    auto bad = s;
    bad.dual[i] -= 1;
    EXPECT_FALSE(check_certificate(m, bad));
  }
  auto bad_primal = s;
  bad_primal.primal[0] += 1;
  EXPECT_FALSE(check_certificate(m, bad_primal));
}

TEST(PropertyTest, RandomModelsMatchVertexEnumeration) {
  std::mt19937 rng(2024);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const LpModel m = testing::random_model(rng, trial);
    const auto oracle = vertex_oracle(m);
    const auto s = solve(m);
    if (!oracle) {
      EXPECT_EQ(s.status, Status::infeasible) << "trial " << trial;
      ++infeasible;
      continue;
    }
    ASSERT_EQ(s.status, Status::optimal) << "trial " << trial;
    EXPECT_EQ(s.value, *oracle) << "trial " << trial;
    EXPECT_TRUE(check_certificate(m, s)) << "trial " << trial;
    // The transposed route agrees on tall instances.
    const auto t = solve(m, SolveOptions{0, true});
    ASSERT_EQ(t.status, Status::optimal);
    EXPECT_EQ(t.value, *oracle);
    EXPECT_TRUE(check_certificate(m, t)) << "transposed trial " << trial;
    ++optimal;
  }
  EXPECT_GT(optimal, 50);
  EXPECT_GT(infeasible, 5);
}

TEST(IoTest, ModelAndSolutionRoundTrip) {
  LpModel m{Sense::minimize, {2, Rational(-3, 7)}, {row({1, 1}, Relation::ge, 4), row({1, -1}, Relation::eq, 1)},
            {Rational(1, 2), 0}};
  const auto text = model_to_tsv(m, {"a0", "b0"});
  EXPECT_EQ(text.substr(0, text.find('\n')), "kind\trel\trhs\ta0\tb0");
  const auto back = model_from_tsv(text);
  EXPECT_EQ(model_to_tsv(back, {"a0", "b0"}), text);
  const auto s = solve(m);
  const auto s2 = solution_from_tsv(solution_to_tsv(s));
  EXPECT_EQ(s2.status, s.status);
  EXPECT_EQ(s2.value, s.value);
  EXPECT_EQ(s2.primal, s.primal);
  EXPECT_EQ(s2.dual, s.dual);
  EXPECT_THROW(model_from_tsv("kind\trel\trhs\tx\nrow\t<\t1\t1\n"), std::invalid_argument);
}

}  // namespace
}  // namespace ntil::lp
