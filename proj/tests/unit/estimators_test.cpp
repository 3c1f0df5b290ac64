#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "catscore/error.hpp"
#include "catscore/estimators.hpp"
#include "support/oracles.hpp"

namespace catscore {
namespace {

using testing::two_group_labels;

LabeledDataset one_feature(std::initializer_list<double> g1, std::initializer_list<double> g2) {
  Eigen::MatrixXd x(1, static_cast<Eigen::Index>(g1.size() + g2.size()));
  Eigen::Index k = 0;
  for (double v : g1) x(0, k++) = v;
  for (double v : g2) x(0, k++) = v;
  return LabeledDataset(x, two_group_labels(g1.size(), g2.size()));
}

// Three features, n1 = n2 = 3; expected values computed independently in numpy.
LabeledDataset small_dataset() {
  Eigen::MatrixXd x(3, 6);
  x << 1.0, 2.0, 4.0, 3.0, 5.0, 4.5,
       0.2, 0.5, 0.1, 1.1, 0.9, 1.6,
       10, 14, 9, 7, 12, 8;
  return LabeledDataset(x, two_group_labels(3, 3));
}

// Four features, n1 = n2 = 4, first two strongly correlated.
LabeledDataset correlated_dataset() {
  Eigen::MatrixXd x(4, 8);
  x << 1.0, 2.0, 4.0, 3.5, 3.0, 5.0, 4.5, 6.0,
       1.2, 2.1, 3.7, 3.9, 3.1, 4.6, 4.9, 6.2,
       0.3, -0.2, 0.8, 0.1, 0.5, 0.4, -0.6, 0.2,
       2.0, 2.5, 3.1, 2.2, 1.0, 1.9, 1.4, 2.8;
  return LabeledDataset(x, two_group_labels(4, 4));
}

TEST(GroupStatsTest, HandEvaluatedSingleFeature) {
  const GroupStats s = compute_group_stats(one_feature({1, 2, 3}, {4, 5, 6}));
  EXPECT_DOUBLE_EQ(s.mu1(0), 2.0);
  EXPECT_DOUBLE_EQ(s.mu2(0), 5.0);
  EXPECT_DOUBLE_EQ(s.pooled_var(0), 1.0);
  EXPECT_DOUBLE_EQ(s.fold_change(0), -3.0);
  EXPECT_NEAR(s.t(0), -3.0 / std::sqrt(2.0 / 3.0), 1e-14);
  EXPECT_NEAR(s.t(0), -3.674234614174767, 1e-12);
  EXPECT_FALSE(s.zero_variance[0]);
}

TEST(GroupStatsTest, MatchesBruteForceSums) {
  std::mt19937_64 rng(11);
  const auto data = testing::random_dataset(25, 5, 7, rng);
  const GroupStats s = compute_group_stats(data);
  const auto brute = testing::brute_group_stats(data.values(), data.labels());
  EXPECT_LT(testing::max_abs_diff(s.mu1, brute.mu1), 1e-12);
  EXPECT_LT(testing::max_abs_diff(s.mu2, brute.mu2), 1e-12);
  EXPECT_LT(testing::max_abs_diff(s.pooled_var, brute.pooled_var), 1e-12);
  EXPECT_LT(testing::max_abs_diff(s.t, brute.t), 1e-10);
}

TEST(GroupStatsTest, IdenticalConstantGroupsGiveZeroT) {
  const GroupStats s = compute_group_stats(one_feature({0.1, 0.1, 0.1}, {0.1, 0.1, 0.1, 0.1}));
  EXPECT_EQ(s.t(0), 0.0);
  EXPECT_EQ(s.pooled_var(0), 0.0);
  EXPECT_TRUE(s.zero_variance[0]);
}

TEST(GroupStatsTest, SeparatedConstantGroupsGiveInfiniteSentinel) {
  const GroupStats s = compute_group_stats(one_feature({2, 2, 2}, {5, 5}));
  EXPECT_TRUE(s.zero_variance[0]);
  EXPECT_EQ(s.t(0), -std::numeric_limits<double>::infinity());
  EXPECT_DOUBLE_EQ(s.fold_change(0), -3.0);
}

TEST(GroupStatsTest, LabelSwapNegatesExactly) {
  std::mt19937_64 rng(3);
  const auto data = testing::random_dataset(12, 4, 6, rng);
  const GroupStats a = compute_group_stats(data);
  const GroupStats b = compute_group_stats(data.with_swapped_labels());
  for (Eigen::Index i = 0; i < a.p(); ++i) {
    EXPECT_EQ(a.fold_change(i), -b.fold_change(i));
    EXPECT_EQ(a.t(i), -b.t(i));
    EXPECT_EQ(a.pooled_var(i), b.pooled_var(i));
  }
}

TEST(GroupStatsTest, RejectsTooFewSamples) {
  Eigen::MatrixXd x(1, 3);
  x << 1, 2, 3;
  EXPECT_THROW(LabeledDataset(x, two_group_labels(1, 2)), InvalidInput);
}

TEST(ShrinkVariancesTest, FrozenSmallDataset) {
  const auto data = small_dataset();
  const GroupStats s = compute_group_stats(data);
  const ShrinkageVariance sv = shrink_variances(s, data);
  EXPECT_NEAR(sv.target, 1.708333333333333, 1e-12);
  EXPECT_NEAR(sv.lambda, 0.17336191438127402, 1e-12);
  EXPECT_NEAR(sv.lambda, testing::brute_variance_lambda(data.values(), data.labels()), 1e-13);
}

TEST(ShrinkVariancesTest, IdenticalVariancesForceFullShrinkage) {
  Eigen::MatrixXd x(3, 4);
  x << 1, 3, 10, 12,
       5, 7, -1, 1,
       0, 2, 4, 6;
  const LabeledDataset data(x, two_group_labels(2, 2));
  const GroupStats s = compute_group_stats(data);
  const ShrinkageVariance sv = shrink_variances(s, data);
  EXPECT_EQ(sv.lambda, 1.0);
  for (Eigen::Index i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(sv.v_shrink(i), s.pooled_var(i));
}

TEST(ShrinkVariancesTest, ZeroLambdaIsIdentity) {
  const auto data = small_dataset();
  const GroupStats s = compute_group_stats(data);
  const ShrinkageVariance sv = shrink_variances(s, data, {.fixed_lambda = 0.0});
  for (Eigen::Index i = 0; i < s.p(); ++i) EXPECT_EQ(sv.v_shrink(i), s.pooled_var(i));
}

TEST(ShrinkVariancesTest, ConvexCombination) {
  std::mt19937_64 rng(5);
  const auto data = testing::random_dataset(40, 4, 4, rng);
  const GroupStats s = compute_group_stats(data);
  const ShrinkageVariance sv = shrink_variances(s, data);
  ASSERT_GE(sv.lambda, 0.0);
  ASSERT_LE(sv.lambda, 1.0);
  for (Eigen::Index i = 0; i < s.p(); ++i) {
    EXPECT_GE(sv.v_shrink(i), std::min(s.pooled_var(i), sv.target) - 1e-12);
    EXPECT_LE(sv.v_shrink(i), std::max(s.pooled_var(i), sv.target) + 1e-12);
  }
  EXPECT_NEAR(sv.lambda, testing::brute_variance_lambda(data.values(), data.labels()), 1e-12);
}

TEST(ShrinkVariancesTest, NeedsTwoFeatures) {
  const auto data = one_feature({1, 2}, {3, 5});
  EXPECT_THROW(shrink_variances(compute_group_stats(data), data), InvalidInput);
}

TEST(ShrinkCorrelationTest, FrozenIntensity) {
  const FactoredCorrelation c = shrink_correlation(correlated_dataset());
  EXPECT_NEAR(c.gamma(), 0.27743043394295197, 1e-12);
  EXPECT_EQ(c.rank(), 4);
  EXPECT_LT(c.max_unit_diagonal_deviation(), 1e-12);
}

TEST(ShrinkCorrelationTest, IntensityClipsAtOne) {
  EXPECT_EQ(shrink_correlation(small_dataset()).gamma(), 1.0);
}

TEST(ShrinkCorrelationTest, MatchesDenseOracleP5N100) {
  std::mt19937_64 rng(21);
  const auto data = testing::random_dataset(5, 50, 50, rng);
  const FactoredCorrelation c = shrink_correlation(data);
  const auto brute = testing::brute_shrinkage_correlation(data.values(), data.labels());
  EXPECT_NEAR(c.gamma(), std::max(brute.gamma, 1e-4), 1e-12);
  EXPECT_LT(testing::max_abs_diff(c.dense(), brute.shrunk), 1e-10);
}

TEST(ShrinkCorrelationTest, FactorInvariantsHighDimensional) {
  std::mt19937_64 rng(8);
  const auto data = testing::random_dataset(60, 5, 6, rng);
  const FactoredCorrelation c = shrink_correlation(data);
  const Eigen::Index m = c.rank();
  EXPECT_LE(m, 9);
  EXPECT_LT(testing::max_abs_diff(c.basis().transpose() * c.basis(), Eigen::MatrixXd::Identity(m, m)),
            1e-10);
  EXPECT_GE(c.eigenvalues().minCoeff(), 0.0);
  EXPECT_LT(c.max_unit_diagonal_deviation(), 1e-8);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(c.dense());
  EXPECT_GE(eig.eigenvalues().minCoeff(), c.gamma() - 1e-10);
  const auto brute = testing::brute_shrinkage_correlation(data.values(), data.labels());
  EXPECT_LT(testing::max_abs_diff(c.dense(), brute.shrunk), 1e-8);
}

TEST(ShrinkCorrelationTest, DuplicatedPairWithConstantProductsHitsFloor) {
  // Residuals are +-1 in every sample, so every product z_i z_j is constant
  // and the estimated sampling variance of r_12 is exactly zero.
  Eigen::MatrixXd x(2, 4);
  x << 1, 3, 5, 7,
       1, 3, 5, 7;
  const LabeledDataset data(x, two_group_labels(2, 2));
  const FactoredCorrelation c = shrink_correlation(data, {.gamma_floor = 1e-3});
  EXPECT_EQ(c.gamma(), 1e-3);
  ASSERT_EQ(c.rank(), 1);
  EXPECT_NEAR(c.eigenvalues()(0), 2.0, 1e-12);
  EXPECT_NEAR(c.entry(0, 1), 1.0 - 1e-3, 1e-12);
}

TEST(ShrinkCorrelationTest, DuplicatedPairGeneralData) {
  std::mt19937_64 rng(2);
  Eigen::MatrixXd x = testing::random_normal_matrix(1, 10, rng);
  Eigen::MatrixXd dup(2, 10);
  dup << x, x;
  const LabeledDataset data(dup, two_group_labels(5, 5));
  const FactoredCorrelation c = shrink_correlation(data);
  ASSERT_EQ(c.rank(), 1);
  EXPECT_NEAR(c.eigenvalues()(0), 2.0, 1e-12);
  const auto brute = testing::brute_shrinkage_correlation(dup, data.labels());
  EXPECT_NEAR(c.gamma(), std::max(brute.gamma, 1e-4), 1e-12);
}

TEST(ShrinkCorrelationTest, ZeroVarianceFeatureIsExcluded) {
  std::mt19937_64 rng(4);
  Eigen::MatrixXd x = testing::random_normal_matrix(4, 8, rng);
  x.row(2).setConstant(3.0);
  const LabeledDataset data(x, two_group_labels(4, 4));
  const FactoredCorrelation c = shrink_correlation(data);
  EXPECT_FALSE(c.is_active(2));
  EXPECT_EQ(c.entry(2, 2), 1.0);
  EXPECT_EQ(c.entry(2, 0), 0.0);
  EXPECT_LT(c.max_unit_diagonal_deviation(), 1e-12);
}

TEST(ShrinkCorrelationTest, RankZeroIsNumericalError) {
  Eigen::MatrixXd x(2, 4);
  x << 1, 1, 2, 2,
       0, 0, 0, 0;
  const LabeledDataset data(x, two_group_labels(2, 2));
  EXPECT_THROW(shrink_correlation(data), NumericalError);
}

TEST(ShrinkCorrelationTest, IndependentFeaturesShrinkHeavily) {
  // Monte-Carlo oracle: independent features with many samples give mean gamma > 0.8.
  std::mt19937_64 rng(99);
  double sum = 0;
  const int datasets = 10000;
  for (int r = 0; r < datasets; ++r) {
    const LabeledDataset data(testing::random_normal_matrix(5, 60, rng), two_group_labels(30, 30));
    sum += shrink_correlation(data).gamma();
  }
  EXPECT_GT(sum / datasets, 0.8);
}

TEST(ShrinkCorrelationTest, FixedGammaAndValidation) {
  const auto data = correlated_dataset();
  EXPECT_EQ(shrink_correlation(data, {.fixed_gamma = 1.0}).gamma(), 1.0);
  EXPECT_THROW(shrink_correlation(data, {.fixed_gamma = 0.0}), InvalidInput);
  EXPECT_THROW(shrink_correlation(data, {.gamma_floor = 0.0}), InvalidInput);
}

TEST(PooledMomentVarianceTest, ReducesToSingleGroupFactor) {
  // df = n - 1 recovers n / (n-1)^3.
  EXPECT_DOUBLE_EQ(pooled_moment_variance(2.0, 10, 9), 2.0 * 10.0 / (9.0 * 9.0 * 9.0));
}

}  // namespace
}  // namespace catscore
