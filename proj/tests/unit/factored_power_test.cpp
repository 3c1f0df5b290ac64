#include <gtest/gtest.h>

#include <random>

#include "catscore/error.hpp"
#include "catscore/factored_power.hpp"
#include "catscore/oracle_correlation.hpp"
#include "support/oracles.hpp"

namespace catscore {
namespace {

FactoredCorrelation random_factored(Eigen::Index p, Eigen::Index m, double gamma,
                                    std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.05, 5.0);
  Eigen::VectorXd d(m);
  for (Eigen::Index k = 0; k < m; ++k) d(k) = unif(rng);
  return FactoredCorrelation(gamma, testing::random_orthonormal(p, m, rng), d);
}

TEST(FactoredPowerTest, GammaOneIsIdentity) {
  std::mt19937_64 rng(1);
  const auto c = random_factored(30, 5, 1.0, rng);
  const Eigen::VectorXd v = testing::random_normal_matrix(30, 1, rng);
  for (double alpha : {-1.0, -0.5, 0.5, 2.0}) {
    const Eigen::VectorXd out = factored_power_apply(c, alpha, v);
    for (Eigen::Index i = 0; i < v.size(); ++i) EXPECT_EQ(out(i), v(i));
  }
}

TEST(FactoredPowerTest, MatchesDenseEigendecomposition) {
  std::mt19937_64 rng(2);
  for (double alpha : {-1.0, -0.5, 0.5, 2.0, 1.0 / 3.0}) {
    const auto c = random_factored(25, 6, 0.3, rng);
    const Eigen::VectorXd v = testing::random_normal_matrix(25, 1, rng);
    const Eigen::VectorXd expected = testing::dense_power(c.dense(), alpha) * v;
    EXPECT_LT(testing::max_abs_diff(factored_power_apply(c, alpha, v), expected), 1e-10)
        << "alpha " << alpha;
  }
}

TEST(FactoredPowerTest, InverseMatchesWoodbury) {
  std::mt19937_64 rng(3);
  const auto c = random_factored(40, 8, 0.2, rng);
  const Eigen::VectorXd v = testing::random_normal_matrix(40, 1, rng);
  const Eigen::VectorXd expected =
      testing::woodbury_inverse_apply(c.gamma(), c.basis(), c.eigenvalues(), v);
  EXPECT_LT(testing::max_abs_diff(factored_power_apply(c, -1.0, v), expected), 1e-12);
}

TEST(FactoredPowerTest, ZeroPowerReturnsInput) {
  std::mt19937_64 rng(4);
  const auto c = random_factored(10, 3, 0.5, rng);
  const Eigen::VectorXd v = testing::random_normal_matrix(10, 1, rng);
  EXPECT_LT(testing::max_abs_diff(factored_power_apply(c, 0.0, v), v), 1e-14);
}

TEST(FactoredPowerTest, ColumnsAgreeWithSingleApplies) {
  std::mt19937_64 rng(5);
  const auto c = random_factored(20, 4, 0.4, rng);
  const Eigen::MatrixXd vs = testing::random_normal_matrix(20, 3, rng);
  const Eigen::MatrixXd out = factored_power_apply_columns(c, -0.5, vs);
  for (Eigen::Index k = 0; k < 3; ++k)
    EXPECT_LT(testing::max_abs_diff(out.col(k), factored_power_apply(c, -0.5, vs.col(k))), 1e-14);
}

TEST(FactoredPowerTest, InactiveFeaturesPassThrough) {
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(3, 1);
  u(0, 0) = u(2, 0) = std::sqrt(0.5);
  Eigen::VectorXd d(1);
  d << 2.0;
  const FactoredCorrelation c(0.5, u, d, {true, false, true});
  Eigen::VectorXd v(3);
  v << 1.0, 7.0, -2.0;
  const Eigen::VectorXd out = factored_power_apply(c, -0.5, v);
  EXPECT_EQ(out(1), 7.0);
  const Eigen::VectorXd expected = testing::dense_power(c.dense(), -0.5) * v;
  EXPECT_LT(testing::max_abs_diff(out, expected), 1e-12);
}

TEST(FactoredPowerTest, RejectsBadInput) {
  const auto c = FactoredCorrelation::identity(3);
  EXPECT_THROW(factored_power_apply(c, 0.5, Eigen::VectorXd::Zero(4)), InvalidInput);
  EXPECT_THROW(factored_power_apply(c, std::nan(""), Eigen::VectorXd::Zero(3)), InvalidInput);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(3);
  v(1) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(factored_power_apply(c, 0.5, v), InvalidInput);
}

TEST(FactoredCorrelationTest, ValidatesFactors) {
  std::mt19937_64 rng(6);
  const Eigen::MatrixXd u = testing::random_orthonormal(5, 2, rng);
  const Eigen::VectorXd d = Eigen::VectorXd::Ones(2);
  EXPECT_THROW(FactoredCorrelation(0.0, u, d), InvalidInput);
  EXPECT_THROW(FactoredCorrelation(1.5, u, d), InvalidInput);
  EXPECT_THROW(FactoredCorrelation(0.5, u, -d), InvalidInput);
  EXPECT_THROW(FactoredCorrelation(0.5, 2.0 * u, d), InvalidInput);
  EXPECT_THROW(FactoredCorrelation(0.5, u, Eigen::VectorXd::Ones(3)), InvalidInput);
  EXPECT_THROW(FactoredCorrelation(0.5, u, d, {true, false, true, true, true}), InvalidInput);
}

TEST(FactoredCorrelationTest, EntryRowAndDenseAgree) {
  std::mt19937_64 rng(7);
  const auto c = random_factored(8, 3, 0.35, rng);
  const Eigen::MatrixXd dense = c.dense();
  for (Eigen::Index i = 0; i < 8; ++i) {
    EXPECT_LT(testing::max_abs_diff(c.row(i), dense.row(i).transpose()), 1e-14);
    for (Eigen::Index j = 0; j < 8; ++j) EXPECT_NEAR(c.entry(i, j), dense(i, j), 1e-14);
  }
  const auto c2 = c.with_gamma(0.9);
  EXPECT_EQ(c2.gamma(), 0.9);
  EXPECT_EQ(c2.rank(), 3);
}

TEST(OracleCorrelationTest, ValidatesMatrix) {
  Eigen::MatrixXd asym(2, 2);
  asym << 1, 0.5, 0.4, 1;
  EXPECT_THROW(OracleCorrelation{asym}, InvalidInput);
  Eigen::MatrixXd diag(2, 2);
  diag << 2, 0, 0, 1;
  EXPECT_THROW(OracleCorrelation{diag}, InvalidInput);
  Eigen::MatrixXd singular(2, 2);
  singular << 1, 1, 1, 1;
  EXPECT_THROW(OracleCorrelation{singular}, NumericalError);
  EXPECT_THROW(OracleCorrelation{Eigen::MatrixXd::Identity(2, 3)}, InvalidInput);
}

TEST(OracleCorrelationTest, PowerApplyMatchesClosedForm) {
  Eigen::MatrixXd p(2, 2);
  p << 1, 0.8, 0.8, 1;
  const OracleCorrelation oracle(p);
  Eigen::VectorXd v(2);
  v << 3, 3;
  const Eigen::VectorXd out = oracle.power_apply(-0.5, v);
  EXPECT_NEAR(out(0), std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(out(1), std::sqrt(5.0), 1e-12);
  EXPECT_LT(testing::max_abs_diff(oracle.inverse_sqrt() * v, out), 1e-12);
}

}  // namespace
}  // namespace catscore
