#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "nabla_frac/exact_oracle.hpp"
#include "nabla_frac/taylor_monomial.hpp"
#include "test_support.hpp"

namespace nabla_frac {
namespace {

using exact::rational;

TEST(MonomialValue, EnvelopeFixtures) {
  for (double nu : {0.25, 0.5, 0.75, 0.1, 0.9}) {
    EXPECT_NEAR(monomial_value({nu - 1.0, 2}), nu, 1e-15);
    EXPECT_NEAR(monomial_value({nu - 1.0, 3}), nu * (nu + 1.0) / 2.0, 1e-15);
  }
}

TEST(MonomialValue, ZeroAtOffsetZeroForEveryOrder) {
  for (double mu : {-3.5, -2.0, -1.0, -0.5, 0.0, 0.3, 1.0, 7.25}) {
    EXPECT_EQ(monomial_value({mu, 0}), 0.0) << "mu = " << mu;
  }
}

TEST(MonomialValue, NegativeIntegerOrdersVanish) {
  EXPECT_EQ(monomial_value({-2.0, 7}), 0.0);
  for (std::int64_t n = 0; n < 20; ++n) {
    EXPECT_EQ(monomial_value({-1.0, n}), 0.0);
    EXPECT_EQ(monomial_value({-5.0, n}), 0.0);
  }
}

TEST(MonomialValue, FirstOffsetIsOne) {
  EXPECT_EQ(monomial_value({0.7, 1}), 1.0);
  EXPECT_EQ(monomial_value({-1.5, 1}), 1.0);
  EXPECT_EQ(monomial_value({12.0, 1}), 1.0);
}

TEST(MonomialValue, OrderZeroIsOneAwayFromBase) {
  for (std::int64_t n = 1; n <= 300; ++n) {
    EXPECT_EQ(monomial_value({0.0, n}), 1.0);
  }
}

TEST(MonomialValue, RejectsBadArguments) {
  EXPECT_THROW(monomial_value({0.5, -1}), std::invalid_argument);
  EXPECT_THROW(monomial_value({std::numeric_limits<double>::quiet_NaN(), 3}), std::invalid_argument);
  EXPECT_THROW(monomial_value({std::numeric_limits<double>::infinity(), 3}), std::invalid_argument);
  EXPECT_THROW(monomial_value(0.5, 2, 3), std::invalid_argument);
}

TEST(MonomialValue, TranslationInvariance) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> shift(-1000, 1000);
  for (double mu : {-1.9, -0.5, 0.3, 2.5}) {
    for (std::int64_t n = 0; n <= 40; ++n) {
      const std::int64_t a = shift(rng);
      EXPECT_EQ(monomial_value(mu, a + n, a), monomial_value({mu, n}));
    }
  }
}

TEST(MonomialValue, MatchesExactRecurrence) {
  // mu grid as exact rationals: -19/10, -1/2, 3/10, 7/10, 5/2
  const std::vector<exact::ExactRational> grid{rational(-19, 10), rational(-1, 2), rational(3, 10), rational(7, 10),
                                               rational(5, 2)};
  for (const auto& mu : grid) {
    const double mu_d = exact::to_double(mu);
    const auto exact_row = exact::oracle_monomial_row(mu, 50);
    for (std::int64_t n = 0; n <= 50; ++n) {
      const double expected = exact::to_double(exact_row[static_cast<std::size_t>(n)]);
      EXPECT_LE(testing::rel_error(monomial_value({mu_d, n}), expected), 1e-12) << "mu=" << mu_d << " n=" << n;
    }
  }
}

TEST(MonomialRow, AgreesWithPointEvaluation) {
  for (double mu : {-2.7, -0.5, 0.0, 0.4, 3.0}) {
    const auto row = monomial_row<double>(mu, 60);
    for (std::int64_t n = 0; n <= 60; ++n) {
      EXPECT_NEAR(row[static_cast<std::size_t>(n)], monomial_value({mu, n}),
                  1e-13 * std::max(1.0, std::abs(row[static_cast<std::size_t>(n)])));
    }
  }
}

TEST(ConvolutionWeight, LagOneIsOne) {
  for (double nu : {0.1, 0.5, 0.99, 1.5, 2.7}) {
    EXPECT_EQ(convolution_weight(nu, 1), 1.0);
  }
}

TEST(ConvolutionWeight, LagTwoIsMinusNu) {
  for (double nu : {0.1, 0.3, 0.5, 0.75, 0.99}) {
    EXPECT_NEAR(convolution_weight(nu, 2), -nu, 1e-16);
  }
}

TEST(ConvolutionWeight, FrozenExactValue) {
  // H_{-1.3} at offset 5: (-3/10)(7/10)/2 (17/10)/3 (27/10)/4 = -3213/80000
  const auto exact_value = exact::oracle_monomial(rational(-13, 10), 5);
  EXPECT_EQ(exact_value, rational(-3213, 80000));
  EXPECT_NEAR(convolution_weight(0.3, 5), -3213.0 / 80000.0, 1e-17);
  EXPECT_LT(convolution_weight(0.3, 5), 0.0);
}

TEST(ConvolutionWeight, RejectsNonPositiveLag) {
  EXPECT_THROW(convolution_weight(0.5, 0), std::invalid_argument);
  EXPECT_THROW(convolution_weight(0.5, -3), std::invalid_argument);
}

TEST(ConvolutionWeight, SignLawForFractionalOrders) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> order(1e-3, 1.0 - 1e-3);
  for (int trial = 0; trial < 50; ++trial) {
    const double nu = order(rng);
    const auto weights = convolution_weights<double>(nu, 500);
    EXPECT_EQ(weights[1], 1.0);
    for (std::size_t lag = 2; lag < weights.size(); ++lag) {
      ASSERT_LT(weights[lag], 0.0) << "nu=" << nu << " lag=" << lag;
    }
  }
}

TEST(MonomialTail, SmallFixtures) {
  const auto tail = monomial_tail(0.5, 4);
  ASSERT_EQ(tail.size(), 4u);
  EXPECT_EQ(tail[0], 1.0);
  EXPECT_EQ(tail[1], 0.5);
  EXPECT_EQ(tail[2], 0.375);
  EXPECT_EQ(tail[3], 0.3125);
  for (std::size_t n = 1; n < tail.size(); ++n) {
    const double k = static_cast<double>(n);
    EXPECT_DOUBLE_EQ(tail[n], tail[n - 1] * (k + 0.5 - 1.0) / k);
  }
  EXPECT_EQ(monomial_tail(0.9, 1), std::vector<double>{1.0});
}

TEST(MonomialTail, RejectsOrdersOutsideUnitInterval) {
  EXPECT_THROW(monomial_tail(1.0, 5), std::invalid_argument);
  EXPECT_THROW(monomial_tail(0.0, 5), std::invalid_argument);
  EXPECT_THROW(monomial_tail(-0.2, 5), std::invalid_argument);
  EXPECT_THROW(monomial_tail(0.5, 0), std::invalid_argument);
}

TEST(MonomialTail, PositiveNonincreasingAndDecaying) {
  for (double mu : {0.05, 0.25, 0.5, 0.75, 0.95}) {
    const auto tail = monomial_tail(mu, 10000);
    for (std::size_t n = 0; n < tail.size(); ++n) {
      ASSERT_GT(tail[n], 0.0);
      if (n > 0) {
        ASSERT_LE(tail[n], tail[n - 1]);
      }
    }
  }
  // Independent gamma-ratio check: H_{-1/2}(a + 10^4, a) = Gamma(10^4 - 1/2) / (Gamma(10^4) Gamma(1/2)).
  const double n = 10000.0;
  const double gamma_ratio = std::exp(std::lgamma(n - 0.5) - std::lgamma(n) - std::lgamma(0.5));
  const double last = monomial_tail(0.5, 10000).back();
  EXPECT_NEAR(last, gamma_ratio, 1e-9 * gamma_ratio);
  EXPECT_LT(last, 1e-1);
  EXPECT_NEAR(last, 0.0056417, 1e-6);
}

}  // namespace
}  // namespace nabla_frac
