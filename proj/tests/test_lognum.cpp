#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "bigint_oracle.hpp"
#include "doctest.h"
#include "dualsys/lognum.hpp"

using namespace dualsys;

TEST_SUITE("lognum") {
  TEST_CASE("log_factorial small values") {
    CHECK(log_factorial(0) == 0.0);
    CHECK(log_factorial(1) == 0.0);
    CHECK(log_factorial(5) == doctest::Approx(4.787491742782046).epsilon(1e-15));
  }

  TEST_CASE("log_factorial against exact big-integer factorial") {
    for (std::int64_t k : {20, 170, 1000, 5000, 25000}) {
      const double exact = test::log_of(test::exact_factorial(k));
      CHECK(log_factorial(k) == doctest::Approx(exact).epsilon(1e-12));
    }
  }

  TEST_CASE("log_factorial beyond the table uses the asymptotic series") {
    const LogFactorialTable small(100);
    CHECK(small.bound() == 100);
    for (std::int64_t k : {101, 150, 1000, 30000}) {
      CHECK(small(k) == doctest::Approx(log_factorial(k)).epsilon(1e-13));
    }
    // k past the default bound: recurrence with the last tabulated entry
    const std::int64_t edge = LogFactorialTable::kDefaultBound;
    CHECK(log_factorial(edge + 1) ==
          doctest::Approx(log_factorial(edge) + std::log(double(edge + 1))).epsilon(1e-14));
  }

  TEST_CASE("log_factorial rejects negative input") {
    CHECK_THROWS_AS(log_factorial(-1), std::domain_error);
  }

  TEST_CASE("log_factorial recurrence") {
    for (std::int64_t k = 1; k <= 100000; k += 7) {
      const double lhs = log_factorial(k);
      const double rhs = std::log(double(k)) + log_factorial(k - 1);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
    }
  }

  TEST_CASE("log_binomial") {
    CHECK(log_binomial(5, 0) == 0.0);
    CHECK(log_binomial(5, 2) == doctest::Approx(std::log(10.0)).epsilon(1e-15));
    const double exact = test::log_of(test::exact_binomial(338, 143));
    CHECK(log_binomial(338, 143) == doctest::Approx(exact).epsilon(1e-12));

    CHECK_THROWS_AS(log_binomial(5, 6), std::domain_error);
    CHECK_THROWS_AS(log_binomial(-1, 0), std::domain_error);
    CHECK_THROWS_AS(log_binomial(5, -1), std::domain_error);
  }

  TEST_CASE("log_binomial symmetry is exact") {
    for (std::int64_t n = 0; n <= 400; n += 3) {
      for (std::int64_t k = 0; k <= n; ++k) {
        REQUIRE(log_binomial(n, k) == log_binomial(n, n - k));
      }
    }
  }

  TEST_CASE("log_sum_exp") {
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(log_sum_exp(std::vector{0.0, 0.0}) == doctest::Approx(std::log(2.0)));
    CHECK(log_sum_exp(std::vector{-inf, 3.5}) == 3.5);
    CHECK(log_sum_exp(std::vector{1000.0, 1000.0, 1000.0}) ==
          doctest::Approx(1000.0 + std::log(3.0)).epsilon(1e-15));
    CHECK(log_sum_exp(std::vector{-inf, -inf}) == -inf);
    CHECK_THROWS_AS(log_sum_exp(std::vector<double>{}), std::invalid_argument);
  }

  TEST_CASE("log_sum_exp shift invariance") {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> value(-50.0, 50.0);
    std::uniform_real_distribution<double> shift(-500.0, 500.0);
    std::uniform_int_distribution<int> length(1, 40);
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<double> ws(length(rng));
      for (double& w : ws) w = value(rng);
      const double c = shift(rng);
      std::vector<double> shifted = ws;
      for (double& w : shifted) w += c;
      CHECK(std::abs(log_sum_exp(shifted) - (c + log_sum_exp(ws))) <= 1e-12);
    }
  }
}
