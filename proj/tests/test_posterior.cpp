#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "dualsys/models.hpp"
#include "dualsys/posterior.hpp"

using namespace dualsys;

TEST_SUITE("posterior") {
  TEST_CASE("constant evaluator gives a uniform posterior") {
    const auto dist = compute_posterior([](std::int64_t) { return -3.0; }, {1, 10}, 0);
    REQUIRE(dist.size() == 10);
    for (double p : dist.probs()) CHECK(p == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(quantile(dist, 0.5) == 5);
    CHECK(quantile(dist, 0.51) == 6);
    CHECK(quantile(dist, 0.05) == 1);
    CHECK(quantile(dist, 0.999) == 10);
    CHECK(dist.mean() == doctest::Approx(5.5));
  }

  TEST_CASE("single-point support is a point mass") {
    const auto dist = compute_posterior([](std::int64_t) { return 12.0; }, {42, 42}, 40);
    CHECK(dist.probs().front() == 1.0);
    for (double q : {0.01, 0.5, 0.99}) CHECK(quantile(dist, q) == 42);
  }

  TEST_CASE("quantile level must be inside (0, 1)") {
    const auto dist = compute_posterior([](std::int64_t) { return 0.0; }, {1, 3}, 0);
    CHECK_THROWS_AS(quantile(dist, 0.0), std::domain_error);
    CHECK_THROWS_AS(quantile(dist, 1.0), std::domain_error);
    CHECK_THROWS_AS(quantile(dist, -0.2), std::domain_error);
  }

  TEST_CASE("prior validation") {
    CHECK_THROWS_AS(compute_posterior([](std::int64_t) { return 0.0; }, {5, 10}, 6),
                    std::invalid_argument);
    CHECK_THROWS_AS(compute_posterior([](std::int64_t) { return 0.0; }, {10, 5}, 0),
                    std::invalid_argument);
  }

  TEST_CASE("symmetric triangular distribution has median at its mode") {
    const auto dist = compute_posterior(
        [](std::int64_t n) { return std::log(21.0 - std::abs(static_cast<double>(n) - 20.0)); },
        {0, 40}, 0);
    const auto report = decile_report(dist);
    CHECK(report.median == 20);
    CHECK(report.mean == doctest::Approx(20.0).epsilon(1e-12));
  }

  TEST_CASE("evaluator failures carry n") {
    auto bad = [](std::int64_t n) -> double {
      if (n == 7 || n == 12) throw std::runtime_error("boom");
      return 0.0;
    };
    for (auto exec : {Execution::serial, Execution::parallel}) {
      try {
        compute_posterior(bad, {0, 20}, 0, exec);
        FAIL("expected EvaluationError");
      } catch (const EvaluationError& e) {
        CHECK(e.n() == 7);
      }
    }
    auto nan_eval = [](std::int64_t n) { return n == 3 ? std::nan("") : 0.0; };
    CHECK_THROWS_AS(compute_posterior(nan_eval, {0, 5}, 0), EvaluationError);
    CHECK_THROWS_AS(compute_posterior([](std::int64_t) { return kNegInf; }, {0, 5}, 0),
                    std::domain_error);
  }

  TEST_CASE("parallel kernel output is identical to the serial reference") {
    const ReducedTable bundled{190, 143, 4};
    auto loglik = [&](std::int64_t n) { return loglik_simple(n, bundled); };
    const auto serial = evaluate_log_weights_serial(loglik, 0, 3000);
    const auto parallel = evaluate_log_weights_parallel(loglik, 0, 3000);
    CHECK(serial == parallel);

    SummaryStats stats;
    stats.m = 5;
    stats.n0_plus_known = 190;
    stats.n1_plus = 147;
    stats.s1 = 235;
    stats.s2_known = 1283.1319356107754;
    stats.observed_total = 337;
    const ComBinomialLikelihood comb(stats, 5, NuisanceGrid{30, -2.0, 11});
    CHECK(evaluate_log_weights_serial(comb, 0, 200) == evaluate_log_weights_parallel(comb, 0, 200));
  }

  TEST_CASE("quantiles are nondecreasing and shift invariant") {
    std::mt19937_64 rng(99);
    std::normal_distribution<double> noise(0.0, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> weights(300);
      for (double& w : weights) w = noise(rng);
      const PosteriorDistribution dist(1000, weights);
      std::int64_t previous = dist.first_total();
      for (double q = 0.01; q < 1.0; q += 0.01) {
        const auto t = quantile(dist, q);
        CHECK(t >= previous);
        previous = t;
      }
      auto shifted = weights;
      for (double& w : shifted) w += 1234.5;
      const PosteriorDistribution moved(1000, shifted);
      CHECK(decile_report(moved).deciles == decile_report(dist).deciles);
      for (std::size_t i = 0; i < weights.size(); ++i) {
        CHECK(moved.probs()[i] == doctest::Approx(dist.probs()[i]).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("widening a non-binding prior bound leaves the deciles unchanged") {
    SummaryStats stats;
    stats.n0_plus_known = 190;
    stats.n1_plus = 147;
    stats.s1 = 235;
    stats.observed_total = 337;
    auto loglik = [&](std::int64_t n) { return loglik_binomial(n, stats, 5); };
    const auto narrow = compute_posterior(loglik, {337, 5850}, 337);
    const auto wide = compute_posterior(loglik, {337, 9000}, 337);
    double tail = 0.0;
    for (std::size_t i = narrow.size(); i < wide.size(); ++i) tail += wide.probs()[i];
    REQUIRE(tail < 1e-12);
    CHECK(decile_report(narrow).deciles == decile_report(wide).deciles);
  }

  TEST_CASE("probabilities sum to one") {
    const ReducedTable bundled{190, 143, 4};
    const auto dist = compute_posterior(
        [&](std::int64_t n) { return loglik_simple(n, bundled); }, {337, 25000}, 337);
    CHECK(std::abs(dist.cdf().back() - 1.0) <= 1e-12);
  }
}
