#include <cmath>

#include "doctest.h"
#include "dualsys/lognum.hpp"
#include "dualsys/models.hpp"
#include "dualsys/oracle.hpp"

using namespace dualsys;
using oracle::QuadratureRule;
using oracle::QuadratureSpec;

namespace {

const std::filesystem::path kBundledTable = DUALSYS_DATA_DIR "/table1.csv";

CaptureTable synthetic_table() {
  return parse_capture_table("mentioned_other,letters,count\n0,1,1\n0,2,1\n1,0,2\n1,3,1\n");
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("quadrature spec validation") {
    CHECK_THROWS_AS(oracle::integrate_beta_bruteforce(1, 1, {7, QuadratureRule::midpoint}),
                    std::invalid_argument);
  }

  TEST_CASE("beta integral spot check") {
    for (auto rule : {QuadratureRule::midpoint, QuadratureRule::trapezoid}) {
      const double value = std::exp(oracle::integrate_beta_bruteforce(3, 2, {512, rule}));
      CHECK(value == doctest::Approx(1.0 / 60.0).epsilon(1e-6));
    }
  }

  TEST_CASE("empty table integrates to one") {
    const double value = oracle::integrate_simple_bruteforce(0, {}, {64, QuadratureRule::trapezoid});
    CHECK(std::abs(value) <= 1e-14);
  }

  TEST_CASE("simple closed form equals brute-force quadrature") {
    const auto reduced = reduce(synthetic_table());
    for (std::int64_t n : {0, 5, 50}) {
      const double brute = oracle::integrate_simple_bruteforce(n, reduced, {2048, QuadratureRule::trapezoid});
      CHECK(std::abs(brute - log_integrated_simple_full(n, reduced)) <= 1e-6);
      const double finer = oracle::integrate_simple_bruteforce(n, reduced, {4096, QuadratureRule::trapezoid});
      CHECK(std::abs(finer - brute) <= 1e-8);
    }
  }

  TEST_CASE("binomial closed form equals brute-force quadrature") {
    const auto stats = summarize(synthetic_table());
    for (std::int64_t n : {0, 5, 50}) {
      const double brute = oracle::integrate_binomial_bruteforce(n, stats, 5, {2048, QuadratureRule::midpoint});
      CHECK(std::abs(brute - log_integrated_binomial_full(n, stats, 5)) <= 1e-6);
      const double finer = oracle::integrate_binomial_bruteforce(n, stats, 5, {4096, QuadratureRule::midpoint});
      CHECK(std::abs(finer - brute) <= 1e-8);
    }
  }

  TEST_CASE("com-binomial brute force at nu = 1 is the binomial brute force") {
    const auto stats = summarize(synthetic_table());
    const QuadratureSpec quad{1024, QuadratureRule::midpoint};
    for (std::int64_t n : {0, 5, 50}) {
      // the binomial form keeps the exact s integral inside the quadrature
      const double comb = oracle::integrate_combinomial_bruteforce(n, stats, 5, quad, 1.0);
      const double binom = oracle::integrate_binomial_bruteforce(n, stats, 5, quad);
      // differ only by the n-independent product of C(5, j)^{n_{+j}} over known columns
      double log_choose = 0.0;
      for (int j = 1; j <= 5; ++j) log_choose += stats.column_known[j] * log_binomial(5, j);
      CHECK(std::abs(comb - (binom + log_choose)) <= 1e-8);
    }
  }

  TEST_CASE("production com-binomial log-ratios match the brute force") {
    const auto stats = summarize(load_capture_table(kBundledTable));
    const NuisanceGrid grid{};
    const ComBinomialLikelihood production(stats, 5, grid);
    const QuadratureSpec p_quad{grid.p_points, QuadratureRule::midpoint};
    const QuadratureSpec nu_quad{grid.nu_points, QuadratureRule::trapezoid};
    auto brute_at = [&](std::int64_t n) {
      return oracle::integrate_combinomial_bruteforce(n, stats, 5, p_quad, nu_quad, grid.nu_min);
    };
    for (std::int64_t n : {0, 10, 100}) {
      const double prod = production(n + 1) - production(n);
      const double brute = brute_at(n + 1) - brute_at(n);
      MESSAGE("n=" << n << " production " << prod << " brute " << brute);
      CHECK(std::abs(prod - brute) <= 1e-4);
    }
  }
}
