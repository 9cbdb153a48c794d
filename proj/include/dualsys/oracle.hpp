#pragma once

#include <cstdint>

#include "dualsys/capture_data.hpp"

// Brute-force checks for the closed-form marginal likelihoods. These integrate
// the unreduced likelihoods numerically (full multinomial coefficients, the
// original p parameterization of the com-binomial) and share none of the
// algebra used by the production evaluators. Values are natural logs; compare
// log-ratios across n where the two sides drop different constants.

namespace dualsys::oracle {

enum class QuadratureRule { midpoint, trapezoid };

struct QuadratureSpec {
  int points_per_axis = 2048;
  QuadratureRule rule = QuadratureRule::midpoint;

  /// Throws std::invalid_argument if points_per_axis < 8.
  void validate() const;
};

/// ln of the integral of x^a (1-x)^b over [0, 1].
double integrate_beta_bruteforce(std::int64_t a, std::int64_t b, const QuadratureSpec& quad);

/// ln of the (p, q) integral of the full two-list multinomial likelihood
/// under independence, uniform priors.
double integrate_simple_bruteforce(std::int64_t n, const ReducedTable& table,
                                   const QuadratureSpec& quad);

/// ln of the (p, s) integral of the binomial letter-survival likelihood,
/// keeping the (n_{++})!/n! factor.
double integrate_binomial_bruteforce(std::int64_t n, const SummaryStats& stats, int m,
                                     const QuadratureSpec& quad);

/// ln of the com-binomial likelihood with s integrated exactly and (p, nu)
/// by quadrature over (0, 1) x [nu_min, 1] against a uniform nu prior.
/// nu_min = 1 evaluates at nu = 1 only.
double integrate_combinomial_bruteforce(std::int64_t n, const SummaryStats& stats, int m,
                                        const QuadratureSpec& quad, double nu_min);

/// Same with separate rules on the p and nu axes.
double integrate_combinomial_bruteforce(std::int64_t n, const SummaryStats& stats, int m,
                                        const QuadratureSpec& p_quad, const QuadratureSpec& nu_quad,
                                        double nu_min);

}  // namespace dualsys::oracle
