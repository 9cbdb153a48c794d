#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dualsys/capture_data.hpp"
#include "dualsys/lognum.hpp"

namespace dualsys {

enum class Model { simple, binomial, combinomial };

std::string_view to_string(Model model);
/// Throws std::invalid_argument for unknown names.
Model parse_model(std::string_view name);

/// Integration grid for the com-binomial nuisance parameters: midpoint nodes
/// on p in (0, 1) and equally spaced trapezoid nodes on nu in [nu_min, 1].
struct NuisanceGrid {
  int p_points = 400;
  double nu_min = -5.0;
  int nu_points = 241;

  /// Throws std::invalid_argument for a grid with fewer than two points on an
  /// axis. The one exception is the binomial limit nu_min = 1, nu_points = 1.
  void validate() const;
  std::vector<double> p_nodes() const;
  std::vector<double> nu_nodes() const;
};

/// Integrated log-likelihood of the 2x2 model, up to an additive constant.
LogWeight loglik_simple(std::int64_t n, const ReducedTable& table);

/// Integrated log-likelihood of the binomial letter-survival model, up to an
/// additive constant.
LogWeight loglik_binomial(std::int64_t n, const SummaryStats& stats, int m);

/// Closed forms with every constant kept (multinomial coefficients, factorials
/// of n-free cells). Used to check the integrals against quadrature.
double log_integrated_simple_full(std::int64_t n, const ReducedTable& table);
double log_integrated_binomial_full(std::int64_t n, const SummaryStats& stats, int m);

/// Com-binomial letter-survival model with the nuisance integral tabulated once.
/// Per-n evaluation reduces a fixed p-by-nu array in a fixed order, so results
/// are reproducible regardless of which thread calls it. Immutable after
/// construction.
class ComBinomialLikelihood {
 public:
  ComBinomialLikelihood(const SummaryStats& stats, int m, const NuisanceGrid& grid);

  LogWeight operator()(std::int64_t n) const;

  /// ln of the quadrature of the nuisance integrand against the uniform
  /// priors (midpoint in p, trapezoid in nu), without the n-dependent prefactor.
  double log_nuisance_integral(std::int64_t n) const;

  const NuisanceGrid& grid() const { return grid_; }

 private:
  std::int64_t n0_plus_known_;
  std::int64_t observed_total_;
  NuisanceGrid grid_;
  // integrand exponent at node (i, k) is base_[i*N + k] + n * slope_[i*N + k]
  std::vector<double> base_;
  std::vector<double> slope_;
};

/// One-shot convenience; builds the tabulation on every call.
LogWeight loglik_combinomial(std::int64_t n, const SummaryStats& stats, int m,
                             const NuisanceGrid& grid);

struct PopulationSegment {
  double population = 0.0;
  double years = 0.0;
};

struct DemographicInputs {
  std::vector<PopulationSegment> segments;
  double rate_low = 0.0;   ///< events per 100,000 persons per year
  double rate_high = 0.0;
};

struct DemographicRange {
  double low = 0.0;
  double high = 0.0;
  double low_rounded = 0.0;   ///< nearest 50
  double high_rounded = 0.0;
  double person_years = 0.0;
};

/// Expected event count over the segments at the low and high rates.
/// Throws std::invalid_argument on negative inputs or rate_low > rate_high.
DemographicRange demographic_range(const DemographicInputs& inputs);

}  // namespace dualsys
