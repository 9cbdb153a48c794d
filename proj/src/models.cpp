#include "dualsys/models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dualsys/combinomial.hpp"

namespace dualsys {

std::string_view to_string(Model model) {
  switch (model) {
    case Model::simple:
      return "simple";
    case Model::binomial:
      return "binomial";
    case Model::combinomial:
      return "combinomial";
  }
  return "unknown";
}

Model parse_model(std::string_view name) {
  if (name == "simple") return Model::simple;
  if (name == "binomial") return Model::binomial;
  if (name == "combinomial") return Model::combinomial;
  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

void NuisanceGrid::validate() const {
  if (p_points < 2) {
    throw std::invalid_argument("nuisance grid needs at least 2 p points");
  }
  if (!std::isfinite(nu_min) || nu_min > 1.0) {
    throw std::invalid_argument("nuisance grid needs a finite nu_min <= 1");
  }
  const bool binomial_limit = nu_min == 1.0 && nu_points == 1;
  if (!binomial_limit && (nu_points < 2 || nu_min == 1.0)) {
    throw std::invalid_argument("nuisance grid needs at least 2 nu points on [nu_min, 1]");
  }
}

std::vector<double> NuisanceGrid::p_nodes() const {
  std::vector<double> nodes(p_points);
  for (int i = 0; i < p_points; ++i) {
    nodes[i] = (i + 0.5) / p_points;
  }
  return nodes;
}

std::vector<double> NuisanceGrid::nu_nodes() const {
  if (nu_points == 1) {
    return {1.0};
  }
  std::vector<double> nodes(nu_points);
  const double step = (1.0 - nu_min) / (nu_points - 1);
  for (int k = 0; k < nu_points; ++k) {
    nodes[k] = nu_min + k * step;
  }
  nodes.back() = 1.0;
  return nodes;
}

LogWeight loglik_simple(std::int64_t n, const ReducedTable& table) {
  const std::int64_t row0 = n + table.n01;
  const std::int64_t col0 = n + table.n10;
  const std::int64_t total = n + table.observed_total();
  return log_factorial(row0) + log_factorial(col0) - log_factorial(n) -
         std::log(static_cast<double>(total + 1)) - log_factorial(total + 1);
}

LogWeight loglik_binomial(std::int64_t n, const SummaryStats& stats, int m) {
  const std::int64_t total = n + stats.observed_total;
  const std::int64_t letters = m * total;
  if (stats.s1 > letters) {
    throw std::domain_error("surviving letters exceed m times the event total");
  }
  return log_factorial(letters - stats.s1) + log_factorial(n + stats.n0_plus_known) -
         log_factorial(n) - log_factorial(letters + 1) - std::log(static_cast<double>(total + 1));
}

double log_integrated_simple_full(std::int64_t n, const ReducedTable& t) {
  const std::int64_t row1 = t.n10 + t.n11;
  const std::int64_t row0 = n + t.n01;
  const std::int64_t col1 = t.n01 + t.n11;
  const std::int64_t col0 = n + t.n10;
  const std::int64_t total = n + t.observed_total();
  const double log_multinomial = log_factorial(total) - log_factorial(n) - log_factorial(t.n01) -
                                 log_factorial(t.n10) - log_factorial(t.n11);
  return log_multinomial + log_factorial(row1) + log_factorial(row0) + log_factorial(col1) +
         log_factorial(col0) - 2.0 * log_factorial(total + 1);
}

double log_integrated_binomial_full(std::int64_t n, const SummaryStats& stats, int m) {
  const std::int64_t total = n + stats.observed_total;
  return log_factorial(stats.s1) + log_factorial(m * total - stats.s1) +
         log_factorial(stats.n1_plus) + log_factorial(n + stats.n0_plus_known) - log_factorial(n) -
         log_factorial(m * total + 1) - std::log(static_cast<double>(total + 1));
}

ComBinomialLikelihood::ComBinomialLikelihood(const SummaryStats& stats, int m,
                                             const NuisanceGrid& grid)
    : n0_plus_known_(stats.n0_plus_known), observed_total_(stats.observed_total), grid_(grid) {
  grid_.validate();
  const auto ps = grid_.p_nodes();
  const auto nus = grid_.nu_nodes();
  const std::size_t cols = nus.size();
  base_.resize(ps.size() * cols);
  slope_.resize(ps.size() * cols);

  const double s1 = static_cast<double>(stats.s1);
  const double total = static_cast<double>(stats.observed_total);
  const double per_unknown = log_factorial(0) + log_factorial(m);
  // Normalized weights: midpoint in p, trapezoid in nu (the nu prior is uniform).
  const double log_p_weight = -std::log(static_cast<double>(ps.size()));
  std::vector<double> log_nu_weight(cols, 0.0);
  if (cols > 1) {
    for (std::size_t k = 0; k < cols; ++k) {
      const bool end = k == 0 || k + 1 == cols;
      log_nu_weight[k] = std::log((end ? 0.5 : 1.0) / static_cast<double>(cols - 1));
    }
  }
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const double log_theta = std::log(ps[i]) - std::log1p(-ps[i]);
    for (std::size_t k = 0; k < cols; ++k) {
      const double nu = nus[k];
      const double lz = log_Z_from_log_theta(log_theta, nu, m);
      base_[i * cols + k] =
          log_p_weight + log_nu_weight[k] + s1 * log_theta - stats.s2_known * nu - total * lz;
      slope_[i * cols + k] = -per_unknown * nu - lz;
    }
  }
}

double ComBinomialLikelihood::log_nuisance_integral(std::int64_t n) const {
  const double x = static_cast<double>(n);
  const std::size_t size = base_.size();
  double hi = kNegInf;
  for (std::size_t idx = 0; idx < size; ++idx) {
    hi = std::max(hi, base_[idx] + x * slope_[idx]);
  }
  double acc = 0.0;
  for (std::size_t idx = 0; idx < size; ++idx) {
    acc += std::exp(base_[idx] + x * slope_[idx] - hi);
  }
  return hi + std::log(acc);
}

LogWeight ComBinomialLikelihood::operator()(std::int64_t n) const {
  const std::int64_t total = n + observed_total_;
  return log_factorial(n + n0_plus_known_) - log_factorial(n) -
         std::log(static_cast<double>(total + 1)) + log_nuisance_integral(n);
}

LogWeight loglik_combinomial(std::int64_t n, const SummaryStats& stats, int m,
                             const NuisanceGrid& grid) {
  return ComBinomialLikelihood(stats, m, grid)(n);
}

DemographicRange demographic_range(const DemographicInputs& inputs) {
  if (inputs.rate_low < 0.0 || inputs.rate_high < 0.0 || inputs.rate_low > inputs.rate_high) {
    throw std::invalid_argument("demographic rates must satisfy 0 <= low <= high");
  }
  DemographicRange range;
  for (const auto& seg : inputs.segments) {
    if (seg.population < 0.0 || seg.years < 0.0) {
      throw std::invalid_argument("population and years must be non-negative");
    }
    range.person_years += seg.population * seg.years;
  }
  range.low = range.person_years * inputs.rate_low / 100000.0;
  range.high = range.person_years * inputs.rate_high / 100000.0;
  range.low_rounded = std::round(range.low / 50.0) * 50.0;
  range.high_rounded = std::round(range.high / 50.0) * 50.0;
  return range;
}

}  // namespace dualsys
