#include "dualsys/posterior.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dualsys {

namespace {

// CDF values within this of q count as reaching it; absorbs rounding in the
// running sum so that e.g. five masses of 0.1 reach 0.5.
constexpr double kCdfSlack = 1e-12;

}  // namespace

void PriorSpec::validate(std::int64_t observed_total) const {
  if (total_min < observed_total) {
    throw std::invalid_argument("prior total_min " + std::to_string(total_min) +
                                " is below the observed total " + std::to_string(observed_total));
  }
  if (total_max < total_min) {
    throw std::invalid_argument("prior total_max must be >= total_min");
  }
}

PosteriorDistribution::PosteriorDistribution(std::int64_t first_total,
                                             std::vector<LogWeight> log_weights)
    : first_total_(first_total), log_weights_(std::move(log_weights)) {
  if (log_weights_.empty()) {
    throw std::invalid_argument("posterior needs a non-empty support");
  }
  const double norm = log_sum_exp(log_weights_);
  if (!std::isfinite(norm)) {
    throw std::domain_error("posterior has no mass on its support");
  }
  probs_.resize(log_weights_.size());
  cdf_.resize(log_weights_.size());
  double running = 0.0;
  for (std::size_t i = 0; i < log_weights_.size(); ++i) {
    probs_[i] = std::exp(log_weights_[i] - norm);
    running += probs_[i];
    cdf_[i] = running;
  }
}

double PosteriorDistribution::mean() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    acc += probs_[i] * static_cast<double>(total_at(i));
  }
  return acc;
}

PosteriorDistribution compute_posterior(const LogLikelihood& loglik, const PriorSpec& prior,
                                        std::int64_t observed_total, Execution exec) {
  prior.validate(observed_total);
  const std::int64_t n_first = prior.total_min - observed_total;
  const std::int64_t count = prior.total_max - prior.total_min + 1;
  auto weights = exec == Execution::serial
                     ? evaluate_log_weights_serial(loglik, n_first, count)
                     : evaluate_log_weights_parallel(loglik, n_first, count);
  return PosteriorDistribution(prior.total_min, std::move(weights));
}

std::int64_t quantile(const PosteriorDistribution& dist, double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw std::domain_error("quantile level must lie in (0, 1)");
  }
  const auto& cdf = dist.cdf();
  const auto it = std::lower_bound(cdf.begin(), cdf.end(), q - kCdfSlack);
  const auto idx = it == cdf.end() ? cdf.size() - 1 : static_cast<std::size_t>(it - cdf.begin());
  return dist.total_at(idx);
}

QuantileReport decile_report(const PosteriorDistribution& dist) {
  QuantileReport report;
  for (std::size_t i = 0; i < kDecileLevels.size(); ++i) {
    report.deciles[i] = quantile(dist, kDecileLevels[i]);
  }
  report.median = report.deciles[4];
  report.mean = dist.mean();
  return report;
}

}  // namespace dualsys
