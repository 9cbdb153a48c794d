#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dualsys/evaluate.hpp"
#include "dualsys/lognum.hpp"

namespace dualsys {

/// Uniform prior on the event total (unknown + observed) over
/// [total_min, total_max].
struct PriorSpec {
  std::int64_t total_min = 0;
  std::int64_t total_max = 0;

  /// Throws std::invalid_argument unless observed_total <= total_min <= total_max.
  void validate(std::int64_t observed_total) const;
};

/// Normalized distribution over a contiguous run of totals.
class PosteriorDistribution {
 public:
  /// Normalizes `log_weights`, which correspond to totals first_total,
  /// first_total + 1, ... Throws std::domain_error if every weight is -inf.
  PosteriorDistribution(std::int64_t first_total, std::vector<LogWeight> log_weights);

  std::size_t size() const { return log_weights_.size(); }
  std::int64_t first_total() const { return first_total_; }
  std::int64_t last_total() const { return first_total_ + static_cast<std::int64_t>(size()) - 1; }
  std::int64_t total_at(std::size_t i) const { return first_total_ + static_cast<std::int64_t>(i); }

  const std::vector<LogWeight>& log_weights() const { return log_weights_; }
  const std::vector<double>& probs() const { return probs_; }
  /// Running sums of probs, in support order.
  const std::vector<double>& cdf() const { return cdf_; }

  double mean() const;

 private:
  std::int64_t first_total_;
  std::vector<LogWeight> log_weights_;
  std::vector<double> probs_;
  std::vector<double> cdf_;
};

enum class Execution { serial, parallel };

/// Evaluates loglik at n = total - observed_total across the prior support and
/// normalizes. Evaluator failures surface as EvaluationError carrying n.
PosteriorDistribution compute_posterior(const LogLikelihood& loglik, const PriorSpec& prior,
                                        std::int64_t observed_total,
                                        Execution exec = Execution::parallel);

/// Smallest total whose CDF reaches q. Throws std::domain_error for q outside (0, 1).
std::int64_t quantile(const PosteriorDistribution& dist, double q);

inline constexpr std::array<double, 9> kDecileLevels{0.1, 0.2, 0.3, 0.4, 0.5,
                                                     0.6, 0.7, 0.8, 0.9};

struct QuantileReport {
  std::array<std::int64_t, 9> deciles{};  ///< at kDecileLevels
  std::int64_t median = 0;
  double mean = 0.0;
};

QuantileReport decile_report(const PosteriorDistribution& dist);

}  // namespace dualsys
