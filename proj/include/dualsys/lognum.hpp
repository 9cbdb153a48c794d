#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace dualsys {

/// Natural-log weight. May be -infinity (zero weight); never +infinity or NaN
/// when produced from valid input.
using LogWeight = double;

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// Lookup table of ln(k!) for 0 <= k <= bound. Immutable after construction,
/// so one instance can be shared across threads.
class LogFactorialTable {
 public:
  static constexpr std::int64_t kDefaultBound = 1'000'000;

  explicit LogFactorialTable(std::int64_t bound = kDefaultBound);

  std::int64_t bound() const { return static_cast<std::int64_t>(table_.size()) - 1; }

  /// ln(k!). Arguments past the table fall back to a Stirling series.
  /// Throws std::domain_error for k < 0.
  double operator()(std::int64_t k) const;

 private:
  std::vector<double> table_;
};

/// Process-wide table with the default bound, built on first use.
const LogFactorialTable& default_log_factorial_table();

double log_factorial(std::int64_t k);

/// ln C(n, k). Throws std::domain_error unless 0 <= k <= n.
double log_binomial(std::int64_t n, std::int64_t k);

/// ln(sum(exp(ws))), max-shifted. All -inf input gives -inf.
/// Throws std::invalid_argument on an empty sequence.
double log_sum_exp(std::span<const double> ws);

}  // namespace dualsys
