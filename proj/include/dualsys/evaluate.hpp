#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualsys/lognum.hpp"

namespace dualsys {

/// Maps the unknown count n to its integrated log-likelihood.
using LogLikelihood = std::function<LogWeight(std::int64_t)>;

/// An evaluator threw or returned +inf/NaN; `n()` is the offending count.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(std::int64_t n, const std::string& what);
  std::int64_t n() const { return n_; }

 private:
  std::int64_t n_;
};

/// Worker cap: DUALSYS_THREADS if set to a positive integer, otherwise the
/// OpenMP default. Always 1 in builds without OpenMP.
int worker_count();

/// Reference kernel: loglik(n) for n = n_first .. n_first + count - 1, in order.
std::vector<LogWeight> evaluate_log_weights_serial(const LogLikelihood& loglik,
                                                   std::int64_t n_first, std::int64_t count);

/// OpenMP kernel with the same contract. Each slot is written by exactly one
/// iteration, so the output is identical to the serial kernel. On failure
/// the error for the smallest failing n is rethrown.
std::vector<LogWeight> evaluate_log_weights_parallel(const LogLikelihood& loglik,
                                                     std::int64_t n_first, std::int64_t count);

}  // namespace dualsys
