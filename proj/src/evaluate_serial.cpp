#include <cmath>
#include <exception>
#include <limits>

#include "evaluate_detail.hpp"

namespace dualsys {

EvaluationError::EvaluationError(std::int64_t n, const std::string& what)
    : std::runtime_error("evaluation failed at n=" + std::to_string(n) + ": " + what), n_(n) {}

namespace detail {

LogWeight checked_eval(const LogLikelihood& loglik, std::int64_t n) {
  LogWeight w;
  try {
    w = loglik(n);
  } catch (const EvaluationError&) {
    throw;
  } catch (const std::exception& e) {
    throw EvaluationError(n, e.what());
  }
  if (std::isnan(w) || w == std::numeric_limits<double>::infinity()) {
    throw EvaluationError(n, "log-weight is not finite");
  }
  return w;
}

}  // namespace detail

std::vector<LogWeight> evaluate_log_weights_serial(const LogLikelihood& loglik,
                                                   std::int64_t n_first, std::int64_t count) {
  std::vector<LogWeight> out(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = detail::checked_eval(loglik, n_first + i);
  }
  return out;
}

}  // namespace dualsys
