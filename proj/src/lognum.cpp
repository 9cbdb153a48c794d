#include "dualsys/lognum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dualsys {

namespace {

// ln Gamma(x + 1) for large x. Truncation error is below 1e-20 relative for x > 1e3.
double stirling_log_factorial(double x) {
  const double z = x + 1.0;
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  const double series =
      inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)));
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

}  // namespace

LogFactorialTable::LogFactorialTable(std::int64_t bound) {
  if (bound < 1) {
    throw std::invalid_argument("log-factorial table bound must be >= 1");
  }
  table_.resize(static_cast<std::size_t>(bound) + 1);
  for (std::int64_t k = 0; k <= bound; ++k) {
    table_[static_cast<std::size_t>(k)] = std::lgamma(static_cast<double>(k) + 1.0);
  }
}

double LogFactorialTable::operator()(std::int64_t k) const {
  if (k < 0) {
    throw std::domain_error("log_factorial: negative argument " + std::to_string(k));
  }
  if (k < static_cast<std::int64_t>(table_.size())) {
    return table_[static_cast<std::size_t>(k)];
  }
  return stirling_log_factorial(static_cast<double>(k));
}

const LogFactorialTable& default_log_factorial_table() {
  static const LogFactorialTable table;
  return table;
}

double log_factorial(std::int64_t k) { return default_log_factorial_table()(k); }

double log_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::domain_error("log_binomial: need 0 <= k <= n, got n=" + std::to_string(n) +
                            ", k=" + std::to_string(k));
  }
  // Summing the two smaller terms first makes (n, k) and (n, n - k) bit-identical.
  const double a = log_factorial(k);
  const double b = log_factorial(n - k);
  return log_factorial(n) - (std::min(a, b) + std::max(a, b));
}

double log_sum_exp(std::span<const double> ws) {
  if (ws.empty()) {
    throw std::invalid_argument("log_sum_exp: empty sequence");
  }
  const double hi = *std::max_element(ws.begin(), ws.end());
  if (hi == kNegInf) {
    return kNegInf;
  }
  double acc = 0.0;
  for (double w : ws) {
    acc += std::exp(w - hi);
  }
  return hi + std::log(acc);
}

}  // namespace dualsys
