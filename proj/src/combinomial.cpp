#include "dualsys/combinomial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dualsys/lognum.hpp"

namespace dualsys {

namespace {

void check_m(int m) {
  if (m < 1) {
    throw std::domain_error("com-binomial needs m >= 1, got " + std::to_string(m));
  }
}

// ln(j!(m-j)!)
double log_split_factorial(int j, int m) { return log_factorial(j) + log_factorial(m - j); }

// j ln(theta) - nu ln(j!(m-j)!), the unnormalized log mass.
double log_kernel(int j, double log_theta, double nu, int m) {
  return j * log_theta - nu * log_split_factorial(j, m);
}

}  // namespace

ComBinomialParams ComBinomialParams::from_p(int m, double p, double nu) {
  check_m(m);
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("com-binomial p must lie strictly inside (0, 1)");
  }
  if (!std::isfinite(nu)) {
    throw std::domain_error("com-binomial nu must be finite");
  }
  return {m, Primary::p, p, nu};
}

ComBinomialParams ComBinomialParams::from_theta(int m, double theta, double nu) {
  check_m(m);
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::domain_error("com-binomial theta must be positive and finite");
  }
  if (!std::isfinite(nu)) {
    throw std::domain_error("com-binomial nu must be finite");
  }
  return {m, Primary::theta, theta, nu};
}

double ComBinomialParams::p() const {
  return primary_ == Primary::p ? value_ : value_ / (1.0 + value_);
}

double ComBinomialParams::theta() const {
  return primary_ == Primary::theta ? value_ : value_ / (1.0 - value_);
}

double ComBinomialParams::log_theta() const {
  return primary_ == Primary::theta ? std::log(value_) : std::log(value_) - std::log1p(-value_);
}

double log_Z_from_log_theta(double log_theta, double nu, int m) {
  check_m(m);
  std::vector<double> terms(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    terms[k] = log_kernel(k, log_theta, nu, m);
  }
  return log_sum_exp(terms);
}

double log_Z(double theta, double nu, int m) {
  if (!(theta > 0.0)) {
    throw std::domain_error("log_Z: theta must be positive");
  }
  return log_Z_from_log_theta(std::log(theta), nu, m);
}

double log_pmf(int j, const ComBinomialParams& params) {
  const int m = params.m();
  if (j < 0 || j > m) {
    throw std::domain_error("log_pmf: j=" + std::to_string(j) + " outside [0, " +
                            std::to_string(m) + "]");
  }
  const double lt = params.log_theta();
  return log_kernel(j, lt, params.nu(), m) - log_Z_from_log_theta(lt, params.nu(), m);
}

std::vector<double> pmf_row(const ComBinomialParams& params) {
  const int m = params.m();
  const double lt = params.log_theta();
  const double lz = log_Z_from_log_theta(lt, params.nu(), m);
  std::vector<double> row(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    row[j] = std::exp(log_kernel(j, lt, params.nu(), m) - lz);
  }
  return row;
}

}  // namespace dualsys
