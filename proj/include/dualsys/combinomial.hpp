#pragma once

#include <vector>

namespace dualsys {

/// Parameters of the Conway-Maxwell binomial distribution on {0..m}.
/// Either the success probability p or the odds theta = p / (1 - p) is
/// stored; the other is derived. nu = 1 is the ordinary binomial, nu < 1
/// spreads mass toward 0 and m, nu > 1 concentrates it.
class ComBinomialParams {
 public:
  static ComBinomialParams from_p(int m, double p, double nu);
  static ComBinomialParams from_theta(int m, double theta, double nu);

  int m() const { return m_; }
  double nu() const { return nu_; }
  double p() const;
  double theta() const;
  double log_theta() const;

 private:
  enum class Primary { p, theta };
  ComBinomialParams(int m, Primary primary, double value, double nu)
      : m_(m), primary_(primary), value_(value), nu_(nu) {}

  int m_;
  Primary primary_;
  double value_;
  double nu_;
};

/// ln sum_{k=0}^{m} theta^k / [k!(m-k)!]^nu. Throws std::domain_error if theta <= 0.
double log_Z(double theta, double nu, int m);

/// Same normalizer taking ln(theta) directly.
double log_Z_from_log_theta(double log_theta, double nu, int m);

/// ln P(X = j). Throws std::domain_error for j outside [0, m].
double log_pmf(int j, const ComBinomialParams& params);

/// P(X = j) for j = 0..m.
std::vector<double> pmf_row(const ComBinomialParams& params);

}  // namespace dualsys
