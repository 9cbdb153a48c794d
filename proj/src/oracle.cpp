#include "dualsys/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dualsys/lognum.hpp"

namespace dualsys::oracle {

namespace {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> log_weights;
};

// Nodes and ln weights on [lo, hi] (weights sum to hi - lo).
Rule make_rule(const QuadratureSpec& quad, double lo, double hi) {
  quad.validate();
  const int count = quad.points_per_axis;
  const double width = hi - lo;
  Rule rule;
  rule.nodes.resize(count);
  rule.log_weights.resize(count);
  if (quad.rule == QuadratureRule::midpoint) {
    for (int i = 0; i < count; ++i) {
      rule.nodes[i] = lo + width * (i + 0.5) / count;
      rule.log_weights[i] = std::log(width / count);
    }
  } else {
    const double h = width / (count - 1);
    for (int i = 0; i < count; ++i) {
      rule.nodes[i] = lo + h * i;
      rule.log_weights[i] = std::log((i == 0 || i == count - 1) ? h / 2 : h);
    }
    rule.nodes.back() = hi;
  }
  return rule;
}

// a ln x with 0 ln 0 = 0.
double xlog(double a, double x) { return a == 0.0 ? 0.0 : a * std::log(x); }

// a ln x + b ln(1 - x)
double log_beta_kernel(std::int64_t a, std::int64_t b, double x) {
  return xlog(static_cast<double>(a), x) + xlog(static_cast<double>(b), 1.0 - x);
}

// ln of the 2-D quadrature of exp(f(x) + g(y)) over the unit square, summed
// point by point over the full grid.
template <class F, class G>
double log_integrate_unit_square(const QuadratureSpec& quad, F f, G g) {
  const Rule rule = make_rule(quad, 0.0, 1.0);
  const std::size_t count = rule.nodes.size();
  std::vector<double> fx(count), gy(count);
  for (std::size_t i = 0; i < count; ++i) {
    fx[i] = rule.log_weights[i] + f(rule.nodes[i]);
    gy[i] = rule.log_weights[i] + g(rule.nodes[i]);
  }
  std::vector<double> terms;
  terms.reserve(count * count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      terms.push_back(fx[i] + gy[j]);
    }
  }
  return log_sum_exp(terms);
}

}  // namespace

void QuadratureSpec::validate() const {
  if (points_per_axis < 8) {
    throw std::invalid_argument("quadrature needs at least 8 points per axis");
  }
}

double integrate_beta_bruteforce(std::int64_t a, std::int64_t b, const QuadratureSpec& quad) {
  const Rule rule = make_rule(quad, 0.0, 1.0);
  std::vector<double> terms(rule.nodes.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    terms[i] = rule.log_weights[i] + log_beta_kernel(a, b, rule.nodes[i]);
  }
  return log_sum_exp(terms);
}

double integrate_simple_bruteforce(std::int64_t n, const ReducedTable& table,
                                   const QuadratureSpec& quad) {
  const std::int64_t row1 = table.n10 + table.n11;  // mentioned in other sources
  const std::int64_t row0 = n + table.n01;
  const std::int64_t col1 = table.n01 + table.n11;  // in the archive
  const std::int64_t col0 = n + table.n10;
  const std::int64_t total = n + table.observed_total();
  const double log_multinomial = log_factorial(total) - log_factorial(n) -
                                 log_factorial(table.n01) - log_factorial(table.n10) -
                                 log_factorial(table.n11);
  return log_multinomial +
         log_integrate_unit_square(
             quad, [&](double p) { return log_beta_kernel(row1, row0, p); },
             [&](double q) { return log_beta_kernel(col1, col0, q); });
}

double integrate_binomial_bruteforce(std::int64_t n, const SummaryStats& stats, int m,
                                     const QuadratureSpec& quad) {
  const std::int64_t total = n + stats.observed_total;
  const std::int64_t row0 = n + stats.n0_plus_known;
  return log_factorial(total) - log_factorial(n) +
         log_integrate_unit_square(
             quad, [&](double p) { return log_beta_kernel(stats.s1, m * total - stats.s1, p); },
             [&](double s) { return log_beta_kernel(stats.n1_plus, row0, s); });
}

double integrate_combinomial_bruteforce(std::int64_t n, const SummaryStats& stats, int m,
                                        const QuadratureSpec& quad, double nu_min) {
  return integrate_combinomial_bruteforce(n, stats, m, quad, quad, nu_min);
}

double integrate_combinomial_bruteforce(std::int64_t n, const SummaryStats& stats, int m,
                                        const QuadratureSpec& p_quad, const QuadratureSpec& nu_quad,
                                        double nu_min) {
  if (!(nu_min <= 1.0)) {
    throw std::invalid_argument("nu_min must be <= 1");
  }
  const std::int64_t total = n + stats.observed_total;
  const std::int64_t row0 = n + stats.n0_plus_known;

  std::vector<double> columns(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    columns[j] = static_cast<double>(stats.column_known.at(j) + (j == 0 ? n : 0));
  }
  std::vector<double> log_choose(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    log_choose[j] = log_binomial(m, j);
  }

  const Rule p_rule = make_rule(p_quad, 0.0, 1.0);
  Rule nu_rule;
  if (nu_min == 1.0) {
    nu_rule.nodes = {1.0};
    nu_rule.log_weights = {0.0};
  } else {
    nu_rule = make_rule(nu_quad, nu_min, 1.0);
    for (double& w : nu_rule.log_weights) {
      w -= std::log(1.0 - nu_min);  // uniform prior density on [nu_min, 1]
    }
  }

  std::vector<double> numer(static_cast<std::size_t>(m) + 1);
  std::vector<double> terms;
  terms.reserve(p_rule.nodes.size() * nu_rule.nodes.size());
  for (std::size_t i = 0; i < p_rule.nodes.size(); ++i) {
    const double p = p_rule.nodes[i];
    for (std::size_t k = 0; k < nu_rule.nodes.size(); ++k) {
      const double nu = nu_rule.nodes[k];
      for (int j = 0; j <= m; ++j) {
        numer[j] = xlog(j, p) + xlog(m - j, 1.0 - p) + nu * log_choose[j];
      }
      const double denom = log_sum_exp(numer);
      double log_product = 0.0;
      for (int j = 0; j <= m; ++j) {
        if (columns[j] != 0.0) {
          log_product += columns[j] * (numer[j] - denom);
        }
      }
      terms.push_back(p_rule.log_weights[i] + nu_rule.log_weights[k] + log_product);
    }
  }

  return log_factorial(total) - log_factorial(n) + log_factorial(stats.n1_plus) +
         log_factorial(row0) - log_factorial(total + 1) + log_sum_exp(terms);
}

}  // namespace dualsys::oracle
