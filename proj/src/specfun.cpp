#include "polyberg/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace polyberg::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// 0! .. 23!
double factorial(int m) {
  static const double table[] = {
      1.0, 1.0, 2.0, 6.0, 24.0, 120.0, 720.0, 5040.0, 40320.0, 362880.0,
      3628800.0, 39916800.0, 479001600.0, 6227020800.0, 87178291200.0,
      1307674368000.0, 20922789888000.0, 355687428096000.0,
      6402373705728000.0, 121645100408832000.0, 2432902008176640000.0,
      51090942171709440000.0, 1124000727777607680000.0,
      25852016738884976640000.0};
  return table[m];
}

}  // namespace

void check_order(int n) {
  if (n < 1 || n > kMaxN) throw std::domain_error("matrix order n must satisfy 1 <= n <= 12");
}

Eigen::VectorXd hermite_vector(int n, double y) {
  check_order(n);
  if (!std::isfinite(y)) throw std::domain_error("hermite_vector: y must be finite");
  Eigen::VectorXd h(n);
  h(0) = std::pow(kPi, -0.25) * std::exp(-0.5 * y * y);
  if (n == 1) return h;
  h(1) = std::sqrt(2.0) * y * h(0);
  for (int m = 1; m + 1 < n; ++m)
    h(m + 1) = std::sqrt(2.0 / (m + 1)) * y * h(m) - std::sqrt(double(m) / (m + 1)) * h(m - 1);
  return h;
}

Eigen::VectorXd laguerre_vector(int n, double y) {
  check_order(n);
  if (!(y >= 0.0)) throw std::domain_error("laguerre_vector: y must be nonnegative");
  Eigen::VectorXd l = Eigen::VectorXd::Zero(n);
  // exp(-y/2) * |L_m(y)| drops below the denormal range well before this for m < 12
  if (y >= 1600.0) return l;
  const double w = std::exp(-0.5 * y);
  // p_m = L_m(y) exp(-y/2), recurrence (m+1) L_{m+1} = (2m+1-y) L_m - m L_{m-1}
  double prev = w;
  l(0) = prev;
  if (n == 1) return l;
  double cur = (1.0 - y) * w;
  l(1) = -cur;
  for (int m = 1; m + 1 < n; ++m) {
    const double next = ((2.0 * m + 1.0 - y) * cur - m * prev) / (m + 1.0);
    prev = cur;
    cur = next;
    l(m + 1) = ((m + 1) % 2 == 0) ? next : -next;
  }
  return l;
}

Eigen::MatrixXd hermite_coeff_matrix(int n) {
  check_order(n);
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double norm = 1.0 / std::sqrt(std::pow(2.0, k) * factorial(k) * std::sqrt(kPi));
    for (int i = 0; 2 * i <= k; ++i) {
      const double term = factorial(k) * std::pow(2.0, k - 2 * i) /
                          (factorial(i) * factorial(k - 2 * i));
      C(k, k - 2 * i) = norm * ((i % 2) ? -term : term);
    }
  }
  return C;
}

double gaussian_tail_moment(int m, double t) {
  if (m < 0 || m > 2 * kMaxN - 2) throw std::domain_error("gaussian_tail_moment: order out of range");
  if (std::isinf(t) && t > 0) return 0.0;
  const bool lower_inf = std::isinf(t);
  // parity chain from G_0 or G_1
  double g;
  int base = m % 2;
  if (base == 0) {
    g = 0.5 * std::sqrt(kPi) * (lower_inf ? 2.0 : std::erfc(t));
  } else {
    g = lower_inf ? 0.0 : 0.5 * std::exp(-t * t);
  }
  for (int k = base + 2; k <= m; k += 2) {
    const double boundary = lower_inf ? 0.0 : 0.5 * std::pow(t, k - 1) * std::exp(-t * t);
    g = boundary + 0.5 * (k - 1) * g;
  }
  return g;
}

TailMomentMatrix gaussian_tail_moment_matrix(int n, double t) {
  check_order(n);
  if (std::isnan(t)) throw std::domain_error("gaussian_tail_moment_matrix: t must not be NaN");
  TailMomentMatrix out;
  out.n = n;
  out.t = t;
  out.entries.resize(n, n);
  std::vector<double> g(2 * n - 1);
  for (int m = 0; m < 2 * n - 1; ++m) g[m] = gaussian_tail_moment(m, t);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) out.entries(j, k) = g[j + k];
  return out;
}

}  // namespace polyberg::specfun
