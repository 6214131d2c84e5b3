#pragma once

#include <Eigen/Dense>

namespace polyberg::specfun {

// Largest matrix truncation order supported anywhere in the library.
inline constexpr int kMaxN = 12;

// Throws std::domain_error unless 1 <= n <= kMaxN.
void check_order(int n);

// Orthonormal Hermite functions h_0(y) .. h_{n-1}(y).
// h_0(y) = pi^{-1/4} exp(-y^2/2), and the normalized three-term recurrence
//   h_{m+1}(y) = sqrt(2/(m+1)) y h_m(y) - sqrt(m/(m+1)) h_{m-1}(y).
Eigen::VectorXd hermite_vector(int n, double y);

// Laguerre functions ell_0(y) .. ell_{n-1}(y) on [0, inf),
//   ell_m(y) = (-1)^m L_m(y) exp(-y/2)
// with L_m the classical Laguerre polynomials.  Orthonormal in L^2(0, inf).
Eigen::VectorXd laguerre_vector(int n, double y);

// Lower-triangular C with h_k(s) = exp(-s^2/2) * sum_m C(k,m) s^m.
Eigen::MatrixXd hermite_coeff_matrix(int n);

// G_m(t) = int_t^inf s^m exp(-s^2) ds, by the recurrence
//   G_0(t) = sqrt(pi)/2 * erfc(t),  G_1(t) = exp(-t^2)/2,
//   G_m(t) = t^{m-1} exp(-t^2)/2 + (m-1)/2 * G_{m-2}(t).
// t may be -inf (full Gaussian moments) or +inf (zero).
double gaussian_tail_moment(int m, double t);

struct TailMomentMatrix {
  int n = 0;
  double t = 0.0;  // +-inf allowed
  Eigen::MatrixXd entries;  // entries(j,k) = G_{j+k}(t), 0-based j,k
};

// Hankel matrix of tail moments; symmetric positive semidefinite for every t.
TailMomentMatrix gaussian_tail_moment_matrix(int n, double t);

}  // namespace polyberg::specfun
