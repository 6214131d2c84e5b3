#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polyberg/spectral.hpp"

namespace polyberg::algebra {

struct EigenDecomposition {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // orthogonal, column j belongs to values(j)
};

// Cyclic Jacobi for symmetric matrices (n <= kMaxN).  Deterministic: values
// ascending, each column's largest-magnitude entry made positive.
// Asymmetric input (beyond 1e-10) is refused.
EigenDecomposition eigendecompose_spd(const Eigen::MatrixXd& M);

struct EigencurveTable {
  int n = 0;
  std::vector<double> grid;  // -inf, finite points ascending, +inf
  Eigen::MatrixXd lambdas;   // n x grid.size()
  std::vector<Eigen::MatrixXd> diagonalizers;  // B(t), phi^+ = B diag B^T
  double continuity_defect = 0.0;  // max over adjacent columns of 1 - <b_j, b_j'>

  // Column index for t (exact match, +-inf included); -1 if absent.
  int column_of(double t) const;
};

// Eigenvalue curves of phi^+ along the grid, with the diagonalizers matched
// column to column by greedy overlap + sign so eigenvectors vary continuously.
// The +-inf columns are exactly all-ones / all-zeros.
EigencurveTable eigencurves(int n, std::span<const double> finite_grid);

struct PencilReport {
  double det_residual = 0.0;      // max over candidates of |det(l M_-inf - M_t)| / ||M_-inf||^n
  double spectrum_mismatch = 0.0; // candidates vs. generalized spectrum of (M_t, M_-inf)
};

// The eigenvalues of phi^+(t) and of the pencil (M_t, M_-inf) coincide;
// checks both directions for the supplied candidates.
PencilReport generalized_eigen_check(int n, double t, std::span<const double> candidates);

struct PureState {
  enum class Kind { Interior, Edge, Fiber };
  Kind kind = Kind::Interior;
  spectral::CompactPoint point;  // interior point / edge point / fiber stratum+t1
  Eigen::VectorXcd v;            // interior only, unit norm
  int fiber_index = 1;           // 1-based

  static PureState interior(const spectral::CompactPoint& p, const Eigen::VectorXcd& v);
  static PureState edge(spectral::CompactPoint::Tag side, double t2);   // Left or Right
  static PureState fiber(spectral::CompactPoint::Tag stratum, double t1, int j);  // Bottom or Top
};

using MatrixField = std::function<spectral::SpectralMatrix(const spectral::CompactPoint&)>;

// The field p |-> phi_a(a, n, p).
MatrixField phi_field(const symbols::Symbol1D& a, int n, spectral::QuadOptions opt = {});

// Value of a pure state on a matrix field: <M v, v> at interior points, the
// scalar at edge points (scalar * I demanded within 1e-8, else
// non_member_error), v_j^T M v_j on the bottom/top fibers with v_j taken from
// `curves` when supplied, else from a fresh phi^+ diagonalization.
double pure_state_eval(const MatrixField& M, const PureState& state, int n,
                       const EigencurveTable* curves = nullptr);
double pure_state_eval(const symbols::Symbol1D& a, const PureState& state, int n,
                       const EigencurveTable* curves = nullptr);

struct ConditionRecord {
  std::string name;
  bool pass = false;
  double max_violation = 0.0;
  double tolerance = 0.0;
  std::string witness;
};

struct MembershipReport {
  bool verdict = false;
  std::vector<ConditionRecord> conditions;
};

// Membership test for the x2-compactified algebra: samples (x2, M) over
// [0, +inf] including both ends; endpoint values must be scalar * I and
// adjacent samples must not jump.
MembershipReport membership_frakC(std::span<const std::pair<double, Eigen::MatrixXd>> samples,
                                  double tol, double continuity_bound = 0.5);

// Membership test for the boundary algebra over the compactified strip:
// lateral edge samples must be scalar * I, and on the bottom/top strata the
// fiber values f_j(t) = v_j(t)^T M v_j(t) must be single-valued as a function
// of lambda_j(t): any two pairs with |lambda - lambda'| <= delta_lambda must
// have |f - f'| <= tol_f + lipschitz * delta_lambda.
MembershipReport membership_T(std::span<const spectral::SpectralMatrix> samples,
                              const EigencurveTable& curves, double tol_f,
                              double delta_lambda = 1e-3, double lipschitz = 10.0);

// Limit of gamma_a_matrix over the tent family centered at r as the width
// goes to 0:  2 sqrt(x2) H(beta) H(beta)^T with beta = x1 + 2 sqrt(x2) r.
spectral::SpectralMatrix approx_identity_limit(int n, double x1, double x2, double r);

struct SeparationExponent {
  double c2 = 0.0, c1 = 0.0, c0 = 0.0;
  bool separable = false;  // some |c| > 1e-12
};

// Exponent polynomial c2 r^2 + c1 r + c0 comparing Gaussian pure states at
// strip points p = (x1, x2), q = (t1, t2):
//   c2 = 4 (x2 - t2), c1 = 4 (x1 sqrt(x2) - t1 sqrt(t2)), c0 = x1^2 - t1^2.
SeparationExponent separation_exponent(std::pair<double, double> p,
                                       std::pair<double, double> q);

// det [ H(y_1) ... H(y_n) ] with H the Hermite frame; pairwise-distinct
// inputs required.  Nonzero for distinct points (Hermite functions form a
// Chebyshev system).
double hermite_frame_det(std::span<const double> ys);

// Do the unit vectors v, w induce the same family of fiber states along
// beta(r) = x1 + 2 sqrt(x2) r?  True iff |<H(beta), v>| = |<H(beta), w>| at
// every grid r and the pair products conj(g(r1)) g(r2) agree, i.e. w = e^{i
// theta} v on the frame's span.
bool fiber_vector_test(int n, const Eigen::VectorXcd& v, const Eigen::VectorXcd& w,
                       double x1, double x2, std::span<const double> r_grid,
                       double tol = 1e-9);

}  // namespace polyberg::algebra
