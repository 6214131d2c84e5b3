#pragma once

#include <Eigen/Dense>
#include <utility>

#include "polyberg/symbols.hpp"

namespace polyberg::spectral {

struct QuadOptions {
  int nodes = 200;
  double smax = 8.0;
};

// Point of the compactified strip [-inf, +inf] x [0, +inf].  The four corners
// are owned by the lateral edges: canonical() maps bottom(+-inf) and
// top(+-inf) onto right/left at t2 = 0 resp. t2 = +inf.
struct CompactPoint {
  enum class Tag { Interior, Left, Right, Bottom, Top };
  Tag tag = Tag::Interior;
  double t1 = 0.0;  // Interior / Bottom / Top ( +-inf allowed on Bottom/Top )
  double t2 = 0.0;  // Interior / Left / Right ( 0 and +inf allowed on edges )

  static CompactPoint interior(double t1, double t2);  // t1 finite, t2 in (0, inf)
  static CompactPoint left(double t2);                 // t2 in [0, +inf]
  static CompactPoint right(double t2);
  static CompactPoint bottom(double t1);               // t1 in [-inf, +inf]
  static CompactPoint top(double t1);

  bool is_corner() const;
  CompactPoint canonical() const;
};

struct SpectralMatrix {
  enum class Provenance { Quadrature, ClosedForm, BoundaryFormula };
  int n = 0;
  CompactPoint point;
  Eigen::MatrixXd entries;  // n x n, symmetric
  Provenance provenance = Provenance::Quadrature;
};

enum class BoundaryEnd { Zero, Infinity };

// Matrix function of a vertical Toeplitz symbol b on the half-line:
//   entries(j,k) = 2 x2 int_0^inf b(y) ell_j(2 x2 y) ell_k(2 x2 y) dy.
// Constant along horizontal lines, so only x2 enters.  x2 <= 0 is refused;
// use gamma_b_boundary for the ends.
SpectralMatrix gamma_b(const symbols::SymbolHalfLine& b, int n, double x2,
                       const QuadOptions& opt = {});

// Limit values: b(inf) * I at x2 -> 0, b(0+) * I at x2 -> inf.
SpectralMatrix gamma_b_boundary(const symbols::SymbolHalfLine& b, int n, BoundaryEnd end);

// Scalar field of a horizontal symbol a on the space where the first factor
// is one-dimensional:
//   2 sqrt(x2) int a(y) h_0(2 sqrt(x2) y + x1)^2 dy,
// integrated in the symbol's own variable, split at its breakpoints.
double gamma_a_scalar(const symbols::Symbol1D& a, double x1, double x2,
                      const QuadOptions& opt = {});

// Matrix version on the opposite space:
//   entries(j,k) = 2 sqrt(x2) int a(y) h_j(2 sqrt(x2) y + x1) h_k(...) dy.
SpectralMatrix gamma_a_matrix(const symbols::Symbol1D& a, int n, double x1, double x2,
                              const QuadOptions& opt = {});

enum class SpaceCase { OneN, NOne };

// Two-variable symbol c(u, v), tensor-product quadrature with the same
// substitutions as gamma_a / gamma_b; a declared factorization short-circuits
// to the product of the one-variable evaluators.
SpectralMatrix gamma_c(const symbols::Symbol2D& c, int n, double x1, double x2,
                       SpaceCase space, const QuadOptions& opt = {});

// Strip coordinates: (x1, x2) |-> (x1, x2 / (x1^2 + 1)) and its inverse.
std::pair<double, double> phi_map(double x1, double x2);
std::pair<double, double> phi_inverse(double t1, double t2);

// phi^+(t) = C M_t C^T with C the Hermite coefficient matrix and M_t the
// tail-moment matrix; equals int_t^inf H(s) H(s)^T ds.  Exactly I at -inf
// and 0 at +inf.
SpectralMatrix phi_plus(int n, double t);

// Boundary extension of gamma_a_matrix through the strip coordinates: the
// interior value at (t1, t2) is gamma_a_matrix at (t1, (t1^2+1) t2), and the
// five strata carry their own closed formulas.  Symbols must be continuous
// up to a single jump at 0.
SpectralMatrix phi_a(const symbols::Symbol1D& a, int n, const CompactPoint& p,
                     const QuadOptions& opt = {});

}  // namespace polyberg::spectral
