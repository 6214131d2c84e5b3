#pragma once

#include <functional>
#include <span>
#include <vector>

namespace polyberg::quad {

enum class RuleKind { GaussHermiteLike, GaussLaguerreLike, AdaptiveComposite };

enum class Family {
  GaussianLine,         // weight exp(-s^2) on R, truncated to [-smax, smax]
  ExponentialHalfLine,  // weight exp(-y) on [0, inf), truncated to [0, 2*smax^2]
  Interval,             // explicit finite [lo, hi]
};

struct RuleSpec {
  Family family = Family::Interval;
  int nodes = 200;    // target node count, >= 8
  double smax = 8.0;  // Gaussian truncation half-width
  double lo = 0.0;    // Interval family only
  double hi = 0.0;
  std::vector<double> breakpoints;    // forced subdivision points
  std::vector<double> grade_centers;  // dyadic panel refinement around these
  bool smooth = true;                 // integrand smooth between breakpoints
};

struct QuadratureRule {
  RuleKind kind = RuleKind::AdaptiveComposite;
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // all positive
  double truncation = 0.0;      // the governing smax
  double lo = 0.0;              // truncated domain actually covered
  double hi = 0.0;
  std::vector<double> breakpoints;  // the ones honored as panel boundaries
  bool ignored_breakpoint = false;  // some breakpoint fell outside [lo, hi]
};

// Composite Gauss-Legendre construction over the truncated domain.  Panel
// boundaries are the union of a uniform fill sized from `nodes`, every
// breakpoint inside the domain, and dyadic ladders around grade centers
// (toward 0 for the exponential family), so integrands with features on a
// much smaller scale than the domain are still resolved.
QuadratureRule build_quadrature(const RuleSpec& spec);

// sum_i w_i f(x_i)
double integrate(const QuadratureRule& rule, const std::function<double(double)>& f);

struct OracleResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  long evaluations = 0;
};

// Independent check integrator: adaptive composite Simpson, split at the
// breakpoints, infinite ends handled by octave expansion until an octave's
// contribution is negligible against tol.  Shares no code with
// build_quadrature on purpose.
OracleResult oracle_integrate(const std::function<double(double)>& f, double lo, double hi,
                              std::span<const double> breakpoints = {}, double tol = 1e-10);

}  // namespace polyberg::quad
