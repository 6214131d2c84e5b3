#include "polyberg/spectral.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "polyberg/errors.hpp"
#include "polyberg/quadrature.hpp"
#include "polyberg/specfun.hpp"

namespace polyberg::spectral {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using symbols::Symbol1D;
using symbols::Symbol2D;
using symbols::SymbolHalfLine;

std::vector<double> breakpoint_locations(const std::vector<symbols::Breakpoint>& bps) {
  std::vector<double> out;
  out.reserve(bps.size());
  for (const auto& bp : bps) out.push_back(bp.location);
  return out;
}

// One-sided values at 0, read off the breakpoint record when there is one.
void one_sided_at_zero(const Symbol1D& a, double& left, double& right) {
  left = right = a.eval(0.0);
  for (const auto& bp : a.breakpoints)
    if (bp.location == 0.0) {
      left = bp.left;
      right = bp.right;
    }
}

// phi_a's boundary formulas cover continuous symbols with at most kinks plus
// a single jump at the origin.
void check_phi_class(const Symbol1D& a) {
  int jumps = 0;
  for (const auto& bp : a.breakpoints) {
    if (!bp.is_jump()) continue;
    if (bp.location != 0.0)
      throw unsupported_class_error("phi_a: symbol jumps away from 0");
    if (++jumps > 1) throw unsupported_class_error("phi_a: symbol has several jumps");
  }
}

Eigen::MatrixXd scaled_identity(int n, double c) {
  return c * Eigen::MatrixXd::Identity(n, n);
}

}  // namespace

CompactPoint CompactPoint::interior(double t1, double t2) {
  if (!std::isfinite(t1) || !(t2 > 0.0) || !std::isfinite(t2))
    throw std::domain_error("interior point needs finite t1 and t2 in (0, inf)");
  return {Tag::Interior, t1, t2};
}

CompactPoint CompactPoint::left(double t2) {
  if (std::isnan(t2) || t2 < 0.0) throw std::domain_error("edge point needs t2 in [0, +inf]");
  return {Tag::Left, -kInf, t2};
}

CompactPoint CompactPoint::right(double t2) {
  if (std::isnan(t2) || t2 < 0.0) throw std::domain_error("edge point needs t2 in [0, +inf]");
  return {Tag::Right, kInf, t2};
}

CompactPoint CompactPoint::bottom(double t1) {
  if (std::isnan(t1)) throw std::domain_error("bottom point needs t1 in [-inf, +inf]");
  return {Tag::Bottom, t1, 0.0};
}

CompactPoint CompactPoint::top(double t1) {
  if (std::isnan(t1)) throw std::domain_error("top point needs t1 in [-inf, +inf]");
  return {Tag::Top, t1, kInf};
}

bool CompactPoint::is_corner() const {
  switch (tag) {
    case Tag::Bottom:
    case Tag::Top:
      return std::isinf(t1);
    case Tag::Left:
    case Tag::Right:
      return t2 == 0.0 || std::isinf(t2);
    default:
      return false;
  }
}

CompactPoint CompactPoint::canonical() const {
  if (!is_corner()) return *this;
  switch (tag) {
    case Tag::Bottom:
      return t1 > 0 ? right(0.0) : left(0.0);
    case Tag::Top:
      return t1 > 0 ? right(kInf) : left(kInf);
    default:
      return *this;  // already a lateral edge point
  }
}

SpectralMatrix gamma_b(const SymbolHalfLine& b, int n, double x2, const QuadOptions& opt) {
  specfun::check_order(n);
  if (!(x2 > 0.0) || !std::isfinite(x2))
    throw std::domain_error("gamma_b: x2 must be in (0, inf); use gamma_b_boundary for the ends");
  quad::RuleSpec rs;
  rs.family = quad::Family::Interval;
  rs.nodes = opt.nodes;
  rs.smax = opt.smax;
  rs.lo = 0.0;
  rs.hi = 2.0 * opt.smax * opt.smax / (2.0 * x2);  // Laguerre envelope exp(-2 x2 y)
  rs.breakpoints = breakpoint_locations(b.breakpoints);
  rs.grade_centers = rs.breakpoints;
  rs.grade_centers.push_back(0.0);
  rs.smooth = b.smooth;
  const quad::QuadratureRule rule = quad::build_quadrature(rs);

  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double y = rule.nodes[i];
    const Eigen::VectorXd L = specfun::laguerre_vector(n, 2.0 * x2 * y);
    M.noalias() += (rule.weights[i] * b.eval(y)) * (L * L.transpose());
  }
  SpectralMatrix out;
  out.n = n;
  out.point = CompactPoint{CompactPoint::Tag::Interior, 0.0, x2};
  out.entries = 2.0 * x2 * M;
  out.provenance = SpectralMatrix::Provenance::Quadrature;
  return out;
}

SpectralMatrix gamma_b_boundary(const SymbolHalfLine& b, int n, BoundaryEnd end) {
  specfun::check_order(n);
  SpectralMatrix out;
  out.n = n;
  out.provenance = SpectralMatrix::Provenance::BoundaryFormula;
  if (end == BoundaryEnd::Zero) {
    // x2 -> 0: the Laguerre envelope pushes the symbol argument to +inf
    out.point = CompactPoint::bottom(0.0);
    out.entries = scaled_identity(n, b.limit_inf);
  } else {
    out.point = CompactPoint::top(0.0);
    out.entries = scaled_identity(n, b.limit_zero);
  }
  return out;
}

SpectralMatrix gamma_a_matrix(const Symbol1D& a, int n, double x1, double x2,
                              const QuadOptions& opt) {
  specfun::check_order(n);
  if (!std::isfinite(x1)) throw std::domain_error("gamma_a_matrix: x1 must be finite");
  if (!(x2 > 0.0) || !std::isfinite(x2)) throw std::domain_error("gamma_a_matrix: x2 must be in (0, inf)");
  const double scale = 2.0 * std::sqrt(x2);
  quad::RuleSpec rs;
  rs.family = quad::Family::Interval;
  rs.nodes = opt.nodes;
  rs.smax = opt.smax;
  rs.lo = (-opt.smax - x1) / scale;  // Hermite argument 2 sqrt(x2) y + x1 in [-smax, smax]
  rs.hi = (opt.smax - x1) / scale;
  rs.breakpoints = breakpoint_locations(a.breakpoints);
  rs.grade_centers = rs.breakpoints;
  rs.grade_centers.push_back(0.0);
  rs.smooth = a.smooth;
  const quad::QuadratureRule rule = quad::build_quadrature(rs);

  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double y = rule.nodes[i];
    const Eigen::VectorXd H = specfun::hermite_vector(n, scale * y + x1);
    M.noalias() += (rule.weights[i] * a.eval(y)) * (H * H.transpose());
  }
  SpectralMatrix out;
  out.n = n;
  out.point = CompactPoint{CompactPoint::Tag::Interior, x1, x2};
  out.entries = scale * M;
  out.provenance = SpectralMatrix::Provenance::Quadrature;
  return out;
}

double gamma_a_scalar(const Symbol1D& a, double x1, double x2, const QuadOptions& opt) {
  return gamma_a_matrix(a, 1, x1, x2, opt).entries(0, 0);
}

SpectralMatrix gamma_c(const Symbol2D& c, int n, double x1, double x2, SpaceCase space,
                       const QuadOptions& opt) {
  specfun::check_order(n);
  if (!std::isfinite(x1)) throw std::domain_error("gamma_c: x1 must be finite");
  if (!(x2 > 0.0) || !std::isfinite(x2)) throw std::domain_error("gamma_c: x2 must be in (0, inf)");

  SpectralMatrix out;
  out.n = n;
  out.point = CompactPoint{CompactPoint::Tag::Interior, x1, x2};
  out.provenance = SpectralMatrix::Provenance::Quadrature;

  if (c.factors) {
    const Symbol1D& a = c.factors->first;
    const SymbolHalfLine& b = c.factors->second;
    if (space == SpaceCase::OneN) {
      out.entries = gamma_a_scalar(a, x1, x2, opt) * gamma_b(b, n, x2, opt).entries;
    } else {
      out.entries = gamma_b(b, 1, x2, opt).entries(0, 0) * gamma_a_matrix(a, n, x1, x2, opt).entries;
    }
    return out;
  }

  // tensor-product quadrature in the symbol's own variables
  const double scale = 2.0 * std::sqrt(x2);
  quad::RuleSpec ru;
  ru.family = quad::Family::Interval;
  ru.nodes = opt.nodes;
  ru.smax = opt.smax;
  ru.lo = (-opt.smax - x1) / scale;
  ru.hi = (opt.smax - x1) / scale;
  ru.grade_centers = {0.0};
  const quad::QuadratureRule rule_u = quad::build_quadrature(ru);

  quad::RuleSpec rv;
  rv.family = quad::Family::Interval;
  rv.nodes = opt.nodes;
  rv.smax = opt.smax;
  rv.lo = 0.0;
  rv.hi = 2.0 * opt.smax * opt.smax / (2.0 * x2);
  rv.grade_centers = {0.0};
  const quad::QuadratureRule rule_v = quad::build_quadrature(rv);

  const int hermite_n = space == SpaceCase::NOne ? n : 1;
  const int laguerre_n = space == SpaceCase::OneN ? n : 1;
  std::vector<Eigen::VectorXd> lag(rule_v.nodes.size());
  for (size_t q = 0; q < rule_v.nodes.size(); ++q)
    lag[q] = specfun::laguerre_vector(laguerre_n, 2.0 * x2 * rule_v.nodes[q]);

  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (size_t p = 0; p < rule_u.nodes.size(); ++p) {
    const double u = rule_u.nodes[p];
    const Eigen::VectorXd H = specfun::hermite_vector(hermite_n, scale * u + x1);
    if (space == SpaceCase::OneN) {
      const double hfac = rule_u.weights[p] * H(0) * H(0);
      for (size_t q = 0; q < rule_v.nodes.size(); ++q) {
        const Eigen::VectorXd& L = lag[q];
        M.noalias() += (hfac * rule_v.weights[q] * c.eval(u, rule_v.nodes[q])) * (L * L.transpose());
      }
    } else {
      double inner = 0.0;
      for (size_t q = 0; q < rule_v.nodes.size(); ++q)
        inner += rule_v.weights[q] * c.eval(u, rule_v.nodes[q]) * lag[q](0) * lag[q](0);
      M.noalias() += (rule_u.weights[p] * inner) * (H * H.transpose());
    }
  }
  out.entries = scale * 2.0 * x2 * M;
  return out;
}

std::pair<double, double> phi_map(double x1, double x2) {
  if (std::isnan(x1) || std::isnan(x2) || x2 < 0.0)
    throw std::domain_error("phi_map: need x2 >= 0");
  return {x1, x2 / (x1 * x1 + 1.0)};
}

std::pair<double, double> phi_inverse(double t1, double t2) {
  if (std::isnan(t1) || std::isnan(t2) || t2 < 0.0)
    throw std::domain_error("phi_inverse: need t2 >= 0");
  return {t1, (t1 * t1 + 1.0) * t2};
}

SpectralMatrix phi_plus(int n, double t) {
  specfun::check_order(n);
  if (std::isnan(t)) throw std::domain_error("phi_plus: t must not be NaN");
  SpectralMatrix out;
  out.n = n;
  out.point = CompactPoint::bottom(t);
  out.provenance = SpectralMatrix::Provenance::ClosedForm;
  if (std::isinf(t)) {
    if (t < 0)
      out.entries = Eigen::MatrixXd::Identity(n, n);
    else
      out.entries = Eigen::MatrixXd::Zero(n, n);
    return out;
  }
  const Eigen::MatrixXd C = specfun::hermite_coeff_matrix(n);
  const Eigen::MatrixXd M = specfun::gaussian_tail_moment_matrix(n, t).entries;
  Eigen::MatrixXd P = C * M * C.transpose();
  out.entries = 0.5 * (P + P.transpose());  // exact symmetry
  return out;
}

SpectralMatrix phi_a(const Symbol1D& a, int n, const CompactPoint& p, const QuadOptions& opt) {
  specfun::check_order(n);
  check_phi_class(a);
  const CompactPoint cp = p.canonical();
  double a0_left, a0_right;
  one_sided_at_zero(a, a0_left, a0_right);

  SpectralMatrix out;
  out.n = n;
  out.point = cp;
  out.provenance = SpectralMatrix::Provenance::BoundaryFormula;
  switch (cp.tag) {
    case CompactPoint::Tag::Interior: {
      const auto [x1, x2] = phi_inverse(cp.t1, cp.t2);
      out = gamma_a_matrix(a, n, x1, x2, opt);
      out.point = cp;
      return out;
    }
    case CompactPoint::Tag::Bottom: {
      const Eigen::MatrixXd P = phi_plus(n, cp.t1).entries;
      out.entries = a.limit_neg_inf * (Eigen::MatrixXd::Identity(n, n) - P) + a.limit_pos_inf * P;
      return out;
    }
    case CompactPoint::Tag::Top: {
      const Eigen::MatrixXd P = phi_plus(n, cp.t1).entries;
      out.entries = scaled_identity(n, a0_left) + (a0_right - a0_left) * P;
      return out;
    }
    case CompactPoint::Tag::Right: {
      if (cp.t2 == 0.0) out.entries = scaled_identity(n, a.limit_neg_inf);
      else if (std::isinf(cp.t2)) out.entries = scaled_identity(n, a0_left);
      else out.entries = scaled_identity(n, a.eval(-0.5 / std::sqrt(cp.t2)));
      return out;
    }
    case CompactPoint::Tag::Left: {
      if (cp.t2 == 0.0) out.entries = scaled_identity(n, a.limit_pos_inf);
      else if (std::isinf(cp.t2)) out.entries = scaled_identity(n, a0_right);
      else out.entries = scaled_identity(n, a.eval(0.5 / std::sqrt(cp.t2)));
      return out;
    }
  }
  throw std::logic_error("phi_a: unreachable");
}

}  // namespace polyberg::spectral
