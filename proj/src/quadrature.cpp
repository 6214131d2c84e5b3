#include "polyberg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace polyberg::quad {

namespace {

constexpr double kPi = std::numbers::pi;

// p-point Gauss-Legendre on [-1, 1], Newton on the Legendre recurrence.
void gauss_legendre(int p, std::vector<double>& x, std::vector<double>& w) {
  x.assign(p, 0.0);
  w.assign(p, 0.0);
  const int half = (p + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (p + 0.5));
    double deriv = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < p; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      deriv = p * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / deriv;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[p - 1 - i] = z;
    w[i] = w[p - 1 - i] = 2.0 / ((1.0 - z * z) * deriv * deriv);
  }
}

}  // namespace

QuadratureRule build_quadrature(const RuleSpec& spec) {
  if (spec.nodes < 8) throw std::domain_error("build_quadrature: node count must be >= 8");
  double lo, hi;
  switch (spec.family) {
    case Family::GaussianLine:
      if (!(spec.smax > 0.0)) throw std::domain_error("build_quadrature: smax must be positive");
      lo = -spec.smax;
      hi = spec.smax;
      break;
    case Family::ExponentialHalfLine:
      if (!(spec.smax > 0.0)) throw std::domain_error("build_quadrature: smax must be positive");
      lo = 0.0;
      hi = 2.0 * spec.smax * spec.smax;
      break;
    case Family::Interval:
      lo = spec.lo;
      hi = spec.hi;
      if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
        throw std::domain_error("build_quadrature: interval must be finite with lo < hi");
      break;
    default:
      throw std::domain_error("build_quadrature: bad family");
  }

  const double width = hi - lo;
  const int order = std::min(16, spec.nodes);
  std::vector<double> bounds = {lo, hi};

  // uniform fill sized from the node target
  const int base_panels = std::max(1, (spec.nodes + order - 1) / order);
  for (int i = 1; i < base_panels; ++i) bounds.push_back(lo + width * i / base_panels);

  QuadratureRule rule;
  for (double bp : spec.breakpoints) {
    if (bp > lo && bp < hi) {
      bounds.push_back(bp);
      rule.breakpoints.push_back(bp);
    } else if (bp < lo || bp > hi) {
      rule.ignored_breakpoint = true;
    }
  }

  // dyadic ladders: resolve features that live on a much smaller scale than
  // the domain (the measures here mix a unit-scale symbol with Hermite or
  // Laguerre envelopes whose scale is set by x2)
  auto ladder = [&](double center) {
    for (int k = -6;; ++k) {
      const double step = std::ldexp(1.0, k);
      if (step > width) break;
      for (double s : {center - step, center + step})
        if (s > lo && s < hi) bounds.push_back(s);
    }
  };
  for (double g : spec.grade_centers)
    if (g >= lo && g <= hi) ladder(g);
  if (spec.family == Family::ExponentialHalfLine) {
    const int depth = std::min(40, int(std::ceil(std::log2(std::max(hi, 2.0)))) + 6);
    for (int k = 1; k <= depth; ++k) bounds.push_back(hi * std::ldexp(1.0, -k));
  }

  std::sort(bounds.begin(), bounds.end());
  const double merge_eps = width * 1e-12;
  std::vector<double> panels;
  panels.push_back(lo);
  for (double b : bounds)
    if (b - panels.back() > merge_eps && hi - b > merge_eps) panels.push_back(b);
  panels.push_back(hi);

  std::vector<double> gx, gw;
  gauss_legendre(order, gx, gw);
  for (size_t i = 0; i + 1 < panels.size(); ++i) {
    const double a = panels[i], b = panels[i + 1];
    const double mid = 0.5 * (a + b), rad = 0.5 * (b - a);
    for (int q = 0; q < order; ++q) {
      rule.nodes.push_back(mid + rad * gx[q]);
      rule.weights.push_back(rad * gw[q]);
    }
  }

  const bool plain = spec.smooth && rule.breakpoints.empty() && spec.grade_centers.empty();
  if (spec.family == Family::GaussianLine && plain)
    rule.kind = RuleKind::GaussHermiteLike;
  else if (spec.family == Family::ExponentialHalfLine && spec.smooth && rule.breakpoints.empty())
    rule.kind = RuleKind::GaussLaguerreLike;
  else
    rule.kind = RuleKind::AdaptiveComposite;
  rule.truncation = spec.smax;
  rule.lo = lo;
  rule.hi = hi;
  return rule;
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f) {
  double acc = 0.0, comp = 0.0;  // Kahan
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double term = rule.weights[i] * f(rule.nodes[i]) - comp;
    const double next = acc + term;
    comp = (next - acc) - term;
    acc = next;
  }
  return acc;
}

namespace {

struct SimpsonState {
  const std::function<double(double)>* f = nullptr;
  long evals = 0;
  long budget = 4'000'000;
  bool exhausted = false;

  double eval(double x) {
    ++evals;
    if (evals > budget) exhausted = true;
    return (*f)(x);
  }
};

// classic adaptive Simpson with the 1/15 correction
double adapt(SimpsonState& st, double a, double fa, double b, double fb, double m, double fm,
             double whole, double tol, int depth, double& err) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = st.eval(lm), frm = st.eval(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fb + 4.0 * frm + fm);
  const double delta = left + right - whole;
  if (depth <= 0 || st.exhausted || std::abs(delta) <= 15.0 * tol) {
    if (depth <= 0 || st.exhausted) err += std::abs(delta);
    else err += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  double e1 = 0.0, e2 = 0.0;
  const double v = adapt(st, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1, e1) +
                   adapt(st, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1, e2);
  err += e1 + e2;
  return v;
}

double segment(SimpsonState& st, double a, double b, double tol, double& err) {
  const double m = 0.5 * (a + b);
  const double fa = st.eval(a), fb = st.eval(b), fm = st.eval(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adapt(st, a, fa, b, fb, m, fm, whole, tol, 48, err);
}

}  // namespace

OracleResult oracle_integrate(const std::function<double(double)>& f, double lo, double hi,
                              std::span<const double> breakpoints, double tol) {
  if (std::isnan(lo) || std::isnan(hi) || !(lo < hi))
    throw std::domain_error("oracle_integrate: need lo < hi");
  if (!(tol > 0.0)) throw std::domain_error("oracle_integrate: tol must be positive");

  SimpsonState st;
  st.f = &f;
  OracleResult out;

  std::vector<double> cuts;
  for (double bp : breakpoints)
    if (bp > lo && bp < hi && std::isfinite(bp)) cuts.push_back(bp);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const double core_lo = std::isinf(lo) ? (cuts.empty() ? std::min(-1.0, std::isinf(hi) ? -1.0 : hi - 1.0) : cuts.front() - 1.0) : lo;
  const double core_hi = std::isinf(hi) ? (cuts.empty() ? std::max(1.0, std::isinf(lo) ? 1.0 : lo + 1.0) : cuts.back() + 1.0) : hi;

  std::vector<double> pts;
  pts.push_back(core_lo);
  for (double c : cuts) pts.push_back(c);
  pts.push_back(core_hi);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  double value = 0.0, err = 0.0;
  const double seg_tol = tol / std::max<size_t>(1, pts.size());
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    if (pts[i] < pts[i + 1]) value += segment(st, pts[i], pts[i + 1], seg_tol, err);

  // octave expansion over the infinite tails until contributions fade
  bool tails_ok = true;
  auto tail = [&](int dir) {  // dir = +1 expands past core_hi, -1 below core_lo
    const double base = dir > 0 ? core_hi : core_lo;
    int calm = 0;
    for (int k = 0; k < 60 && calm < 2; ++k) {
      const double a = base + dir * (std::ldexp(1.0, k) - 1.0);
      const double b = base + dir * (std::ldexp(1.0, k + 1) - 1.0);
      double e = 0.0;
      const double c = dir > 0 ? segment(st, a, b, tol / 16.0, e)
                               : segment(st, b, a, tol / 16.0, e);
      value += c;
      err += e;
      if (std::abs(c) < tol / 16.0) ++calm;
      else calm = 0;
      if (st.exhausted) break;
    }
    if (calm < 2) tails_ok = false;
  };
  if (std::isinf(hi)) tail(+1);
  if (std::isinf(lo)) tail(-1);

  out.value = value;
  out.error_estimate = err;
  out.evaluations = st.evals;
  out.converged = !st.exhausted && tails_ok && err <= 8.0 * tol;
  return out;
}

}  // namespace polyberg::quad
