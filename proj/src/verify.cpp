#include "polyberg/verify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <variant>
#include <vector>

#include "polyberg/algebra.hpp"
#include "polyberg/quadrature.hpp"
#include "polyberg/specfun.hpp"
#include "polyberg/spectral.hpp"
#include "polyberg/symbols.hpp"

namespace polyberg::verify {

bool SuiteReport::verdict() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kInf = std::numeric_limits<double>::infinity();

double max_abs(const MatrixXd& A) { return A.cwiseAbs().maxCoeff(); }

double op_norm_sym(const MatrixXd& A) {
  return algebra::eigendecompose_spd(A).values.cwiseAbs().maxCoeff();
}

std::vector<double> linspace(double a, double b, int count) {
  std::vector<double> out(count);
  const double step = (b - a) / (count - 1);
  for (int i = 0; i < count; ++i) out[i] = a + i * step;
  out.front() = a;
  out.back() = b;
  return out;
}

struct Outcome {
  double err = 0.0;
  double tol = 0.0;
};

void run_check(SuiteReport& rep, double tol_scale, const std::string& name,
               const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  const Outcome o = body();
  const double dt =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CheckResult r;
  r.name = name;
  r.max_error = o.err;
  r.tolerance = o.tol * tol_scale;
  r.pass = o.err <= r.tolerance;
  r.runtime_s = dt;
  rep.checks.push_back(r);
}

std::vector<symbols::Symbol1D> line_catalog() {
  std::vector<symbols::Symbol1D> out;
  const std::array<double, 1> c70 = {0.7};
  const std::array<double, 2> tri = {1.0, 0.0};
  out.push_back(std::get<symbols::Symbol1D>(symbols::catalog("const", c70)));
  out.push_back(std::get<symbols::Symbol1D>(symbols::catalog("chi_plus")));
  out.push_back(std::get<symbols::Symbol1D>(symbols::catalog("chi_minus")));
  out.push_back(std::get<symbols::Symbol1D>(symbols::catalog("sigmoid")));
  out.push_back(std::get<symbols::Symbol1D>(symbols::catalog("witch")));
  out.push_back(std::get<symbols::Symbol1D>(symbols::catalog("abs_witch")));
  out.push_back(std::get<symbols::Symbol1D>(symbols::catalog("triangle", tri)));
  return out;
}

MatrixXd gram_from_rule(const quad::QuadratureRule& rule, int n,
                        const std::function<VectorXd(double)>& basis) {
  MatrixXd G = MatrixXd::Zero(n, n);
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const VectorXd v = basis(rule.nodes[i]);
    G.noalias() += rule.weights[i] * v * v.transpose();
  }
  return G;
}

// ---------------------------------------------------------------------------
// specfun suite

SuiteReport suite_specfun(double ts) {
  SuiteReport rep;
  rep.suite = "specfun";

  run_check(rep, ts, "hermite-orthonormality", [] {
    const int n = 8;
    quad::RuleSpec spec;
    spec.family = quad::Family::GaussianLine;
    spec.nodes = 200;
    const auto rule = quad::build_quadrature(spec);
    const MatrixXd G =
        gram_from_rule(rule, n, [n](double s) { return specfun::hermite_vector(n, s); });
    return Outcome{max_abs(G - MatrixXd::Identity(n, n)), 1e-9};
  });

  run_check(rep, ts, "laguerre-orthonormality", [] {
    const int n = 8;
    quad::RuleSpec spec;
    spec.family = quad::Family::ExponentialHalfLine;
    spec.nodes = 200;
    const auto rule = quad::build_quadrature(spec);
    const MatrixXd G =
        gram_from_rule(rule, n, [n](double y) { return specfun::laguerre_vector(n, y); });
    return Outcome{max_abs(G - MatrixXd::Identity(n, n)), 1e-9};
  });

  run_check(rep, ts, "hermite-coefficient-identity", [] {
    const int n = 8;
    const MatrixXd C = specfun::hermite_coeff_matrix(n);
    std::mt19937 rng(20240811u);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const double s = dist(rng);
      const VectorXd h = specfun::hermite_vector(n, s);
      VectorXd powers(n);
      powers(0) = 1.0;
      for (int m = 1; m < n; ++m) powers(m) = powers(m - 1) * s;
      const VectorXd via = std::exp(-0.5 * s * s) * (C * powers);
      worst = std::max(worst, (via - h).cwiseAbs().maxCoeff());
    }
    return Outcome{worst, 1e-10};
  });

  // Recurrence vs. the independent integrator.  Literal tolerance where the
  // moment magnitudes leave room for it; the m > 12 moments reach 1e7 where
  // one ulp already exceeds 1e-9, so those are compared relative to scale.
  run_check(rep, ts, "tail-moment-oracle-low", [] {
    double worst = 0.0;
    for (double t : {-3.0, -1.0, 0.0, 1.0, 3.0})
      for (int m = 0; m <= 12; ++m) {
        const double g = specfun::gaussian_tail_moment(m, t);
        const auto f = [m](double s) { return std::pow(s, m) * std::exp(-s * s); };
        const auto res = quad::oracle_integrate(f, t, kInf, {}, 1e-11);
        if (!res.converged) return Outcome{1.0, 1e-9};
        worst = std::max(worst, std::abs(g - res.value));
      }
    return Outcome{worst, 1e-9};
  });

  run_check(rep, ts, "tail-moment-oracle-high", [] {
    double worst = 0.0;
    for (double t : {-3.0, -1.0, 0.0, 1.0, 3.0})
      for (int m = 13; m <= 22; ++m) {
        const double g = specfun::gaussian_tail_moment(m, t);
        const double scale = std::max(1.0, std::abs(g));
        const auto f = [m](double s) { return std::pow(s, m) * std::exp(-s * s); };
        const auto res = quad::oracle_integrate(f, t, kInf, {}, 1e-11 * scale);
        if (!res.converged) return Outcome{1.0, 1e-9};
        worst = std::max(worst, std::abs(g - res.value) / scale);
      }
    return Outcome{worst, 1e-9};
  });

  run_check(rep, ts, "tail-moment-psd", [] {
    double worst = 0.0;
    for (int n : {2, 4, 6})
      for (double t : {-4.0, -2.0, 0.0, 2.0, 4.0, -kInf, kInf}) {
        const auto M = specfun::gaussian_tail_moment_matrix(n, t);
        const double lo = algebra::eigendecompose_spd(M.entries).values.minCoeff();
        worst = std::max(worst, std::max(0.0, -lo));
      }
    return Outcome{worst, 1e-10};
  });

  // Beyond n = 8 the Hankel matrices are numerically singular with entries up
  // to 1e7; the floor is necessarily relative to the matrix scale there.
  run_check(rep, ts, "tail-moment-psd-large", [] {
    double worst = 0.0;
    for (int n : {8, 12})
      for (double t : {-4.0, -1.0, 0.0, 1.0, 4.0, -kInf}) {
        const auto M = specfun::gaussian_tail_moment_matrix(n, t);
        const double scale = std::max(1.0, max_abs(M.entries));
        const double lo = algebra::eigendecompose_spd(M.entries).values.minCoeff();
        worst = std::max(worst, std::max(0.0, -lo) / scale);
      }
    return Outcome{worst, 1e-10};
  });

  run_check(rep, ts, "gaussian-rule-moments", [] {
    quad::RuleSpec spec;
    spec.family = quad::Family::GaussianLine;
    spec.nodes = 200;
    const auto rule = quad::build_quadrature(spec);
    const double rootpi = std::sqrt(std::acos(-1.0));
    double worst = 0.0;
    worst = std::max(worst, std::abs(quad::integrate(rule, [](double s) {
                       return std::exp(-s * s);
                     }) - rootpi));
    worst = std::max(worst, std::abs(quad::integrate(rule, [](double s) {
                       return s * s * std::exp(-s * s);
                     }) - rootpi / 2.0));
    worst = std::max(worst, std::abs(quad::integrate(rule, [](double s) {
                       return s * s * s * s * std::exp(-s * s);
                     }) - 3.0 * rootpi / 4.0));
    return Outcome{worst, 1e-12};
  });

  run_check(rep, ts, "exponential-rule-unit", [] {
    quad::RuleSpec spec;
    spec.family = quad::Family::ExponentialHalfLine;
    spec.nodes = 200;
    const auto rule = quad::build_quadrature(spec);
    const double v = quad::integrate(rule, [](double y) { return std::exp(-y); });
    return Outcome{std::abs(v - 1.0), 1e-12};
  });

  return rep;
}

// ---------------------------------------------------------------------------
// spectral suite

MatrixXd phi_plus_by_quadrature(int n, double t, double smax) {
  quad::RuleSpec spec;
  spec.family = quad::Family::Interval;
  spec.nodes = 200;
  spec.lo = t;
  spec.hi = smax;
  const auto rule = quad::build_quadrature(spec);
  return gram_from_rule(rule, n, [n](double s) { return specfun::hermite_vector(n, s); });
}

SuiteReport suite_spectral(double ts) {
  SuiteReport rep;
  rep.suite = "spectral";

  run_check(rep, ts, "phiplus-two-path", [] {
    double worst = 0.0;
    for (int n : {2, 4, 6})
      for (double t : linspace(-4.0, 4.0, 41)) {
        const MatrixXd closed = spectral::phi_plus(n, t).entries;
        worst = std::max(worst, max_abs(closed - phi_plus_by_quadrature(n, t, 8.0)));
      }
    return Outcome{worst, 1e-8};
  });

  run_check(rep, ts, "phiplus-erfc-anchor", [] {
    double worst = 0.0;
    for (double t : linspace(-5.0, 5.0, 101)) {
      const double v = spectral::phi_plus(1, t).entries(0, 0);
      worst = std::max(worst, std::abs(v - 0.5 * std::erfc(t)));
    }
    return Outcome{worst, 1e-10};
  });

  run_check(rep, ts, "phiplus-spectrum-range", [] {
    double worst = 0.0;
    for (int n = 2; n <= 6; ++n)
      for (double t : linspace(-4.0, 4.0, 21)) {
        const auto dec = algebra::eigendecompose_spd(spectral::phi_plus(n, t).entries);
        worst = std::max(worst, std::max(0.0, -dec.values.minCoeff()));
        worst = std::max(worst, std::max(0.0, dec.values.maxCoeff() - 1.0));
      }
    return Outcome{worst, 1e-10};
  });

  run_check(rep, ts, "phiplus-loewner", [] {
    double worst = 0.0;
    const auto grid = linspace(-4.0, 4.0, 21);
    for (int n : {2, 4, 6}) {
      for (size_t i = 0; i + 1 < grid.size(); ++i) {
        const MatrixXd diff = spectral::phi_plus(n, grid[i]).entries -
                              spectral::phi_plus(n, grid[i + 1]).entries;
        const double lo = algebra::eigendecompose_spd(diff).values.minCoeff();
        worst = std::max(worst, std::max(0.0, -lo));
      }
      const MatrixXd span = spectral::phi_plus(n, grid.front()).entries -
                            spectral::phi_plus(n, grid.back()).entries;
      const double lo = algebra::eigendecompose_spd(span).values.minCoeff();
      worst = std::max(worst, std::max(0.0, -lo));
    }
    return Outcome{worst, 1e-10};
  });

  // Interior samples walked toward each stratum must approach the stratum
  // value: errors strictly decreasing along the path, with a noise floor for
  // the symbols the formulas reproduce exactly.  Reported error counts the
  // failing paths.
  run_check(rep, ts, "phia-boundary-consistency", [] {
    const int n = 2;
    const double floor_err = 1e-6;
    struct Path {
      spectral::CompactPoint target;
      std::array<spectral::CompactPoint, 3> steps;
    };
    std::vector<Path> paths;
    for (double t1 : {-2.0, 0.0, 2.0}) {
      paths.push_back({spectral::CompactPoint::bottom(t1),
                       {spectral::CompactPoint::interior(t1, 1e-2),
                        spectral::CompactPoint::interior(t1, 1e-3),
                        spectral::CompactPoint::interior(t1, 1e-4)}});
      paths.push_back({spectral::CompactPoint::top(t1),
                       {spectral::CompactPoint::interior(t1, 1e2),
                        spectral::CompactPoint::interior(t1, 1e3),
                        spectral::CompactPoint::interior(t1, 1e4)}});
    }
    for (double t2 : {0.5, 2.0}) {
      paths.push_back({spectral::CompactPoint::right(t2),
                       {spectral::CompactPoint::interior(8.0, t2),
                        spectral::CompactPoint::interior(32.0, t2),
                        spectral::CompactPoint::interior(128.0, t2)}});
      paths.push_back({spectral::CompactPoint::left(t2),
                       {spectral::CompactPoint::interior(-8.0, t2),
                        spectral::CompactPoint::interior(-32.0, t2),
                        spectral::CompactPoint::interior(-128.0, t2)}});
    }
    int failing = 0;
    for (const auto& a : line_catalog()) {
      for (const auto& path : paths) {
        const MatrixXd target = spectral::phi_a(a, n, path.target).entries;
        std::array<double, 3> e{};
        for (int i = 0; i < 3; ++i)
          e[i] = max_abs(spectral::phi_a(a, n, path.steps[i]).entries - target);
        const bool under_floor = e[0] < floor_err && e[1] < floor_err && e[2] < floor_err;
        const bool decreasing = e[0] > e[1] && e[1] > e[2];
        if (!under_floor && !decreasing) ++failing;
      }
    }
    return Outcome{static_cast<double>(failing), 0.5};
  });

  run_check(rep, ts, "chiplus-flatness", [] {
    const auto chi = std::get<symbols::Symbol1D>(symbols::catalog("chi_plus"));
    double worst = 0.0;
    for (int n : {1, 3})
      for (double t1 : {-1.0, 0.0, 1.5})
        for (double t2 : {1e-2, 1.0, 1e2}) {
          const MatrixXd v =
              spectral::phi_a(chi, n, spectral::CompactPoint::interior(t1, t2)).entries;
          worst = std::max(worst, max_abs(v - spectral::phi_plus(n, t1).entries));
        }
    return Outcome{worst, 1e-9};
  });

  run_check(rep, ts, "corner-coherence", [] {
    const int n = 3;
    const MatrixXd I = MatrixXd::Identity(n, n);
    double worst = 0.0;
    for (const auto& a : line_catalog()) {
      const auto parts = symbols::pc_decompose(a);
      for (double sgn : {-1.0, 1.0}) {
        const double inf_t1 = sgn * kInf;
        const MatrixXd P = spectral::phi_plus(n, inf_t1).entries;
        const MatrixXd bottom_rep =
            a.limit_neg_inf * (I - P) + a.limit_pos_inf * P;
        worst = std::max(
            worst, max_abs(bottom_rep -
                           spectral::phi_a(a, n, spectral::CompactPoint::bottom(inf_t1))
                               .entries));
        const MatrixXd top_rep = parts.continuous(0.0) * I + parts.jump * P;
        worst = std::max(
            worst,
            max_abs(top_rep -
                    spectral::phi_a(a, n, spectral::CompactPoint::top(inf_t1)).entries));
      }
    }
    return Outcome{worst, 1e-10};
  });

  run_check(rep, ts, "gamma-a-norm-bound", [] {
    const int n = 3;
    double worst = 0.0;
    const std::array<std::pair<double, double>, 5> pts = {
        {{0.0, 1.0}, {1.0, 0.25}, {-2.0, 4.0}, {0.5, 25.0}, {3.0, 1e-2}}};
    for (const auto& a : line_catalog())
      for (const auto& [x1, x2] : pts) {
        const double norm = op_norm_sym(spectral::gamma_a_matrix(a, n, x1, x2).entries);
        worst = std::max(worst, std::max(0.0, norm - a.sup_bound));
      }
    return Outcome{worst, 1e-8};
  });

  return rep;
}

// ---------------------------------------------------------------------------
// algebra suite

SuiteReport suite_algebra(double ts) {
  SuiteReport rep;
  rep.suite = "algebra";

  run_check(rep, ts, "diagonalization-residual", [] {
    const int n = 6;
    const auto grid = linspace(-4.0, 4.0, 41);
    const auto table = algebra::eigencurves(n, grid);
    double worst = 0.0;
    for (double t : grid) {
      const int col = table.column_of(t);
      const MatrixXd& B = table.diagonalizers[col];
      const MatrixXd D = B.transpose() * spectral::phi_plus(n, t).entries * B;
      MatrixXd target = table.lambdas.col(col).asDiagonal();
      worst = std::max(worst, max_abs(D - target));
    }
    return Outcome{worst, 1e-9};
  });

  run_check(rep, ts, "eigencurve-monotonicity", [] {
    const int n = 6;
    const auto table = algebra::eigencurves(n, linspace(-4.0, 4.0, 41));
    double worst = 0.0;
    const int cols = static_cast<int>(table.grid.size());
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k + 1 < cols; ++k)
        worst = std::max(worst, table.lambdas(j, k + 1) - table.lambdas(j, k));
      worst = std::max(worst, std::abs(table.lambdas(j, 0) - 1.0));
      worst = std::max(worst, std::abs(table.lambdas(j, cols - 1)));
    }
    return Outcome{std::max(worst, 0.0), 1e-9};
  });

  run_check(rep, ts, "pencil-equivalence", [] {
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n)
      for (double t : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
        const auto dec = algebra::eigendecompose_spd(spectral::phi_plus(n, t).entries);
        const std::vector<double> cand(dec.values.data(), dec.values.data() + n);
        const auto repn = algebra::generalized_eigen_check(n, t, cand);
        worst = std::max(worst, std::max(repn.det_residual, repn.spectrum_mismatch));
      }
    return Outcome{worst, 1e-9};
  });

  run_check(rep, ts, "approx-identity-order", [] {
    const int n = 3;
    const double x1 = 0.0, x2 = 0.25;
    const double scale = 2.0 * std::sqrt(x2);
    double min_slope = kInf;
    for (double r : {0.0, 1.0}) {
      const MatrixXd limit = algebra::approx_identity_limit(n, x1, x2, r).entries;
      std::vector<double> errs;
      for (double alpha : {0.04, 0.02, 0.01}) {
        const std::array<double, 2> params = {alpha / scale, r};
        const auto tent = std::get<symbols::Symbol1D>(symbols::catalog("triangle", params));
        errs.push_back(max_abs(spectral::gamma_a_matrix(tent, n, x1, x2).entries - limit));
      }
      // least-squares slope of log err against log alpha
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      const std::array<double, 3> alphas = {0.04, 0.02, 0.01};
      for (int i = 0; i < 3; ++i) {
        const double lx = std::log(alphas[i]), ly = std::log(errs[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
      }
      const double slope = (3.0 * sxy - sx * sy) / (3.0 * sxx - sx * sx);
      min_slope = std::min(min_slope, slope);
    }
    return Outcome{std::max(0.0, 1.8 - min_slope), 1e-9};
  });

  run_check(rep, ts, "approx-identity-final-error", [] {
    const int n = 3;
    const double x1 = 0.0, x2 = 0.25;
    const double scale = 2.0 * std::sqrt(x2);
    double worst = 0.0;
    for (double r : {0.0, 1.0}) {
      const MatrixXd limit = algebra::approx_identity_limit(n, x1, x2, r).entries;
      const std::array<double, 2> params = {0.01 / scale, r};
      const auto tent = std::get<symbols::Symbol1D>(symbols::catalog("triangle", params));
      worst = std::max(worst,
                       max_abs(spectral::gamma_a_matrix(tent, n, x1, x2).entries - limit));
    }
    return Outcome{worst, 1e-3};
  });

  run_check(rep, ts, "bottom-fiber-affine", [] {
    const int n = 4;
    const auto grid = linspace(-3.0, 3.0, 13);
    const auto table = algebra::eigencurves(n, grid);
    double worst = 0.0;
    for (const auto& a : line_catalog()) {
      for (double t : grid) {
        const int col = table.column_of(t);
        const MatrixXd M =
            spectral::phi_a(a, n, spectral::CompactPoint::bottom(t)).entries;
        for (int j = 0; j < n; ++j) {
          const VectorXd v = table.diagonalizers[col].col(j);
          const double f = v.dot(M * v);
          const double lam = table.lambdas(j, col);
          const double affine =
              a.limit_neg_inf + (a.limit_pos_inf - a.limit_neg_inf) * lam;
          worst = std::max(worst, std::abs(f - affine));
        }
      }
    }
    return Outcome{worst, 1e-8};
  });

  // Lattice draws keep distinct points separated by at least 1/16 in some
  // coordinate, so the exponent coefficients cannot collapse below threshold
  // by rounding.  Reported error counts the wrong verdicts.
  run_check(rep, ts, "separation-soundness", [] {
    std::mt19937 rng(777u);
    std::uniform_int_distribution<int> i1(0, 96);  // x1 = -3 + k/16
    std::uniform_int_distribution<int> i2(1, 80);  // x2 = k/16
    const auto draw = [&] {
      return std::pair<double, double>{-3.0 + i1(rng) / 16.0, i2(rng) / 16.0};
    };
    int wrong = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const auto p = draw();
      if (algebra::separation_exponent(p, p).separable) ++wrong;
    }
    for (int trial = 0; trial < 1000; ++trial) {
      auto p = draw(), q = draw();
      while (p == q) q = draw();
      if (!algebra::separation_exponent(p, q).separable) ++wrong;
    }
    return Outcome{static_cast<double>(wrong), 0.5};
  });

  run_check(rep, ts, "pure-state-norm-bound", [] {
    const int n = 3;
    const auto table = algebra::eigencurves(n, linspace(-2.0, 2.0, 9));
    std::mt19937 rng(4242u);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const auto random_unit = [&] {
      Eigen::VectorXcd v(n);
      for (int i = 0; i < n; ++i) v(i) = std::complex<double>(gauss(rng), gauss(rng));
      return Eigen::VectorXcd(v / v.norm());
    };
    std::vector<algebra::PureState> states;
    for (const auto& [t1, t2] :
         std::array<std::pair<double, double>, 3>{{{0.0, 1.0}, {-1.5, 0.3}, {2.0, 10.0}}}) {
      states.push_back(algebra::PureState::interior(
          spectral::CompactPoint::interior(t1, t2), random_unit()));
      states.push_back(algebra::PureState::interior(
          spectral::CompactPoint::interior(t1, t2), random_unit()));
    }
    for (auto side : {spectral::CompactPoint::Tag::Left, spectral::CompactPoint::Tag::Right})
      for (double t2 : {0.0, 1.0, kInf})
        states.push_back(algebra::PureState::edge(side, t2));
    for (auto stratum :
         {spectral::CompactPoint::Tag::Bottom, spectral::CompactPoint::Tag::Top})
      for (double t1 : {-1.0, 0.5})
        for (int j = 1; j <= n; ++j)
          states.push_back(algebra::PureState::fiber(stratum, t1, j));
    double worst = 0.0;
    for (const auto& a : line_catalog())
      for (const auto& st : states) {
        const double v = algebra::pure_state_eval(a, st, n, &table);
        worst = std::max(worst, std::max(0.0, std::abs(v) - a.sup_bound));
      }
    return Outcome{worst, 1e-8};
  });

  return rep;
}

}  // namespace

SuiteReport run_suite(const std::string& name, double tol_scale) {
  if (tol_scale <= 0.0) throw std::domain_error("run_suite: tol_scale must be positive");
  if (name == "specfun") return suite_specfun(tol_scale);
  if (name == "spectral") return suite_spectral(tol_scale);
  if (name == "algebra") return suite_algebra(tol_scale);
  throw std::domain_error("run_suite: unknown suite '" + name + "'");
}

std::vector<SuiteReport> run_all(double tol_scale) {
  return {run_suite("specfun", tol_scale), run_suite("spectral", tol_scale),
          run_suite("algebra", tol_scale)};
}

}  // namespace polyberg::verify
