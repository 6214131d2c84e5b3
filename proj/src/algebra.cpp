#include "polyberg/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "polyberg/errors.hpp"
#include "polyberg/specfun.hpp"

namespace polyberg::algebra {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using spectral::CompactPoint;
using spectral::SpectralMatrix;

double max_abs(const Eigen::MatrixXd& M) { return M.cwiseAbs().maxCoeff(); }

// deviation from scalar * I, measured entrywise; returns the scalar through s
double scalar_identity_deviation(const Eigen::MatrixXd& M, double& s) {
  const int n = int(M.rows());
  s = M.trace() / n;
  return max_abs(M - s * Eigen::MatrixXd::Identity(n, n));
}

std::string point_label(const CompactPoint& p) {
  std::ostringstream os;
  switch (p.tag) {
    case CompactPoint::Tag::Interior: os << "interior(" << p.t1 << ", " << p.t2 << ")"; break;
    case CompactPoint::Tag::Left: os << "left(" << p.t2 << ")"; break;
    case CompactPoint::Tag::Right: os << "right(" << p.t2 << ")"; break;
    case CompactPoint::Tag::Bottom: os << "bottom(" << p.t1 << ")"; break;
    case CompactPoint::Tag::Top: os << "top(" << p.t1 << ")"; break;
  }
  return os.str();
}

}  // namespace

EigenDecomposition eigendecompose_spd(const Eigen::MatrixXd& M) {
  const int n = int(M.rows());
  if (n < 1 || n > specfun::kMaxN || M.cols() != n)
    throw std::domain_error("eigendecompose_spd: matrix must be square with 1 <= n <= 12");
  const double scale = std::max(1.0, max_abs(M));
  if (max_abs(M - M.transpose()) > 1e-10 * scale)
    throw std::domain_error("eigendecompose_spd: matrix is not symmetric");

  Eigen::MatrixXd A = 0.5 * (M + M.transpose());
  Eigen::MatrixXd V = Eigen::MatrixXd::Identity(n, n);
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += A(p, q) * A(p, q);
    if (std::sqrt(off) <= 1e-15 * std::max(1.0, A.norm())) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (std::abs(apq) <= 1e-18 * scale) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double app = A(p, p), aqq = A(q, q);
        A(p, p) = app - t * apq;
        A(q, q) = aqq + t * apq;
        A(p, q) = A(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k != p && k != q) {
            const double akp = A(k, p), akq = A(k, q);
            A(k, p) = A(p, k) = c * akp - s * akq;
            A(k, q) = A(q, k) = s * akp + c * akq;
          }
          const double vkp = V(k, p), vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return A(i, i) < A(j, j); });
  EigenDecomposition dec;
  dec.values.resize(n);
  dec.vectors.resize(n, n);
  for (int j = 0; j < n; ++j) {
    dec.values(j) = A(order[j], order[j]);
    Eigen::VectorXd col = V.col(order[j]);
    int imax = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(col(i)) > std::abs(col(imax))) imax = i;
    if (col(imax) < 0.0) col = -col;
    dec.vectors.col(j) = col;
  }
  return dec;
}

int EigencurveTable::column_of(double t) const {
  for (size_t k = 0; k < grid.size(); ++k) {
    const double g = grid[k];
    if (std::isinf(g) || std::isinf(t)) {
      if (std::isinf(g) && std::isinf(t) && (g > 0) == (t > 0)) return int(k);
    } else if (std::abs(t - g) <= 1e-12 * std::max(1.0, std::abs(t))) {
      return int(k);
    }
  }
  return -1;
}

EigencurveTable eigencurves(int n, std::span<const double> finite_grid) {
  specfun::check_order(n);
  if (finite_grid.size() < 2) throw std::domain_error("eigencurves: need at least two grid points");
  for (size_t i = 0; i < finite_grid.size(); ++i) {
    if (!std::isfinite(finite_grid[i])) throw std::domain_error("eigencurves: grid must be finite");
    if (i > 0 && !(finite_grid[i] > finite_grid[i - 1]))
      throw std::domain_error("eigencurves: grid must be strictly increasing");
  }

  const int m = int(finite_grid.size());
  EigencurveTable tab;
  tab.n = n;
  tab.grid.reserve(m + 2);
  tab.grid.push_back(-kInf);
  for (double t : finite_grid) tab.grid.push_back(t);
  tab.grid.push_back(kInf);
  tab.lambdas.resize(n, m + 2);
  tab.diagonalizers.resize(m + 2);

  for (int k = 0; k < m; ++k) {
    EigenDecomposition dec = eigendecompose_spd(spectral::phi_plus(n, finite_grid[k]).entries);
    if (k > 0) {
      // greedy permutation + sign so columns continue their predecessors
      const Eigen::MatrixXd& prev = tab.diagonalizers[k];  // column k-th finite = index k
      const Eigen::MatrixXd overlap = prev.transpose() * dec.vectors;
      std::vector<int> match(n, -1);
      std::vector<bool> used(n, false);
      for (int pick = 0; pick < n; ++pick) {
        int bi = -1, bj = -1;
        double best = -1.0;
        for (int i = 0; i < n; ++i) {
          if (match[i] >= 0) continue;
          for (int j = 0; j < n; ++j) {
            if (used[j]) continue;
            if (std::abs(overlap(i, j)) > best) {
              best = std::abs(overlap(i, j));
              bi = i;
              bj = j;
            }
          }
        }
        match[bi] = bj;
        used[bj] = true;
      }
      Eigen::VectorXd lam(n);
      Eigen::MatrixXd vec(n, n);
      double defect = 0.0;
      for (int i = 0; i < n; ++i) {
        const int j = match[i];
        const double sgn = overlap(i, j) < 0.0 ? -1.0 : 1.0;
        lam(i) = dec.values(j);
        vec.col(i) = sgn * dec.vectors.col(j);
        defect = std::max(defect, 1.0 - std::abs(overlap(i, j)));
      }
      tab.continuity_defect = std::max(tab.continuity_defect, defect);
      tab.lambdas.col(k + 1) = lam;
      tab.diagonalizers[k + 1] = vec;
    } else {
      tab.lambdas.col(1) = dec.values;
      tab.diagonalizers[1] = dec.vectors;
    }
  }

  tab.lambdas.col(0).setOnes();
  tab.lambdas.col(m + 1).setZero();
  // phi^+ is scalar at the ends; keep the neighboring bases for continuity
  tab.diagonalizers[0] = tab.diagonalizers[1];
  tab.diagonalizers[m + 1] = tab.diagonalizers[m];
  return tab;
}

PencilReport generalized_eigen_check(int n, double t, std::span<const double> candidates) {
  specfun::check_order(n);
  const Eigen::MatrixXd Mt = specfun::gaussian_tail_moment_matrix(n, t).entries;
  const Eigen::MatrixXd Minf = specfun::gaussian_tail_moment_matrix(n, -kInf).entries;
  const EigenDecomposition dinf = eigendecompose_spd(Minf);
  const double norm_inf = dinf.values.cwiseAbs().maxCoeff();

  PencilReport rep;
  for (double lam : candidates) {
    const double det = (lam * Minf - Mt).determinant();
    rep.det_residual = std::max(rep.det_residual, std::abs(det) / std::pow(norm_inf, n));
  }

  // direct generalized spectrum via Cholesky reduction
  const Eigen::LLT<Eigen::MatrixXd> llt(Minf);
  if (llt.info() != Eigen::Success)
    throw std::domain_error("generalized_eigen_check: moment matrix not positive definite");
  const Eigen::MatrixXd L = llt.matrixL();
  const Eigen::MatrixXd half = L.triangularView<Eigen::Lower>().solve(Mt);
  Eigen::MatrixXd W =
      L.triangularView<Eigen::Lower>().solve(half.transpose());
  W = 0.5 * (W + W.transpose());
  const EigenDecomposition gen = eigendecompose_spd(W);

  std::vector<double> cand(candidates.begin(), candidates.end());
  std::sort(cand.begin(), cand.end());
  if (int(cand.size()) == n) {
    for (int i = 0; i < n; ++i)
      rep.spectrum_mismatch = std::max(rep.spectrum_mismatch, std::abs(cand[i] - gen.values(i)));
  } else {
    for (double c : cand) {
      double nearest = kInf;
      for (int i = 0; i < n; ++i) nearest = std::min(nearest, std::abs(c - gen.values(i)));
      rep.spectrum_mismatch = std::max(rep.spectrum_mismatch, nearest);
    }
  }
  return rep;
}

PureState PureState::interior(const CompactPoint& p, const Eigen::VectorXcd& v) {
  if (p.tag != CompactPoint::Tag::Interior)
    throw std::domain_error("PureState::interior: point must be interior");
  if (std::abs(v.norm() - 1.0) > 1e-12)
    throw std::domain_error("PureState::interior: vector must have unit norm");
  PureState s;
  s.kind = Kind::Interior;
  s.point = p;
  s.v = v;
  return s;
}

PureState PureState::edge(CompactPoint::Tag side, double t2) {
  if (side != CompactPoint::Tag::Left && side != CompactPoint::Tag::Right)
    throw std::domain_error("PureState::edge: side must be Left or Right");
  PureState s;
  s.kind = Kind::Edge;
  s.point = side == CompactPoint::Tag::Left ? CompactPoint::left(t2) : CompactPoint::right(t2);
  return s;
}

PureState PureState::fiber(CompactPoint::Tag stratum, double t1, int j) {
  if (stratum != CompactPoint::Tag::Bottom && stratum != CompactPoint::Tag::Top)
    throw std::domain_error("PureState::fiber: stratum must be Bottom or Top");
  if (j < 1) throw std::domain_error("PureState::fiber: index is 1-based");
  PureState s;
  s.kind = Kind::Fiber;
  s.point = stratum == CompactPoint::Tag::Bottom ? CompactPoint::bottom(t1) : CompactPoint::top(t1);
  s.fiber_index = j;
  return s;
}

MatrixField phi_field(const symbols::Symbol1D& a, int n, spectral::QuadOptions opt) {
  return [a, n, opt](const CompactPoint& p) { return spectral::phi_a(a, n, p, opt); };
}

double pure_state_eval(const MatrixField& M, const PureState& state, int n,
                       const EigencurveTable* curves) {
  specfun::check_order(n);
  const SpectralMatrix sm = M(state.point);
  if (sm.n != n) throw std::domain_error("pure_state_eval: field order mismatch");
  switch (state.kind) {
    case PureState::Kind::Interior: {
      if (state.v.size() != n) throw std::domain_error("pure_state_eval: vector length mismatch");
      const std::complex<double> val = state.v.adjoint() * sm.entries * state.v;
      return val.real();
    }
    case PureState::Kind::Edge: {
      double s = 0.0;
      const double dev = scalar_identity_deviation(sm.entries, s);
      if (dev > 1e-8)
        throw non_member_error("pure_state_eval: edge value is not scalar at " +
                               point_label(state.point));
      return s;
    }
    case PureState::Kind::Fiber: {
      if (state.fiber_index > n) throw std::domain_error("pure_state_eval: fiber index > n");
      Eigen::VectorXd vj;
      int col = -1;
      if (curves && curves->n == n) col = curves->column_of(state.point.t1);
      if (col >= 0) {
        vj = curves->diagonalizers[col].col(state.fiber_index - 1);
      } else {
        const EigenDecomposition dec =
            eigendecompose_spd(spectral::phi_plus(n, state.point.t1).entries);
        vj = dec.vectors.col(state.fiber_index - 1);
      }
      return vj.dot(sm.entries * vj);
    }
  }
  throw std::logic_error("pure_state_eval: unreachable");
}

double pure_state_eval(const symbols::Symbol1D& a, const PureState& state, int n,
                       const EigencurveTable* curves) {
  return pure_state_eval(phi_field(a, n), state, n, curves);
}

MembershipReport membership_frakC(std::span<const std::pair<double, Eigen::MatrixXd>> samples,
                                  double tol, double continuity_bound) {
  if (samples.size() < 2) throw std::invalid_argument("membership_frakC: need at least two samples");
  std::vector<std::pair<double, Eigen::MatrixXd>> s(samples.begin(), samples.end());
  std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (s.front().first != 0.0 || !std::isinf(s.back().first))
    throw std::invalid_argument("membership_frakC: samples must include x2 = 0 and x2 = +inf");

  MembershipReport rep;
  double sc = 0.0;
  {
    ConditionRecord c{"endpoint-zero-scalar", false, 0.0, tol, "x2=0"};
    c.max_violation = scalar_identity_deviation(s.front().second, sc);
    c.pass = c.max_violation <= tol;
    rep.conditions.push_back(c);
  }
  {
    ConditionRecord c{"endpoint-inf-scalar", false, 0.0, tol, "x2=+inf"};
    c.max_violation = scalar_identity_deviation(s.back().second, sc);
    c.pass = c.max_violation <= tol;
    rep.conditions.push_back(c);
  }
  {
    ConditionRecord c{"neighbor-continuity", false, 0.0, continuity_bound, ""};
    for (size_t k = 0; k + 1 < s.size(); ++k) {
      const double step = max_abs(s[k + 1].second - s[k].second);
      if (step > c.max_violation) {
        c.max_violation = step;
        std::ostringstream os;
        os << "x2 in [" << s[k].first << ", " << s[k + 1].first << "]";
        c.witness = os.str();
      }
    }
    c.pass = c.max_violation <= continuity_bound;
    rep.conditions.push_back(c);
  }
  rep.verdict = true;
  for (const auto& c : rep.conditions) rep.verdict = rep.verdict && c.pass;
  return rep;
}

MembershipReport membership_T(std::span<const SpectralMatrix> samples,
                              const EigencurveTable& curves, double tol_f,
                              double delta_lambda, double lipschitz) {
  MembershipReport rep;
  const int n = curves.n;

  ConditionRecord edge{"edge-scalar", true, 0.0, tol_f, ""};
  struct FiberPoint { double lambda, f, t1; };
  std::vector<FiberPoint> fibers[2];  // 0 = bottom, 1 = top

  for (const SpectralMatrix& sm : samples) {
    if (sm.n != n) throw std::invalid_argument("membership_T: sample order mismatch");
    const CompactPoint p = sm.point.canonical();
    switch (p.tag) {
      case CompactPoint::Tag::Left:
      case CompactPoint::Tag::Right: {
        double s = 0.0;
        const double dev = scalar_identity_deviation(sm.entries, s);
        if (dev > edge.max_violation) {
          edge.max_violation = dev;
          edge.witness = point_label(p);
        }
        break;
      }
      case CompactPoint::Tag::Bottom:
      case CompactPoint::Tag::Top: {
        const int col = curves.column_of(p.t1);
        if (col < 0)
          throw std::invalid_argument("membership_T: sample t1 not on the eigencurve grid");
        const int which = p.tag == CompactPoint::Tag::Bottom ? 0 : 1;
        for (int j = 0; j < n; ++j) {
          const Eigen::VectorXd vj = curves.diagonalizers[col].col(j);
          fibers[which].push_back(
              {curves.lambdas(j, col), vj.dot(sm.entries * vj), p.t1});
        }
        break;
      }
      default:
        break;  // interior samples carry no membership condition
    }
  }
  edge.pass = edge.max_violation <= tol_f;
  rep.conditions.push_back(edge);

  const double bound = tol_f + lipschitz * delta_lambda;
  for (int which = 0; which < 2; ++which) {
    ConditionRecord c{which == 0 ? "bottom-fiber-single-valued" : "top-fiber-single-valued",
                      true, 0.0, bound, ""};
    const auto& pts = fibers[which];
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j) {
        if (std::abs(pts[i].lambda - pts[j].lambda) > delta_lambda) continue;
        const double diff = std::abs(pts[i].f - pts[j].f);
        if (diff > c.max_violation) {
          c.max_violation = diff;
          std::ostringstream os;
          os << "lambda=" << pts[i].lambda << " at t1=" << pts[i].t1 << " vs t1=" << pts[j].t1;
          c.witness = os.str();
        }
      }
    c.pass = c.max_violation <= bound;
    rep.conditions.push_back(c);
  }

  rep.verdict = true;
  for (const auto& c : rep.conditions) rep.verdict = rep.verdict && c.pass;
  return rep;
}

SpectralMatrix approx_identity_limit(int n, double x1, double x2, double r) {
  specfun::check_order(n);
  if (!std::isfinite(x1) || !std::isfinite(r) || !(x2 > 0.0) || !std::isfinite(x2))
    throw std::domain_error("approx_identity_limit: need finite x1, r and x2 > 0");
  const double root = std::sqrt(x2);
  const Eigen::VectorXd H = specfun::hermite_vector(n, x1 + 2.0 * root * r);
  SpectralMatrix out;
  out.n = n;
  out.point = CompactPoint{CompactPoint::Tag::Interior, x1, x2};
  out.entries = 2.0 * root * (H * H.transpose());
  out.provenance = SpectralMatrix::Provenance::ClosedForm;
  return out;
}

SeparationExponent separation_exponent(std::pair<double, double> p,
                                       std::pair<double, double> q) {
  const auto [x1, x2] = p;
  const auto [t1, t2] = q;
  if (!(x2 >= 0.0) || !(t2 >= 0.0) || !std::isfinite(x1) || !std::isfinite(x2) ||
      !std::isfinite(t1) || !std::isfinite(t2))
    throw std::domain_error("separation_exponent: points need finite coordinates, x2 >= 0");
  SeparationExponent e;
  e.c2 = 4.0 * (x2 - t2);
  e.c1 = 4.0 * (x1 * std::sqrt(x2) - t1 * std::sqrt(t2));
  e.c0 = x1 * x1 - t1 * t1;
  e.separable =
      std::abs(e.c2) > 1e-12 || std::abs(e.c1) > 1e-12 || std::abs(e.c0) > 1e-12;
  return e;
}

double hermite_frame_det(std::span<const double> ys) {
  const int n = int(ys.size());
  specfun::check_order(n);
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(ys[i])) throw std::domain_error("hermite_frame_det: points must be finite");
    for (int j = i + 1; j < n; ++j)
      if (ys[i] == ys[j]) throw std::domain_error("hermite_frame_det: points must be pairwise distinct");
  }
  Eigen::MatrixXd F(n, n);
  for (int k = 0; k < n; ++k) F.col(k) = specfun::hermite_vector(n, ys[k]);
  return F.determinant();
}

bool fiber_vector_test(int n, const Eigen::VectorXcd& v, const Eigen::VectorXcd& w,
                       double x1, double x2, std::span<const double> r_grid, double tol) {
  specfun::check_order(n);
  if (v.size() != n || w.size() != n)
    throw std::domain_error("fiber_vector_test: vector length mismatch");
  if (std::abs(v.norm() - 1.0) > 1e-12 || std::abs(w.norm() - 1.0) > 1e-12)
    throw std::domain_error("fiber_vector_test: vectors must have unit norm");
  if (!(x2 > 0.0) || !std::isfinite(x2) || !std::isfinite(x1))
    throw std::domain_error("fiber_vector_test: need finite x1 and x2 > 0");
  if (r_grid.size() < 2) throw std::domain_error("fiber_vector_test: need at least two grid points");

  const double root = std::sqrt(x2);
  std::vector<std::complex<double>> gv(r_grid.size()), gw(r_grid.size());
  for (size_t i = 0; i < r_grid.size(); ++i) {
    const Eigen::VectorXd H = specfun::hermite_vector(n, x1 + 2.0 * root * r_grid[i]);
    gv[i] = v.adjoint() * H.cast<std::complex<double>>();
    gw[i] = w.adjoint() * H.cast<std::complex<double>>();
    if (std::abs(std::abs(gv[i]) - std::abs(gw[i])) > tol) return false;
  }
  // same moduli everywhere; a constant phase offset is invisible to the
  // pair products conj(g(r1)) g(r2)
  for (size_t i = 0; i < r_grid.size(); ++i)
    for (size_t j = i + 1; j < r_grid.size(); ++j)
      if (std::abs(std::conj(gv[i]) * gv[j] - std::conj(gw[i]) * gw[j]) > tol) return false;
  return true;
}

}  // namespace polyberg::algebra
