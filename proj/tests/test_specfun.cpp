#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "polyberg/quadrature.hpp"
#include "polyberg/specfun.hpp"

using namespace polyberg;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kSqrtPi = std::sqrt(M_PI);
const double kPiQuarter = std::pow(M_PI, -0.25);

}  // namespace

// The adaptive Simpson oracle is the reference everything else is checked
// against, so it gets pinned to closed forms first.
TEST_CASE("oracle integrator reproduces closed forms") {
  auto gauss = [](double s) { return std::exp(-s * s); };
  const auto full = quad::oracle_integrate(gauss, -kInf, kInf);
  CHECK(full.converged);
  CHECK(full.value == doctest::Approx(kSqrtPi).epsilon(1e-12));

  const auto half = quad::oracle_integrate([](double y) { return std::exp(-y); }, 0.0, kInf);
  CHECK(half.converged);
  CHECK(half.value == doctest::Approx(1.0).epsilon(1e-12));

  // h0*h1 is odd, so the line integral cancels exactly.
  const auto odd = quad::oracle_integrate(
      [](double s) {
        const Eigen::VectorXd h = specfun::hermite_vector(2, s);
        return h(0) * h(1);
      },
      -kInf, kInf);
  CHECK(odd.converged);
  CHECK(std::abs(odd.value) < 1e-10);
}

TEST_CASE("oracle integrator honors breakpoints and rejects bad input") {
  // |s| has a kink at 0; the split keeps Simpson honest.
  const std::vector<double> bps{0.0};
  const auto r = quad::oracle_integrate([](double s) { return std::abs(s); }, -1.0, 2.0, bps);
  CHECK(r.value == doctest::Approx(2.5).epsilon(1e-12));

  CHECK_THROWS_AS(quad::oracle_integrate([](double) { return 0.0; }, 1.0, 1.0),
                  std::domain_error);
  CHECK_THROWS_AS(quad::oracle_integrate([](double) { return 0.0; }, 0.0, 1.0, {}, -1.0),
                  std::domain_error);
}

TEST_CASE("hermite functions hit known values") {
  const Eigen::VectorXd h0 = specfun::hermite_vector(1, 0.0);
  CHECK(h0.size() == 1);
  CHECK(h0(0) == doctest::Approx(kPiQuarter).epsilon(1e-15));

  // h1(y) = sqrt(2) y h0(y)
  const Eigen::VectorXd h = specfun::hermite_vector(3, 1.0);
  CHECK(h(1) == doctest::Approx(std::sqrt(2.0) * kPiQuarter * std::exp(-0.5)).epsilon(1e-14));
  // h2(0) = -pi^{-1/4}/sqrt(2)
  const Eigen::VectorXd g = specfun::hermite_vector(3, 0.0);
  CHECK(g(1) == doctest::Approx(0.0));
  CHECK(g(2) == doctest::Approx(-kPiQuarter / std::sqrt(2.0)).epsilon(1e-14));

  CHECK_THROWS_AS(specfun::hermite_vector(0, 0.0), std::domain_error);
  CHECK_THROWS_AS(specfun::hermite_vector(13, 0.0), std::domain_error);
  CHECK_THROWS_AS(specfun::hermite_vector(2, kInf), std::domain_error);
}

TEST_CASE("hermite functions are orthonormal under the oracle") {
  for (const auto& [j, k] : {std::pair{0, 0}, {1, 1}, {3, 3}, {0, 2}, {1, 4}}) {
    const int n = std::max(j, k) + 1;
    const auto r = quad::oracle_integrate(
        [&](double s) {
          const Eigen::VectorXd h = specfun::hermite_vector(n, s);
          return h(j) * h(k);
        },
        -kInf, kInf);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(j == k ? 1.0 : 0.0).epsilon(1e-10));
  }
}

TEST_CASE("laguerre functions hit known values and are orthonormal") {
  const Eigen::VectorXd l = specfun::laguerre_vector(3, 0.0);
  CHECK(l(0) == doctest::Approx(1.0));
  CHECK(l(1) == doctest::Approx(-1.0));
  CHECK(l(2) == doctest::Approx(1.0));
  // ell_1(y) = -(1-y) e^{-y/2} vanishes at y = 1
  CHECK(specfun::laguerre_vector(2, 1.0)(1) == doctest::Approx(0.0).epsilon(1e-15));

  CHECK_THROWS_AS(specfun::laguerre_vector(2, -0.25), std::domain_error);

  for (const auto& [j, k] : {std::pair{0, 0}, {2, 2}, {0, 1}, {1, 3}}) {
    const int n = std::max(j, k) + 1;
    const auto r = quad::oracle_integrate(
        [&](double y) {
          const Eigen::VectorXd v = specfun::laguerre_vector(n, y);
          return v(j) * v(k);
        },
        0.0, kInf);
    CHECK(r.value == doctest::Approx(j == k ? 1.0 : 0.0).epsilon(1e-10));
  }
}

TEST_CASE("hermite coefficient matrix expands the functions") {
  const int n = 6;
  const Eigen::MatrixXd C = specfun::hermite_coeff_matrix(n);
  REQUIRE(C.rows() == n);

  // strictly upper part is zero: h_k has polynomial degree k
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) CHECK(C(j, k) == 0.0);

  CHECK(C(0, 0) == doctest::Approx(kPiQuarter).epsilon(1e-15));
  CHECK(C(1, 1) == doctest::Approx(std::sqrt(2.0) * kPiQuarter).epsilon(1e-14));
  CHECK(C(2, 0) == doctest::Approx(-kPiQuarter / std::sqrt(2.0)).epsilon(1e-14));

  for (const double s : {-3.0, -0.7, 0.0, 0.5, 2.25}) {
    Eigen::VectorXd powers(n);
    double p = 1.0;
    for (int m = 0; m < n; ++m, p *= s) powers(m) = p;
    const Eigen::VectorXd lhs = specfun::hermite_vector(n, s);
    const Eigen::VectorXd rhs = std::exp(-s * s / 2.0) * (C * powers);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("gaussian tail moments match closed forms and the oracle") {
  CHECK(specfun::gaussian_tail_moment(0, 0.0) == doctest::Approx(kSqrtPi / 2).epsilon(1e-15));
  CHECK(specfun::gaussian_tail_moment(1, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(specfun::gaussian_tail_moment(2, 0.0) == doctest::Approx(kSqrtPi / 4).epsilon(1e-15));
  CHECK(specfun::gaussian_tail_moment(0, 1.0) ==
        doctest::Approx(kSqrtPi / 2 * std::erfc(1.0)).epsilon(1e-15));
  CHECK(specfun::gaussian_tail_moment(1, 2.0) ==
        doctest::Approx(std::exp(-4.0) / 2).epsilon(1e-15));

  // full-line moments and the vanishing end
  CHECK(specfun::gaussian_tail_moment(0, -kInf) == doctest::Approx(kSqrtPi).epsilon(1e-15));
  CHECK(specfun::gaussian_tail_moment(1, -kInf) == doctest::Approx(0.0));
  CHECK(specfun::gaussian_tail_moment(2, -kInf) == doctest::Approx(kSqrtPi / 2).epsilon(1e-15));
  CHECK(specfun::gaussian_tail_moment(4, -kInf) ==
        doctest::Approx(3 * kSqrtPi / 4).epsilon(1e-15));
  for (const int m : {0, 1, 5, 12}) CHECK(specfun::gaussian_tail_moment(m, kInf) == 0.0);

  for (const int m : {3, 7, 10}) {
    for (const double t : {-2.0, -0.5, 0.0, 1.5}) {
      const auto r = quad::oracle_integrate(
          [m](double s) { return std::pow(s, m) * std::exp(-s * s); }, t, kInf);
      CHECK(specfun::gaussian_tail_moment(m, t) == doctest::Approx(r.value).epsilon(1e-9));
    }
  }

  CHECK_THROWS_AS(specfun::gaussian_tail_moment(-1, 0.0), std::domain_error);
  CHECK_THROWS_AS(specfun::gaussian_tail_moment(23, 0.0), std::domain_error);
}

TEST_CASE("tail moment matrices are the expected hankel forms") {
  const auto M0 = specfun::gaussian_tail_moment_matrix(2, 0.0);
  CHECK(M0.entries(0, 0) == doctest::Approx(kSqrtPi / 2).epsilon(1e-15));
  CHECK(M0.entries(0, 1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(M0.entries(1, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(M0.entries(1, 1) == doctest::Approx(kSqrtPi / 4).epsilon(1e-15));

  const auto Mneg = specfun::gaussian_tail_moment_matrix(2, -kInf);
  CHECK(Mneg.entries(0, 0) == doctest::Approx(kSqrtPi).epsilon(1e-15));
  CHECK(Mneg.entries(0, 1) == doctest::Approx(0.0));
  CHECK(Mneg.entries(1, 1) == doctest::Approx(kSqrtPi / 2).epsilon(1e-15));

  const auto Mpos = specfun::gaussian_tail_moment_matrix(3, kInf);
  CHECK(Mpos.entries.cwiseAbs().maxCoeff() == 0.0);

  // Hankel symmetry and positive semidefiniteness at several cuts
  for (const double t : {-3.0, -1.0, 0.0, 0.8, 2.5}) {
    const auto M = specfun::gaussian_tail_moment_matrix(5, t);
    CHECK((M.entries - M.entries.transpose()).cwiseAbs().maxCoeff() == 0.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M.entries);
    CHECK(es.eigenvalues().minCoeff() > -1e-12);
  }

  CHECK_THROWS_AS(specfun::gaussian_tail_moment_matrix(0, 0.0), std::domain_error);
  CHECK_THROWS_AS(specfun::gaussian_tail_moment_matrix(2, std::nan("")), std::domain_error);
}

TEST_CASE("composite rules keep their structural invariants") {
  quad::RuleSpec spec;
  spec.family = quad::Family::GaussianLine;
  spec.nodes = 200;
  const auto rule = quad::build_quadrature(spec);

  CHECK(rule.lo == -spec.smax);
  CHECK(rule.hi == spec.smax);
  REQUIRE(rule.nodes.size() == rule.weights.size());
  for (size_t i = 0; i + 1 < rule.nodes.size(); ++i) CHECK(rule.nodes[i] < rule.nodes[i + 1]);
  for (const double w : rule.weights) CHECK(w > 0.0);
  // GL panels integrate constants exactly, so weights sum to the length
  double total = 0.0;
  for (const double w : rule.weights) total += w;
  CHECK(total == doctest::Approx(2 * spec.smax).epsilon(1e-13));
}

TEST_CASE("rules honor interior breakpoints and flag exterior ones") {
  quad::RuleSpec spec;
  spec.family = quad::Family::Interval;
  spec.lo = -1.0;
  spec.hi = 1.0;
  spec.nodes = 64;
  spec.breakpoints = {0.5};
  auto rule = quad::build_quadrature(spec);
  REQUIRE(rule.breakpoints.size() == 1);
  CHECK(rule.breakpoints[0] == 0.5);
  CHECK_FALSE(rule.ignored_breakpoint);
  // no node may sit on a panel boundary
  for (const double x : rule.nodes) CHECK(x != 0.5);

  spec.breakpoints = {3.0};
  rule = quad::build_quadrature(spec);
  CHECK(rule.breakpoints.empty());
  CHECK(rule.ignored_breakpoint);
}

TEST_CASE("composite rules reach reference accuracy on the model weights") {
  quad::RuleSpec gauss;
  gauss.family = quad::Family::GaussianLine;
  gauss.nodes = 200;
  const auto gr = quad::build_quadrature(gauss);
  CHECK(quad::integrate(gr, [](double s) { return std::exp(-s * s); }) ==
        doctest::Approx(kSqrtPi).epsilon(1e-14));
  CHECK(quad::integrate(gr, [](double s) { return s * s * std::exp(-s * s); }) ==
        doctest::Approx(kSqrtPi / 2).epsilon(1e-14));

  quad::RuleSpec expo;
  expo.family = quad::Family::ExponentialHalfLine;
  expo.nodes = 200;
  const auto er = quad::build_quadrature(expo);
  CHECK(quad::integrate(er, [](double y) { return std::exp(-y); }) ==
        doctest::Approx(1.0).epsilon(1e-13));

  quad::RuleSpec unit;
  unit.family = quad::Family::Interval;
  unit.lo = 0.0;
  unit.hi = 1.0;
  unit.nodes = 32;
  const auto ur = quad::build_quadrature(unit);
  CHECK(quad::integrate(ur, [](double s) { return s * s * s; }) ==
        doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("rule construction rejects malformed specs") {
  quad::RuleSpec spec;
  spec.family = quad::Family::Interval;
  spec.lo = 1.0;
  spec.hi = 1.0;
  CHECK_THROWS_AS(quad::build_quadrature(spec), std::domain_error);
  spec.hi = 2.0;
  spec.nodes = 4;
  CHECK_THROWS_AS(quad::build_quadrature(spec), std::domain_error);
  quad::RuleSpec bad;
  bad.family = quad::Family::GaussianLine;
  bad.smax = 0.0;
  CHECK_THROWS_AS(quad::build_quadrature(bad), std::domain_error);
}
