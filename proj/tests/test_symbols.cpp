#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <variant>

#include "polyberg/errors.hpp"
#include "polyberg/symbols.hpp"

using namespace polyberg;
using symbols::Symbol1D;
using symbols::Symbol2D;
using symbols::SymbolHalfLine;

namespace {

Symbol1D line(const std::string& name, std::initializer_list<double> params = {}) {
  return std::get<Symbol1D>(symbols::catalog(name, std::span<const double>(params)));
}

SymbolHalfLine half(const std::string& name, std::initializer_list<double> params = {}) {
  return std::get<SymbolHalfLine>(symbols::catalog(name, std::span<const double>(params)));
}

}  // namespace

TEST_CASE("catalog line symbols evaluate and carry correct limits") {
  const Symbol1D c = line("const", {0.7});
  CHECK(c(-100.0) == 0.7);
  CHECK(c(3.0) == 0.7);
  CHECK(c.limit_neg_inf == 0.7);
  CHECK(c.limit_pos_inf == 0.7);
  CHECK(c.breakpoints.empty());

  const Symbol1D chi = line("chi_plus");
  CHECK(chi(-1e-12) == 0.0);
  CHECK(chi(0.0) == 1.0);
  CHECK(chi(5.0) == 1.0);
  CHECK(chi.limit_neg_inf == 0.0);
  CHECK(chi.limit_pos_inf == 1.0);
  REQUIRE(chi.breakpoints.size() == 1);
  CHECK(chi.breakpoints[0].location == 0.0);
  CHECK(chi.breakpoints[0].is_jump());

  const Symbol1D chim = line("chi_minus");
  for (const double y : {-2.0, -0.5, 0.0, 1.0}) CHECK(chi(y) + chim(y) == 1.0);

  const Symbol1D sig = line("sigmoid");
  CHECK(sig(0.0) == 0.0);
  CHECK(sig(1.0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(sig.limit_neg_inf == -1.0);
  CHECK(sig.limit_pos_inf == 1.0);
  CHECK(sig.smooth);

  const Symbol1D w = line("witch");
  CHECK(w(0.0) == 1.0);
  CHECK(w(1.0) == 0.5);
  CHECK(w.limit_pos_inf == 0.0);

  const Symbol1D aw = line("abs_witch");
  CHECK(aw(0.0) == 0.0);
  CHECK(aw(-1.0) == 0.5);
  CHECK(aw(1.0) == 0.5);
  REQUIRE(aw.breakpoints.size() == 1);
  CHECK_FALSE(aw.breakpoints[0].is_jump());  // kink only
}

TEST_CASE("triangle symbols are unit-mass tents on their support") {
  const Symbol1D t = line("triangle", {2.0, 1.0});
  CHECK(t(1.0) == 0.5);          // peak 1/alpha
  CHECK(t(-1.0) == 0.0);         // support edge
  CHECK(t(3.0) == 0.0);
  CHECK(t(0.0) == 0.25);         // halfway up
  CHECK(t(-5.0) == 0.0);
  CHECK(t.sup_bound == 0.5);
  REQUIRE(t.breakpoints.size() == 3);
  CHECK(t.breakpoints[0].location == -1.0);
  CHECK(t.breakpoints[1].location == 1.0);
  CHECK(t.breakpoints[2].location == 3.0);

  // mass 1 by the trapezoid picture: base 2*alpha, height 1/alpha
  double mass = 0.0;
  const int steps = 400000;
  const double hstep = 4.0 / steps;
  for (int i = 0; i < steps; ++i) mass += t(-1.0 + (i + 0.5) * hstep) * hstep;
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS_AS(line("triangle", {0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(line("triangle", {1.0}), std::domain_error);
}

TEST_CASE("catalog half-line symbols evaluate and carry correct limits") {
  const SymbolHalfLine inv = half("b_inv1p");
  CHECK(inv(0.0) == 1.0);
  CHECK(inv(1.0) == 0.5);
  CHECK(inv.limit_zero == 1.0);
  CHECK(inv.limit_inf == 0.0);
  CHECK(inv.smooth);

  const SymbolHalfLine ind = half("b_ind01");
  CHECK(ind(0.5) == 1.0);
  CHECK(ind(1.5) == 0.0);
  CHECK(ind.limit_zero == 1.0);
  CHECK(ind.limit_inf == 0.0);
  REQUIRE(ind.breakpoints.size() == 1);
  CHECK(ind.breakpoints[0].location == 1.0);
  CHECK(ind.breakpoints[0].is_jump());

  const SymbolHalfLine ch = half("const_halfline", {2.5});
  CHECK(ch(7.0) == 2.5);
  CHECK(ch.limit_zero == 2.5);

  CHECK_THROWS_AS(symbols::catalog("nope"), std::domain_error);
  CHECK_THROWS_AS(symbols::catalog("const"), std::domain_error);  // missing param
}

TEST_CASE("catalog sup bounds dominate sampled values") {
  std::mt19937 rng(905);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (const char* name : {"chi_plus", "chi_minus", "sigmoid", "witch", "abs_witch"}) {
    const Symbol1D s = line(name);
    for (int i = 0; i < 500; ++i) {
      const double y = u(rng);
      CHECK(std::abs(s(y)) <= s.sup_bound + 1e-15);
    }
  }
  const SymbolHalfLine inv = half("b_inv1p");
  for (int i = 0; i < 500; ++i) {
    const double y = std::abs(u(rng));
    CHECK(std::abs(inv(y)) <= inv.sup_bound + 1e-15);
  }
}

TEST_CASE("pc decomposition splits off the jump at 0 exactly") {
  std::mt19937 rng(906);
  std::uniform_real_distribution<double> u(-20.0, 20.0);

  // sigmoid + 2 chi_plus has jump 2
  Symbol1D s = line("sigmoid");
  const auto base = s.eval;
  s.eval = [base](double y) { return base(y) + (y >= 0.0 ? 2.0 : 0.0); };
  s.limit_pos_inf += 2.0;
  s.breakpoints = {{0.0, 0.0, 2.0}};
  s.smooth = false;
  s.sup_bound += 2.0;

  const auto parts = symbols::pc_decompose(s);
  CHECK(parts.jump == 2.0);
  for (int i = 0; i < 1000; ++i) {
    const double y = u(rng);
    const double recon = parts.continuous(y) + (y >= 0.0 ? parts.jump : 0.0);
    CHECK(std::abs(recon - s(y)) < 1e-12);
  }
  // continuous part really is continuous through 0
  CHECK(std::abs(parts.continuous(1e-9) - parts.continuous(-1e-9)) < 1e-8);
  CHECK(parts.continuous.limit_pos_inf == doctest::Approx(1.0));

  // already-continuous symbols pass through untouched
  const auto wparts = symbols::pc_decompose(line("witch"));
  CHECK(wparts.jump == 0.0);
  CHECK(wparts.continuous(0.3) == doctest::Approx(1.0 / 1.09));

  // a jump anywhere else is outside the class
  Symbol1D off = line("const", {0.0});
  off.eval = [](double y) { return y >= 1.0 ? 1.0 : 0.0; };
  off.breakpoints = {{1.0, 0.0, 1.0}};
  CHECK_THROWS_AS(symbols::pc_decompose(off), unsupported_class_error);
}

TEST_CASE("line symbol parser covers the grammar") {
  CHECK(symbols::parse_symbol("chi+")(3.0) == 1.0);
  CHECK(symbols::parse_symbol("chi-")(3.0) == 0.0);
  CHECK(symbols::parse_symbol("sigmoid")(0.0) == 0.0);
  CHECK(symbols::parse_symbol("witch")(0.0) == 1.0);
  CHECK(symbols::parse_symbol("abswitch")(2.0) == doctest::Approx(0.4));
  CHECK(symbols::parse_symbol("const:-1.5")(9.0) == -1.5);

  const Symbol1D t = symbols::parse_symbol("triangle:0.5,1");
  CHECK(t(1.0) == 2.0);
  CHECK(t(0.4) == 0.0);

  const Symbol1D pc = symbols::parse_symbol("pc:sigmoid+0.5*chi+");
  CHECK(pc(-1e9) == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(pc(0.0) == doctest::Approx(0.5));
  CHECK(pc.limit_pos_inf == doctest::Approx(1.5));
  REQUIRE(!pc.breakpoints.empty());
  CHECK(pc.breakpoints[0].is_jump());

  CHECK_THROWS_AS(symbols::parse_symbol(""), std::domain_error);
  CHECK_THROWS_AS(symbols::parse_symbol("gauss"), std::domain_error);
  CHECK_THROWS_AS(symbols::parse_symbol("const:abc"), std::domain_error);
  CHECK_THROWS_AS(symbols::parse_symbol("triangle:1"), std::domain_error);
  CHECK_THROWS_AS(symbols::parse_symbol("pc:chi++1*chi+"), std::domain_error);
  CHECK_THROWS_AS(symbols::parse_symbol("pc:sigmoid"), std::domain_error);
}

TEST_CASE("half-line symbol parser covers the grammar") {
  CHECK(symbols::parse_halfline_symbol("b:inv1p")(3.0) == 0.25);
  CHECK(symbols::parse_halfline_symbol("b:ind01")(0.5) == 1.0);
  CHECK(symbols::parse_halfline_symbol("const:4")(1.0) == 4.0);
  CHECK_THROWS_AS(symbols::parse_halfline_symbol("ind01"), std::domain_error);
  CHECK_THROWS_AS(symbols::parse_halfline_symbol("const:x"), std::domain_error);
}

TEST_CASE("factored two-variable symbols multiply out") {
  Symbol2D c;
  const Symbol1D a = line("sigmoid");
  const SymbolHalfLine b = half("b_inv1p");
  c.factors = {a, b};
  c.eval = [a, b](double u, double v) { return a(u) * b(v); };
  c.name = "sigmoid*inv1p";

  std::mt19937 rng(907);
  std::uniform_real_distribution<double> uu(-10.0, 10.0);
  std::uniform_real_distribution<double> vv(0.0, 30.0);
  for (int i = 0; i < 1000; ++i) {
    const double u = uu(rng), v = vv(rng);
    CHECK(std::abs(c(u, v) - a(u) * b(v)) < 1e-12);
  }
}
