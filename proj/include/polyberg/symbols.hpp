#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace polyberg::symbols {

struct Breakpoint {
  double location = 0.0;
  double left = 0.0;   // one-sided limit from below
  double right = 0.0;  // one-sided limit from above
  bool is_jump() const { return left != right; }
};

// Bounded symbol on the real line with one-sided limits at +-inf.  The
// breakpoint list records jumps and kinks; between breakpoints the symbol is
// smooth whenever `smooth` is set.
struct Symbol1D {
  std::function<double(double)> eval;
  double limit_neg_inf = 0.0;
  double limit_pos_inf = 0.0;
  std::vector<Breakpoint> breakpoints;
  bool smooth = true;
  double sup_bound = 0.0;  // |eval| <= sup_bound everywhere
  std::string name;

  double operator()(double s) const { return eval(s); }
};

// Bounded symbol on [0, inf) with limits at 0+ and +inf.
struct SymbolHalfLine {
  std::function<double(double)> eval;
  double limit_zero = 0.0;
  double limit_inf = 0.0;
  std::vector<Breakpoint> breakpoints;
  bool smooth = true;
  double sup_bound = 0.0;
  std::string name;

  double operator()(double y) const { return eval(y); }
};

// Bounded symbol on R x [0, inf).  When `factors` is set the symbol is the
// product a(u) * b(v) and evaluators may use the factored fast path.
struct Symbol2D {
  std::function<double(double, double)> eval;
  std::optional<std::pair<Symbol1D, SymbolHalfLine>> factors;
  std::string name;

  double operator()(double u, double v) const { return eval(u, v); }
};

using CatalogSymbol = std::variant<Symbol1D, SymbolHalfLine>;

// Named symbols used throughout the tests and the CLI:
//   const c     (line or half-line, from params[0])
//   chi_plus    indicator of [0, inf), chi_plus(0) = 1
//   chi_minus   1 - chi_plus
//   sigmoid     s / sqrt(s^2 + 1)
//   witch       1 / (s^2 + 1)
//   abs_witch   |s| / (s^2 + 1)
//   triangle    tent of mass 1: params = {alpha, r}, support [r-alpha, r+alpha]
//   b_inv1p     1 / (1 + y) on the half-line
//   b_ind01     indicator of (0, 1) on the half-line
// Unknown name or bad params: std::domain_error.
CatalogSymbol catalog(const std::string& name, std::span<const double> params = {});

// Split a piecewise-continuous symbol with its only jump at 0 into
// continuous part + jump * chi_plus.  A jump anywhere else is refused.
struct PcParts {
  Symbol1D continuous;
  double jump = 0.0;
};
PcParts pc_decompose(const Symbol1D& a);

// Mini-language:  const:<float> | chi+ | chi- | sigmoid | witch | abswitch |
//                 triangle:<alpha>,<r> | pc:<base-name>+<jump>*chi+
Symbol1D parse_symbol(const std::string& spec);

// Half-line mini-language:  const:<float> | b:inv1p | b:ind01
SymbolHalfLine parse_halfline_symbol(const std::string& spec);

}  // namespace polyberg::symbols
