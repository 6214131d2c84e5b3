#include "polyberg/symbols.hpp"

#include "polyberg/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace polyberg::symbols {

namespace {

Symbol1D make_const_line(double c) {
  Symbol1D s;
  s.eval = [c](double) { return c; };
  s.limit_neg_inf = s.limit_pos_inf = c;
  s.smooth = true;
  s.sup_bound = std::abs(c);
  s.name = "const:" + std::to_string(c);
  return s;
}

SymbolHalfLine make_const_half(double c) {
  SymbolHalfLine s;
  s.eval = [c](double) { return c; };
  s.limit_zero = s.limit_inf = c;
  s.smooth = true;
  s.sup_bound = std::abs(c);
  s.name = "const:" + std::to_string(c);
  return s;
}

Symbol1D make_chi_plus() {
  Symbol1D s;
  s.eval = [](double y) { return y >= 0.0 ? 1.0 : 0.0; };  // chi_plus(0) = 1
  s.limit_neg_inf = 0.0;
  s.limit_pos_inf = 1.0;
  s.breakpoints = {{0.0, 0.0, 1.0}};
  s.smooth = false;
  s.sup_bound = 1.0;
  s.name = "chi+";
  return s;
}

Symbol1D make_chi_minus() {
  Symbol1D s;
  s.eval = [](double y) { return y >= 0.0 ? 0.0 : 1.0; };
  s.limit_neg_inf = 1.0;
  s.limit_pos_inf = 0.0;
  s.breakpoints = {{0.0, 1.0, 0.0}};
  s.smooth = false;
  s.sup_bound = 1.0;
  s.name = "chi-";
  return s;
}

Symbol1D make_sigmoid() {
  Symbol1D s;
  s.eval = [](double y) { return y / std::sqrt(y * y + 1.0); };
  s.limit_neg_inf = -1.0;
  s.limit_pos_inf = 1.0;
  s.smooth = true;
  s.sup_bound = 1.0;
  s.name = "sigmoid";
  return s;
}

Symbol1D make_witch() {
  Symbol1D s;
  s.eval = [](double y) { return 1.0 / (y * y + 1.0); };
  s.limit_neg_inf = s.limit_pos_inf = 0.0;
  s.smooth = true;
  s.sup_bound = 1.0;
  s.name = "witch";
  return s;
}

Symbol1D make_abs_witch() {
  Symbol1D s;
  s.eval = [](double y) { return std::abs(y) / (y * y + 1.0); };
  s.limit_neg_inf = s.limit_pos_inf = 0.0;
  s.breakpoints = {{0.0, 0.0, 0.0}};  // kink, not a jump
  s.smooth = false;
  s.sup_bound = 0.5;  // peak at |y| = 1
  s.name = "abswitch";
  return s;
}

Symbol1D make_triangle(double alpha, double r) {
  if (!(alpha > 0.0)) throw std::domain_error("triangle symbol: alpha must be positive");
  if (!std::isfinite(r)) throw std::domain_error("triangle symbol: center must be finite");
  Symbol1D s;
  s.eval = [alpha, r](double y) {
    const double u = std::abs(y - r) / alpha;
    return u >= 1.0 ? 0.0 : (1.0 - u) / alpha;
  };
  s.limit_neg_inf = s.limit_pos_inf = 0.0;
  s.breakpoints = {{r - alpha, 0.0, 0.0}, {r, 1.0 / alpha, 1.0 / alpha}, {r + alpha, 0.0, 0.0}};
  s.smooth = false;
  s.sup_bound = 1.0 / alpha;
  s.name = "triangle:" + std::to_string(alpha) + "," + std::to_string(r);
  return s;
}

SymbolHalfLine make_inv1p() {
  SymbolHalfLine s;
  s.eval = [](double y) { return 1.0 / (1.0 + y); };
  s.limit_zero = 1.0;
  s.limit_inf = 0.0;
  s.smooth = true;
  s.sup_bound = 1.0;
  s.name = "b:inv1p";
  return s;
}

SymbolHalfLine make_ind01() {
  SymbolHalfLine s;
  s.eval = [](double y) { return (y > 0.0 && y < 1.0) ? 1.0 : 0.0; };
  s.limit_zero = 1.0;
  s.limit_inf = 0.0;
  s.breakpoints = {{1.0, 1.0, 0.0}};
  s.smooth = false;
  s.sup_bound = 1.0;
  s.name = "b:ind01";
  return s;
}

double need_param(std::span<const double> params, size_t i, const char* what) {
  if (params.size() <= i) throw std::domain_error(std::string("catalog: missing parameter for ") + what);
  return params[i];
}

double parse_float(const std::string& text, const char* what) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || !std::isfinite(v))
    throw std::domain_error(std::string("bad number in symbol spec: ") + what);
  return v;
}

}  // namespace

CatalogSymbol catalog(const std::string& name, std::span<const double> params) {
  if (name == "const") return make_const_line(need_param(params, 0, "const"));
  if (name == "const_halfline") return make_const_half(need_param(params, 0, "const"));
  if (name == "chi_plus") return make_chi_plus();
  if (name == "chi_minus") return make_chi_minus();
  if (name == "sigmoid") return make_sigmoid();
  if (name == "witch") return make_witch();
  if (name == "abs_witch") return make_abs_witch();
  if (name == "triangle")
    return make_triangle(need_param(params, 0, "triangle"), need_param(params, 1, "triangle"));
  if (name == "b_inv1p") return make_inv1p();
  if (name == "b_ind01") return make_ind01();
  throw std::domain_error("catalog: unknown symbol name '" + name + "'");
}

PcParts pc_decompose(const Symbol1D& a) {
  double jump = 0.0;
  double at0_left = a.eval(0.0);
  for (const Breakpoint& bp : a.breakpoints) {
    if (!bp.is_jump()) continue;
    if (bp.location != 0.0)
      throw unsupported_class_error("pc_decompose: jump away from 0 is outside the class");
    if (jump != 0.0) throw unsupported_class_error("pc_decompose: more than one jump");
    jump = bp.right - bp.left;
    at0_left = bp.left;
  }
  PcParts parts;
  parts.jump = jump;
  Symbol1D cont;
  const auto base = a.eval;
  const double j = jump;
  cont.eval = [base, j](double s) { return base(s) - (s >= 0.0 ? j : 0.0); };
  cont.limit_neg_inf = a.limit_neg_inf;
  cont.limit_pos_inf = a.limit_pos_inf - jump;
  // jump removed; keep kink locations so quadrature still splits there
  for (const Breakpoint& bp : a.breakpoints) {
    if (bp.location == 0.0)
      cont.breakpoints.push_back({0.0, at0_left, at0_left});
    else
      cont.breakpoints.push_back(bp);
  }
  cont.smooth = a.smooth && jump == 0.0;
  cont.sup_bound = a.sup_bound + std::abs(jump);
  cont.name = a.name + (jump != 0.0 ? "-jump" : "");
  parts.continuous = std::move(cont);
  return parts;
}

Symbol1D parse_symbol(const std::string& spec) {
  if (spec == "chi+") return make_chi_plus();
  if (spec == "chi-") return make_chi_minus();
  if (spec == "sigmoid") return make_sigmoid();
  if (spec == "witch") return make_witch();
  if (spec == "abswitch") return make_abs_witch();
  if (spec.rfind("const:", 0) == 0) return make_const_line(parse_float(spec.substr(6), "const"));
  if (spec.rfind("triangle:", 0) == 0) {
    const std::string rest = spec.substr(9);
    const size_t comma = rest.find(',');
    if (comma == std::string::npos)
      throw std::domain_error("triangle spec needs two parameters: triangle:<alpha>,<r>");
    return make_triangle(parse_float(rest.substr(0, comma), "triangle alpha"),
                         parse_float(rest.substr(comma + 1), "triangle r"));
  }
  if (spec.rfind("pc:", 0) == 0) {
    // pc:<base-name>+<jump>*chi+
    const std::string rest = spec.substr(3);
    const size_t plus = rest.find('+');
    const size_t star = rest.rfind("*chi+");
    if (plus == std::string::npos || star == std::string::npos || star < plus ||
        star + 5 != rest.size())
      throw std::domain_error("pc spec must look like pc:<base-name>+<jump>*chi+");
    Symbol1D base = parse_symbol(rest.substr(0, plus));
    for (const Breakpoint& bp : base.breakpoints)
      if (bp.is_jump()) throw std::domain_error("pc base symbol must be continuous");
    const double jump = parse_float(rest.substr(plus + 1, star - plus - 1), "pc jump");
    Symbol1D s;
    const auto b = base.eval;
    s.eval = [b, jump](double y) { return b(y) + (y >= 0.0 ? jump : 0.0); };
    s.limit_neg_inf = base.limit_neg_inf;
    s.limit_pos_inf = base.limit_pos_inf + jump;
    const double at0 = base.eval(0.0);
    s.breakpoints = {{0.0, at0, at0 + jump}};
    for (const Breakpoint& bp : base.breakpoints)
      if (bp.location != 0.0) s.breakpoints.push_back(bp);
    s.smooth = false;
    s.sup_bound = base.sup_bound + std::abs(jump);
    s.name = spec;
    return s;
  }
  throw std::domain_error("unknown symbol spec '" + spec + "'");
}

SymbolHalfLine parse_halfline_symbol(const std::string& spec) {
  if (spec == "b:inv1p") return make_inv1p();
  if (spec == "b:ind01") return make_ind01();
  if (spec.rfind("const:", 0) == 0) return make_const_half(parse_float(spec.substr(6), "const"));
  throw std::domain_error("unknown half-line symbol spec '" + spec + "'");
}

}  // namespace polyberg::symbols
