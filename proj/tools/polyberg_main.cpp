// Command-line front end: grid sampling of the spectral functions, the
// verification suites, eigencurve tables, and the separation experiments.
//
// Exit codes: 0 success, 1 evaluation/check failure, 2 usage or parse error.

#include <CLI11.hpp>

#include <array>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyberg/algebra.hpp"
#include "polyberg/errors.hpp"
#include "polyberg/gridio.hpp"
#include "polyberg/spectral.hpp"
#include "polyberg/symbols.hpp"
#include "polyberg/verify.hpp"

namespace {

using polyberg::algebra::eigencurves;
using polyberg::algebra::fiber_vector_test;
using polyberg::algebra::separation_exponent;
using polyberg::io::format_coord;
using polyberg::io::format_value;
using polyberg::spectral::CompactPoint;
using polyberg::spectral::QuadOptions;
using polyberg::spectral::SpectralMatrix;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct CommonArgs {
  std::string kase;
  std::string symbol;
  int n = 2;
  std::string grid_text;
  bool include_boundary = false;
  std::string format = "csv";
  std::string out;
  int nodes = 200;
  double smax = 8.0;
};

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument(what + ": malformed number '" + part + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument(what + ": empty list");
  return out;
}

std::pair<double, double> parse_point(const std::string& text, const std::string& what) {
  const auto xs = parse_list(text, what);
  if (xs.size() != 2) throw std::invalid_argument(what + ": expected 'x1,x2'");
  return {xs[0], xs[1]};
}

polyberg::symbols::Symbol2D parse_c_symbol(const std::string& spec) {
  const auto semi = spec.find(';');
  if (spec.rfind("a=", 0) != 0 || semi == std::string::npos ||
      spec.compare(semi + 1, 2, "b=") != 0)
    throw std::invalid_argument(
        "two-variable symbol must be 'a=<line-spec>;b=<half-line-spec>'");
  auto a = polyberg::symbols::parse_symbol(spec.substr(2, semi - 2));
  auto b = polyberg::symbols::parse_halfline_symbol(spec.substr(semi + 3));
  polyberg::symbols::Symbol2D c;
  c.factors = std::make_pair(a, b);
  c.eval = [a, b](double u, double v) { return a(u) * b(v); };
  c.name = spec;
  return c;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
  return file;
}

const std::string& require_symbol(const CommonArgs& args) {
  if (args.symbol.empty())
    throw std::invalid_argument("--symbol is required for case " + args.kase);
  return args.symbol;
}

// ---------------------------------------------------------------------------
// sample

int run_sample(const CommonArgs& args) {
  polyberg::io::GridSpec grid =
      args.grid_text.empty() ? polyberg::io::default_grid()
                             : polyberg::io::parse_grid(args.grid_text);
  grid.include_boundary = grid.include_boundary || args.include_boundary;

  const std::vector<double> t1s =
      grid.t1 ? grid.t1->values() : std::vector<double>{0.0};
  const std::vector<double> t2s =
      grid.t2 ? grid.t2->values() : std::vector<double>{1.0};
  const QuadOptions opt{args.nodes, args.smax};

  std::vector<SpectralMatrix> samples;
  const auto warn_no_boundary = [&] {
    if (grid.include_boundary)
      std::cerr << "note: boundary sampling is not defined for case " << args.kase
                << "; emitting interior points only\n";
  };

  if (args.kase == "phi-plus") {
    if (grid.include_boundary)
      samples.push_back(polyberg::spectral::phi_plus(args.n, -kInf));
    for (double t : t1s) samples.push_back(polyberg::spectral::phi_plus(args.n, t));
    if (grid.include_boundary)
      samples.push_back(polyberg::spectral::phi_plus(args.n, kInf));
  } else if (args.kase == "b-1n") {
    const auto b = polyberg::symbols::parse_halfline_symbol(require_symbol(args));
    if (grid.include_boundary)
      samples.push_back(polyberg::spectral::gamma_b_boundary(
          b, args.n, polyberg::spectral::BoundaryEnd::Zero));
    for (double x2 : t2s)
      samples.push_back(polyberg::spectral::gamma_b(b, args.n, x2, opt));
    if (grid.include_boundary)
      samples.push_back(polyberg::spectral::gamma_b_boundary(
          b, args.n, polyberg::spectral::BoundaryEnd::Infinity));
  } else if (args.kase == "a-1n") {
    const auto a = polyberg::symbols::parse_symbol(require_symbol(args));
    warn_no_boundary();
    for (double x1 : t1s)
      for (double x2 : t2s) {
        SpectralMatrix m;
        m.n = 1;
        m.point = CompactPoint::interior(x1, x2);
        m.entries = Eigen::MatrixXd::Constant(
            1, 1, polyberg::spectral::gamma_a_scalar(a, x1, x2, opt));
        samples.push_back(std::move(m));
      }
  } else if (args.kase == "a-n1") {
    const auto a = polyberg::symbols::parse_symbol(require_symbol(args));
    warn_no_boundary();
    for (double x1 : t1s)
      for (double x2 : t2s)
        samples.push_back(polyberg::spectral::gamma_a_matrix(a, args.n, x1, x2, opt));
  } else if (args.kase == "c-1n" || args.kase == "c-n1") {
    const auto c = parse_c_symbol(require_symbol(args));
    const auto space = args.kase == "c-1n" ? polyberg::spectral::SpaceCase::OneN
                                           : polyberg::spectral::SpaceCase::NOne;
    warn_no_boundary();
    for (double x1 : t1s)
      for (double x2 : t2s)
        samples.push_back(
            polyberg::spectral::gamma_c(c, args.n, x1, x2, space, opt));
  } else if (args.kase == "phi-a") {
    const auto a = polyberg::symbols::parse_symbol(require_symbol(args));
    for (double t1 : t1s)
      for (double t2 : t2s)
        samples.push_back(polyberg::spectral::phi_a(
            a, args.n, CompactPoint::interior(t1, t2), opt));
    if (grid.include_boundary) {
      std::set<double> edge_t2(t2s.begin(), t2s.end());
      edge_t2.insert(0.0);
      edge_t2.insert(kInf);
      for (double t2 : edge_t2)
        samples.push_back(
            polyberg::spectral::phi_a(a, args.n, CompactPoint::left(t2), opt));
      for (double t2 : edge_t2)
        samples.push_back(
            polyberg::spectral::phi_a(a, args.n, CompactPoint::right(t2), opt));
      for (double t1 : t1s)
        samples.push_back(
            polyberg::spectral::phi_a(a, args.n, CompactPoint::bottom(t1), opt));
      for (double t1 : t1s)
        samples.push_back(
            polyberg::spectral::phi_a(a, args.n, CompactPoint::top(t1), opt));
    }
  } else {
    throw std::invalid_argument("unknown case '" + args.kase + "'");
  }

  std::ofstream file;
  std::ostream& os = open_output(args.out, file);
  if (args.format == "json")
    polyberg::io::write_json(os, args.kase, args.n, args.symbol, grid, samples);
  else
    polyberg::io::write_csv(os, samples);
  return 0;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const std::string& suite, double tol_scale, const std::string& format,
               const std::string& out) {
  std::vector<polyberg::verify::SuiteReport> reports;
  if (suite == "all")
    reports = polyberg::verify::run_all(tol_scale);
  else
    reports.push_back(polyberg::verify::run_suite(suite, tol_scale));

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.verdict();

  std::ofstream file;
  std::ostream& os = open_output(out, file);
  if (format == "json") {
    nlohmann::json j;
    j["verdict"] = all_pass ? "pass" : "fail";
    j["suites"] = nlohmann::json::array();
    for (const auto& r : reports) {
      nlohmann::json js;
      js["suite"] = r.suite;
      js["verdict"] = r.verdict() ? "pass" : "fail";
      js["checks"] = nlohmann::json::array();
      for (const auto& c : r.checks)
        js["checks"].push_back({{"name", c.name},
                                {"pass", c.pass},
                                {"max_error", c.max_error},
                                {"tolerance", c.tolerance},
                                {"runtime_s", c.runtime_s}});
      j["suites"].push_back(std::move(js));
    }
    os << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      os << "suite " << r.suite << "\n";
      for (const auto& c : r.checks) {
        char line[256];
        std::snprintf(line, sizeof line, "  [%s] %-28s max_error=%.3e tol=%.3e (%.2fs)\n",
                      c.pass ? "PASS" : "FAIL", c.name.c_str(), c.max_error, c.tolerance,
                      c.runtime_s);
        os << line;
      }
      os << "  verdict: " << (r.verdict() ? "PASS" : "FAIL") << "\n";
    }
    os << "overall: " << (all_pass ? "PASS" : "FAIL") << "\n";
  }
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// eigencurves

int run_eigencurves(int n, const std::string& grid_text, const std::string& out) {
  const auto grid = polyberg::io::parse_grid(grid_text);
  if (!grid.t1 || grid.t2)
    throw std::invalid_argument("eigencurves expects a grid of the form t1=min:max:count");
  if (grid.t1->count < 2)
    throw std::invalid_argument("eigencurves needs at least 2 grid points");
  const auto ts = grid.t1->values();
  const auto table = eigencurves(n, ts);

  std::ofstream file;
  std::ostream& os = open_output(out, file);
  os << "t,j,lambda\n";
  for (size_t col = 0; col < table.grid.size(); ++col)
    for (int j = 0; j < n; ++j)
      os << format_coord(table.grid[col]) << "," << (j + 1) << ","
         << format_value(table.lambdas(j, static_cast<int>(col))) << "\n";

  if (!out.empty()) {
    const auto dot = out.rfind('.');
    const std::string stem = dot == std::string::npos ? out : out.substr(0, dot);
    const std::string ext = dot == std::string::npos ? "" : out.substr(dot);
    std::ofstream basis(stem + "_basis" + ext);
    if (!basis)
      throw std::runtime_error("cannot open output file '" + stem + "_basis" + ext + "'");
    basis << "t,j,k,value\n";
    for (size_t col = 0; col < table.grid.size(); ++col) {
      const auto& B = table.diagonalizers[col];
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          basis << format_coord(table.grid[col]) << "," << (j + 1) << "," << (k + 1)
                << "," << format_value(B(j, k)) << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// separate

int run_separate(const std::string& p1_text, const std::string& p2_text,
                 const std::string& v_text, const std::string& w_text,
                 const std::string& rgrid_text, int n) {
  const auto p = parse_point(p1_text, "--p1");
  const auto q = parse_point(p2_text, "--p2");
  if (p.second <= 0.0 || q.second <= 0.0)
    throw std::invalid_argument("separate: points must be interior (x2 > 0)");

  const auto sep = separation_exponent(p, q);
  std::cout << "c2=" << format_value(sep.c2) << " c1=" << format_value(sep.c1)
            << " c0=" << format_value(sep.c0) << "\n";
  std::cout << "verdict: " << (sep.separable ? "separable" : "not separable") << "\n";

  if (v_text.empty() != w_text.empty())
    throw std::invalid_argument("separate: provide both --v and --w or neither");
  if (!v_text.empty()) {
    const auto vs = parse_list(v_text, "--v");
    const auto ws = parse_list(w_text, "--w");
    if (static_cast<int>(vs.size()) != n || static_cast<int>(ws.size()) != n)
      throw std::invalid_argument("separate: vectors must have --n entries");
    Eigen::VectorXcd v(n), w(n);
    for (int i = 0; i < n; ++i) {
      v(i) = vs[i];
      w(i) = ws[i];
    }
    if (v.norm() == 0.0 || w.norm() == 0.0)
      throw std::invalid_argument("separate: vectors must be nonzero");
    v /= v.norm();
    w /= w.norm();
    std::vector<double> rgrid;
    if (rgrid_text.empty()) {
      for (int i = 0; i < 9; ++i) rgrid.push_back(-2.0 + 0.5 * i);
    } else {
      polyberg::io::GridSpec g = polyberg::io::parse_grid("t1=" + rgrid_text);
      rgrid = g.t1->values();
    }
    const bool same = fiber_vector_test(n, v, w, p.first, p.second, rgrid);
    std::cout << "vectors: " << (same ? "states coincide" : "states differ") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Spectral matrix functions of Toeplitz operators with nilpotent symbols: "
      "sampling, verification, eigencurves, separation"};
  app.require_subcommand(1);

  CommonArgs sargs;
  CLI::App* sample = app.add_subcommand("sample", "Sample a spectral function on a grid");
  sample
      ->add_option("--case", sargs.kase, "b-1n | a-1n | a-n1 | c-1n | c-n1 | phi-a | phi-plus")
      ->required()
      ->check(CLI::IsMember(
          {"b-1n", "a-1n", "a-n1", "c-1n", "c-n1", "phi-a", "phi-plus"}));
  sample->add_option("--symbol", sargs.symbol, "Symbol spec in the mini-language");
  sample->add_option("--n", sargs.n, "Matrix order")->check(CLI::Range(1, 12));
  sample->add_option("--grid", sargs.grid_text,
                     "t1=min:max:count[,t2=min:max:count[:log]] (default 41x41 with boundary)");
  sample->add_flag("--include-boundary", sargs.include_boundary,
                   "Also emit boundary-stratum rows");
  sample->add_option("--format", sargs.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  sample->add_option("--out", sargs.out, "Output path (default stdout)");
  sample->add_option("--nodes", sargs.nodes, "Quadrature node target")
      ->check(CLI::Range(8, 100000));
  sample->add_option("--smax", sargs.smax, "Gaussian truncation half-width")
      ->check(CLI::PositiveNumber);

  std::string vsuite = "all", vformat = "text", vout;
  double vtol = 1.0;
  CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", vsuite, "specfun | spectral | algebra | all")
      ->check(CLI::IsMember({"specfun", "spectral", "algebra", "all"}));
  verify->add_option("--tol", vtol, "Tolerance scale applied to every check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", vformat, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", vout, "Output path (default stdout)");

  int en = 2;
  std::string egrid, eout;
  CLI::App* eigen = app.add_subcommand("eigencurves", "Tabulate the eigenvalue curves");
  eigen->add_option("--n", en, "Matrix order")->check(CLI::Range(1, 12));
  eigen->add_option("--grid", egrid, "t1=min:max:count")->required();
  eigen->add_option("--out", eout, "Output CSV (basis table written alongside)")
      ->required();

  std::string p1t, p2t, vt, wt, rgt;
  int sn = 2;
  CLI::App* sep = app.add_subcommand("separate", "Separation and fiber-state experiments");
  sep->add_option("--p1", p1t, "First interior point x1,x2")->required();
  sep->add_option("--p2", p2t, "Second interior point t1,t2")->required();
  sep->add_option("--v", vt, "Unit vector (comma-separated reals)");
  sep->add_option("--w", wt, "Unit vector (comma-separated reals)");
  sep->add_option("--rgrid", rgt, "min:max:count sampling of the fiber parameter");
  sep->add_option("--n", sn, "Vector length")->check(CLI::Range(1, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sample->parsed()) return run_sample(sargs);
    if (verify->parsed()) return run_verify(vsuite, vtol, vformat, vout);
    if (eigen->parsed()) return run_eigencurves(en, egrid, eout);
    if (sep->parsed()) return run_separate(p1t, p2t, vt, wt, rgt, sn);
  } catch (const polyberg::non_member_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
