#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyberg/spectral.hpp"

namespace polyberg::io {

struct AxisSpec {
  double min = 0.0;
  double max = 0.0;
  int count = 1;
  bool log = false;

  std::vector<double> values() const;
};

struct GridSpec {
  std::optional<AxisSpec> t1;
  std::optional<AxisSpec> t2;
  bool include_boundary = false;
};

// "t1=<min>:<max>:<count>" and/or "t2=<min>:<max>:<count>[:log]",
// comma-separated.  Malformed input: std::invalid_argument.
GridSpec parse_grid(const std::string& text);

// 41 x 41 over t1 in [-4, 4], t2 in [1e-2, 1e2] log-spaced, boundary on.
GridSpec default_grid();

// "-inf" / "+inf" for infinities, shortest round-trip decimal otherwise.
std::string format_coord(double x);
std::string format_value(double x);
double parse_coord(const std::string& text);  // accepts the inf spellings

// CSV rows kind,t1,t2,j,k,value (header included, 1-based j,k).
void write_csv(std::ostream& os, std::span<const spectral::SpectralMatrix> samples);

// {case, n, symbol, grid, samples:[{point:{kind,t1,t2}, matrix:[[..]]}]}
// with infinities as the same strings.
void write_json(std::ostream& os, const std::string& case_name, int n,
                const std::string& symbol, const GridSpec& grid,
                std::span<const spectral::SpectralMatrix> samples);

}  // namespace polyberg::io
