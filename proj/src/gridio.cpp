#include "polyberg/gridio.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace polyberg::io {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double parse_double(const std::string& text, const char* what) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0')
    throw std::invalid_argument(std::string("bad number in ") + what + ": '" + text + "'");
  return v;
}

AxisSpec parse_axis(const std::string& body, bool allow_log, const char* what) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    const size_t colon = body.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(body.substr(start));
      break;
    }
    parts.push_back(body.substr(start, colon - start));
    start = colon + 1;
  }
  if (parts.size() < 3 || parts.size() > 4)
    throw std::invalid_argument(std::string(what) + " must look like <min>:<max>:<count>[:log]");
  AxisSpec ax;
  ax.min = parse_double(parts[0], what);
  ax.max = parse_double(parts[1], what);
  const double cnt = parse_double(parts[2], what);
  if (cnt < 1 || cnt != std::floor(cnt) || cnt > 100000)
    throw std::invalid_argument(std::string(what) + ": count must be a positive integer");
  ax.count = int(cnt);
  if (parts.size() == 4) {
    if (!allow_log || parts[3] != "log")
      throw std::invalid_argument(std::string(what) + ": unknown axis modifier '" + parts[3] + "'");
    ax.log = true;
  }
  if (ax.count > 1 && !(ax.min < ax.max))
    throw std::invalid_argument(std::string(what) + ": need min < max");
  if (ax.log && !(ax.min > 0.0))
    throw std::invalid_argument(std::string(what) + ": log spacing needs min > 0");
  return ax;
}

nlohmann::json json_coord(double x) {
  if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
  return x;
}

const char* kind_name(spectral::CompactPoint::Tag tag) {
  using Tag = spectral::CompactPoint::Tag;
  switch (tag) {
    case Tag::Interior: return "interior";
    case Tag::Left: return "left";
    case Tag::Right: return "right";
    case Tag::Bottom: return "bottom";
    case Tag::Top: return "top";
  }
  return "?";
}

// the two coordinates every row carries, edge tags included
void row_coords(const spectral::CompactPoint& p, double& t1, double& t2) {
  using Tag = spectral::CompactPoint::Tag;
  t1 = p.t1;
  t2 = p.t2;
  switch (p.tag) {
    case Tag::Left: t1 = -kInf; break;
    case Tag::Right: t1 = kInf; break;
    case Tag::Bottom: t2 = 0.0; break;
    case Tag::Top: t2 = kInf; break;
    default: break;
  }
}

}  // namespace

std::vector<double> AxisSpec::values() const {
  std::vector<double> out;
  out.reserve(count);
  if (count == 1) {
    out.push_back(min);
    return out;
  }
  if (log) {
    const double la = std::log(min), lb = std::log(max);
    for (int i = 0; i < count; ++i)
      out.push_back(std::exp(la + (lb - la) * i / (count - 1)));
    out.front() = min;
    out.back() = max;
  } else {
    for (int i = 0; i < count; ++i)
      out.push_back(min + (max - min) * i / (count - 1));
    out.back() = max;
  }
  return out;
}

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  size_t start = 0;
  if (text.empty()) throw std::invalid_argument("empty grid spec");
  while (start < text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string piece = text.substr(start, comma - start);
    if (piece.rfind("t1=", 0) == 0) {
      if (g.t1) throw std::invalid_argument("t1 axis given twice");
      g.t1 = parse_axis(piece.substr(3), false, "t1 axis");
    } else if (piece.rfind("t2=", 0) == 0) {
      if (g.t2) throw std::invalid_argument("t2 axis given twice");
      g.t2 = parse_axis(piece.substr(3), true, "t2 axis");
      if (g.t2->min <= 0.0)
        throw std::invalid_argument("t2 axis: need min > 0 (the edge rows come from --include-boundary)");
    } else {
      throw std::invalid_argument("grid pieces must start with t1= or t2=");
    }
    start = comma + 1;
  }
  return g;
}

GridSpec default_grid() {
  GridSpec g;
  g.t1 = AxisSpec{-4.0, 4.0, 41, false};
  g.t2 = AxisSpec{1e-2, 1e2, 41, true};
  g.include_boundary = true;
  return g;
}

std::string format_coord(double x) {
  if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_value(double x) { return format_coord(x); }

double parse_coord(const std::string& text) {
  if (text == "+inf" || text == "inf") return kInf;
  if (text == "-inf") return -kInf;
  return parse_double(text, "coordinate");
}

void write_csv(std::ostream& os, std::span<const spectral::SpectralMatrix> samples) {
  os << "kind,t1,t2,j,k,value\n";
  for (const auto& sm : samples) {
    double t1, t2;
    row_coords(sm.point, t1, t2);
    for (int j = 0; j < sm.n; ++j)
      for (int k = 0; k < sm.n; ++k)
        os << kind_name(sm.point.tag) << ',' << format_coord(t1) << ',' << format_coord(t2)
           << ',' << j + 1 << ',' << k + 1 << ',' << format_value(sm.entries(j, k)) << '\n';
  }
}

void write_json(std::ostream& os, const std::string& case_name, int n,
                const std::string& symbol, const GridSpec& grid,
                std::span<const spectral::SpectralMatrix> samples) {
  nlohmann::json root;
  root["case"] = case_name;
  root["n"] = n;
  root["symbol"] = symbol;
  nlohmann::json jg;
  if (grid.t1)
    jg["t1"] = {{"min", grid.t1->min}, {"max", grid.t1->max}, {"count", grid.t1->count},
                {"scale", grid.t1->log ? "log" : "linear"}};
  if (grid.t2)
    jg["t2"] = {{"min", grid.t2->min}, {"max", grid.t2->max}, {"count", grid.t2->count},
                {"scale", grid.t2->log ? "log" : "linear"}};
  jg["include_boundary"] = grid.include_boundary;
  root["grid"] = jg;

  nlohmann::json arr = nlohmann::json::array();
  for (const auto& sm : samples) {
    double t1, t2;
    row_coords(sm.point, t1, t2);
    nlohmann::json item;
    item["point"] = {{"kind", kind_name(sm.point.tag)}, {"t1", json_coord(t1)}, {"t2", json_coord(t2)}};
    nlohmann::json mat = nlohmann::json::array();
    for (int j = 0; j < sm.n; ++j) {
      nlohmann::json row = nlohmann::json::array();
      for (int k = 0; k < sm.n; ++k) row.push_back(sm.entries(j, k));
      mat.push_back(row);
    }
    item["matrix"] = mat;
    arr.push_back(item);
  }
  root["samples"] = arr;
  os << root.dump(2) << '\n';
}

}  // namespace polyberg::io
