#include "univalent/export.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "univalent/extremal.hpp"

namespace univalent {

namespace {

std::string format_with(const char* spec, double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, spec, value);
  return buf;
}

}  // namespace

std::string format_g17(double value) { return format_with("%.17g", value); }

void write_boundary_csv(const BoundaryTrace& trace, std::ostream& out) {
  out << "t,u,v\n";
  for (const BoundarySample& s : trace.samples()) {
    out << format_g17(s.t) << ',' << format_g17(s.u) << ',' << format_g17(s.v) << '\n';
  }
}

int export_boundary_csv(const BoundaryTrace& trace, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) return 3;
  write_boundary_csv(trace, file);
  file.flush();
  return file ? 0 : 3;
}

nlohmann::ordered_json to_json(const CertificateReport& report) {
  nlohmann::ordered_json j;
  j["statement"] = std::string(to_string(report.statement));
  j["passed"] = report.passed;
  j["worst_margin"] = report.worst_margin;
  j["worst_t"] = report.worst_t;
  j["grid_size"] = report.grid_size;
  j["tolerance"] = report.tolerance;
  j["strict"] = report.strict;
  return j;
}

nlohmann::ordered_json to_json(const BoundaryTrace& trace) {
  nlohmann::ordered_json j;
  j["n"] = trace.n();
  j["t_fold"] = trace.t_fold();
  j["grid"] = trace.grid_size();
  auto rows = nlohmann::ordered_json::array();
  for (const BoundarySample& s : trace.samples()) rows.push_back({s.t, s.u, s.v});
  j["samples"] = std::move(rows);
  return j;
}

BoundaryTrace figure_trace(int t_fold, int n, int grid_size) {
  if (t_fold == 2) return trace_boundary(n, grid_size);
  return trace_symmetric_boundary(conjectured_symmetric_coeffs(t_fold, n), grid_size);
}

void write_svg(std::span<const Point2> polygon, std::ostream& out) {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  for (const Point2& p : polygon) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, -p.y);
    ymax = std::max(ymax, -p.y);
  }
  const double width = xmax - xmin;
  const double height = ymax - ymin;
  const double pad_x = 0.05 * width;
  const double pad_y = 0.05 * height;
  const double view_w = width + 2.0 * pad_x;
  const double view_h = height + 2.0 * pad_y;
  const auto num = [](double v) { return format_with("%.9g", v); };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(xmin - pad_x) << ' '
      << num(ymin - pad_y) << ' ' << num(view_w) << ' ' << num(view_h) << "\" width=\"800\" height=\""
      << num(800.0 * view_h / view_w) << "\">\n"
      << "<path fill=\"none\" stroke=\"black\" stroke-width=\""
      << num(0.002 * std::max(view_w, view_h)) << "\" stroke-linejoin=\"round\" d=\"";
  for (std::size_t k = 0; k < polygon.size(); ++k) {
    out << (k == 0 ? "M" : " L") << num(polygon[k].x) << ',' << num(-polygon[k].y);
  }
  out << " Z\"/>\n</svg>\n";
}

int render_svg(int t_fold, int n, int grid_size, const std::string& path) {
  const BoundaryTrace trace = figure_trace(t_fold, n, grid_size);
  std::ofstream file(path, std::ios::binary);
  if (!file) return 3;
  write_svg(closed_polygon(trace), file);
  file.flush();
  if (!file) return 3;
  return certify_simple_curve(trace).passed ? 0 : 2;
}

}  // namespace univalent
