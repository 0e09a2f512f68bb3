#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "univalent/certificate.hpp"
#include "univalent/geometry.hpp"

namespace univalent {

/// Shortest text that is not ambiguous: 17 significant digits, %g style.
std::string format_g17(double value);

/// Header `t,u,v`, one row per sample, every row newline-terminated.
void write_boundary_csv(const BoundaryTrace& trace, std::ostream& out);

/// Writes the CSV to `path`; returns 0, or 3 when the file cannot be
/// written.
int export_boundary_csv(const BoundaryTrace& trace, const std::string& path);

nlohmann::ordered_json to_json(const CertificateReport& report);
nlohmann::ordered_json to_json(const BoundaryTrace& trace);

/// The fundamental arc rendered for (T, n): the odd extremizer for
/// T = 2 and the conjectured symmetric extremizer otherwise.
BoundaryTrace figure_trace(int t_fold, int n, int grid_size);

/// One closed stroked path through the vertices, y flipped so the image
/// reads with the imaginary axis up. The viewBox is the bounding box grown
/// by 5% of its width and height on each side.
void write_svg(std::span<const Point2> polygon, std::ostream& out);

/// Renders the full boundary of figure_trace(t_fold, n, grid_size) to
/// `path`. Returns 0, 2 when the curve fails the simple-curve certificate
/// (the file is still written), or 3 on I/O failure.
int render_svg(int t_fold, int n, int grid_size, const std::string& path);

}  // namespace univalent
