#include "univalent/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "univalent/errors.hpp"
#include "univalent/extremal.hpp"

namespace univalent {

namespace {

using std::numbers::pi;

constexpr double kVacuousMargin = std::numeric_limits<double>::max();
constexpr double kRationalGuard = 1e-9;

void require_grid(int grid_size, int minimum) {
  if (grid_size < minimum) {
    throw DomainError("grid_size must be >= " + std::to_string(minimum) + ", got " +
                      std::to_string(grid_size));
  }
}

/// `count` nodes from `first` to `last` inclusive; the end nodes are exact.
std::vector<double> uniform_nodes(double first, double last, int count) {
  std::vector<double> t(static_cast<std::size_t>(count));
  const double step = (last - first) / (count - 1);
  for (int k = 0; k < count; ++k) t[k] = first + step * k;
  t.front() = first;
  t.back() = last;
  return t;
}

std::vector<ComplexPoint> sample(const SymmetricPolynomial& p, std::span<const double> t) {
  std::vector<ComplexPoint> values(t.size());
  kernels::parallel::sample_boundary(p, t, values);
  return values;
}

/// Smallest drop f(t_k) - f(t_{k+1}) and the node where it occurs.
std::pair<double, double> worst_decrease(std::span<const double> t,
                                         std::span<const ComplexPoint> values,
                                         double ComplexPoint::*part) {
  double margin = std::numeric_limits<double>::infinity();
  double where = t.front();
  for (std::size_t k = 0; k + 1 < values.size(); ++k) {
    const double drop = values[k].*part - values[k + 1].*part;
    if (drop < margin) {
      margin = drop;
      where = t[k];
    }
  }
  return {margin, where};
}

}  // namespace

std::string_view to_string(StatementId id) noexcept {
  switch (id) {
    case StatementId::A: return "A";
    case StatementId::B: return "B";
    case StatementId::C: return "C";
    case StatementId::D: return "D";
    case StatementId::Aux: return "AUX";
    case StatementId::SimpleCurve: return "SIMPLE_CURVE";
    case StatementId::Nonnegativity: return "NONNEGATIVITY";
    case StatementId::OracleAgreement: return "ORACLE_AGREEMENT";
  }
  return "UNKNOWN";
}

CertificateReport make_report(StatementId id, double worst_margin, double worst_t,
                              int grid_size, double tolerance, bool strict) {
  CertificateReport r;
  r.statement = id;
  r.worst_margin = worst_margin;
  r.worst_t = worst_t;
  r.grid_size = grid_size;
  r.tolerance = tolerance;
  r.strict = strict;
  r.passed = strict ? worst_margin > -tolerance : worst_margin >= -tolerance;
  return r;
}

BoundaryTrace::BoundaryTrace(int t_fold, int n, std::vector<BoundarySample> samples)
    : t_fold_(t_fold), n_(n), samples_(std::move(samples)) {
  if (t_fold < 1 || n < 1) throw DomainError("trace needs T >= 1 and n >= 1");
  if (samples_.size() < 2) throw DomainError("trace needs at least two samples");
  if (samples_.front().t != 0.0) throw DomainError("trace must start at t = 0");
  const double end = pi / t_fold;
  if (std::abs(samples_.back().t - end) > 1e-12) throw DomainError("trace must end at t = pi/T");
  for (std::size_t k = 1; k < samples_.size(); ++k) {
    if (!(samples_[k].t > samples_[k - 1].t)) {
      throw DomainError("trace parameters must be strictly increasing");
    }
  }
}

ComplexPoint boundary_rational_form(int n, double t) {
  if (n < 1) throw DomainError("n must be >= 1");
  const double t0 = pi / (2.0 * n + 2.0);
  const double reduced = std::fmod(std::abs(t), pi);
  if (std::min(std::abs(reduced - t0), std::abs(reduced - (pi - t0))) < kRationalGuard) {
    throw NearSingularityError("rational boundary form is singular at t0 = pi/(2n+2)");
  }
  const double np1 = n + 1.0;
  const double c = std::cos(pi / np1);
  const double s = std::sin(t0);
  // cos 2t - cos(pi/(n+1)), in product form for accuracy near t0.
  const double d = -2.0 * std::sin(t + t0) * std::sin(t - t0);
  const double d2 = d * d;
  const double cos_n1 = std::cos(np1 * t);
  const double u = 4.0 * s * s / np1 * std::cos(t) * cos_n1 * cos_n1 / d2;
  const double v =
      (std::sin(2.0 * np1 * t) * std::cos(t) * (1.0 - c) - np1 * std::sin(t) * d) / (np1 * d2);
  return {u, v};
}

BoundaryTrace trace_symmetric_boundary(const SymmetricPolynomial& p, int grid_size) {
  require_grid(grid_size, kMinTraceGrid);
  const std::vector<double> t = uniform_nodes(0.0, pi / p.t_fold(), grid_size);
  const std::vector<ComplexPoint> values = sample(p, t);
  std::vector<BoundarySample> samples(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) samples[k] = {t[k], values[k].re, values[k].im};
  return BoundaryTrace(p.t_fold(), p.n(), std::move(samples));
}

BoundaryTrace trace_boundary(int n, int grid_size) {
  BoundaryTrace trace = trace_symmetric_boundary(as_symmetric(extremal_coeffs(n)), grid_size);
  const double t0 = pi / (2.0 * n + 2.0);
  double worst = 0.0;
  int nodes = 0;
  for (const BoundarySample& s : trace.samples()) {
    if (std::abs(s.t - t0) < kRationalExclusion) continue;
    const ComplexPoint r = boundary_rational_form(n, s.t);
    worst = std::max(worst, std::hypot(r.re - s.u, r.im - s.v));
    ++nodes;
  }
  if (worst > kRationalAgreement) {
    throw std::logic_error("rational boundary form disagrees with Horner by " +
                           std::to_string(worst));
  }
  trace.set_rational_check(worst, nodes);
  return trace;
}

std::vector<Point2> closed_polygon(const BoundaryTrace& trace) {
  const auto samples = trace.samples();
  const std::size_t g = samples.size() - 1;
  std::vector<Point2> sector;
  sector.reserve(2 * g);
  for (std::size_t r = 0; r < g; ++r) sector.push_back({samples[g - r].u, -samples[g - r].v});
  for (std::size_t r = 0; r < g; ++r) sector.push_back({samples[r].u, samples[r].v});

  const int t_fold = trace.t_fold();
  std::vector<Point2> polygon;
  polygon.reserve(sector.size() * static_cast<std::size_t>(t_fold));
  polygon.insert(polygon.end(), sector.begin(), sector.end());
  for (int m = 1; m < t_fold; ++m) {
    const double angle = 2.0 * pi * m / t_fold;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    for (const Point2& p : sector) polygon.push_back({c * p.x - s * p.y, s * p.x + c * p.y});
  }
  return polygon;
}

double polygon_parameter(const BoundaryTrace& trace, std::size_t k) {
  const auto samples = trace.samples();
  const std::size_t g = samples.size() - 1;
  const std::size_t m = k / (2 * g);
  const std::size_t r = k % (2 * g);
  const double local = r < g ? -samples[g - r].t : samples[r - g].t;
  return 2.0 * pi * static_cast<double>(m) / trace.t_fold() + local;
}

int winding_number(std::span<const Point2> polygon, Point2 point) {
  int winding = 0;
  const std::size_t m = polygon.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 a = polygon[i];
    const Point2 b = polygon[(i + 1) % m];
    const double side = (b.x - a.x) * (point.y - a.y) - (point.x - a.x) * (b.y - a.y);
    if (a.y <= point.y) {
      if (b.y > point.y && side > 0.0) ++winding;
    } else if (b.y <= point.y && side < 0.0) {
      --winding;
    }
  }
  return winding;
}

CertificateReport certify_statement_a(const BoundaryTrace& trace) {
  double margin = std::numeric_limits<double>::infinity();
  double where = 0.0;
  for (const BoundarySample& s : trace.samples()) {
    if (s.v < margin) {
      margin = s.v;
      where = s.t;
    }
  }
  return make_report(StatementId::A, margin, where, trace.grid_size(), kStatementATolerance,
                     false);
}

CertificateReport certify_statement_b(int n, int grid_size) {
  require_grid(grid_size, kMinTraceGrid);
  const auto p = as_symmetric(extremal_coeffs(n));
  const std::vector<double> t = uniform_nodes(0.0, 3.0 * pi / (2.0 * n + 2.0), grid_size);
  const auto values = sample(p, t);
  const auto [margin, where] = worst_decrease(t, values, &ComplexPoint::re);
  return make_report(StatementId::B, margin, where, grid_size, 0.0, true);
}

CertificateReport certify_statement_c(int n, int grid_size) {
  require_grid(grid_size, kMinTraceGrid);
  const auto p = as_symmetric(extremal_coeffs(n));
  if (n == 1) return make_report(StatementId::C, kVacuousMargin, pi / 2.0, grid_size, 0.0, true);
  const double left = pi / (n + 1.0);
  std::vector<double> t = uniform_nodes(left, pi / 2.0, grid_size);
  const double reference = eval_power_form(p, unit_point(left)).re;
  t.erase(t.begin());  // open at the left end
  const auto values = sample(p, t);
  double highest = -std::numeric_limits<double>::infinity();
  double where = t.front();
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (values[k].re > highest) {
      highest = values[k].re;
      where = t[k];
    }
  }
  return make_report(StatementId::C, reference - highest, where, grid_size, 0.0, true);
}

CertificateReport certify_statement_d(int n, int grid_size) {
  require_grid(grid_size, kMinTraceGrid);
  const auto p = as_symmetric(extremal_coeffs(n));
  if (n == 1) return make_report(StatementId::D, kVacuousMargin, pi / 2.0, grid_size, 0.0, true);
  std::vector<double> t = uniform_nodes(pi / (n + 1.0), pi / 2.0, grid_size);
  t.erase(t.begin());
  const auto values = sample(p, t);
  const auto [margin, where] = worst_decrease(t, values, &ComplexPoint::im);
  return make_report(StatementId::D, margin, where, grid_size, 0.0, true);
}

CertificateReport certify_aux_inequality(int grid_size) {
  require_grid(grid_size, kMinTraceGrid);
  const double right = pi / 7.0;
  double margin = std::numeric_limits<double>::infinity();
  double where = right;
  for (int k = 1; k <= grid_size; ++k) {
    const double x = k == grid_size ? right : right * k / grid_size;
    const double c = std::cos(x);
    const double half = std::sin(0.5 * x);
    // 1 - cos^3 x = (1 - cos x)(1 + cos x + cos^2 x), 1 - cos x = 2 sin^2(x/2).
    const double lhs = 2.0 * half * half * (1.0 + c + c * c);
    const double value = lhs - 4.0 / pi * x * std::sin(x);
    if (value < margin) {
      margin = value;
      where = x;
    }
  }
  return make_report(StatementId::Aux, margin, where, grid_size, 0.0, true);
}

CertificateReport certify_simple_curve(const BoundaryTrace& trace) {
  require_grid(trace.grid_size(), kMinSimpleCurveGrid);
  const std::vector<Point2> polygon = closed_polygon(trace);
  const SegmentPair closest = kernels::parallel::closest_nonadjacent_pair(polygon);
  return make_report(StatementId::SimpleCurve, closest.distance,
                     polygon_parameter(trace, closest.first), trace.grid_size(), 0.0, true);
}

}  // namespace univalent
