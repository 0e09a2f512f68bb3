#include "univalent/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "univalent/errors.hpp"
#include "univalent/extremal.hpp"

namespace univalent {

namespace {

bool on_segment_box(Point2 a, Point2 b, Point2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double s = 0.0;
  if (len2 > 0.0) {
    s = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
  }
  return std::hypot(p.x - (a.x + s * dx), p.y - (a.y + s * dy));
}

bool better(const SegmentPair& a, const SegmentPair& b) {
  if (a.distance != b.distance) return a.distance < b.distance;
  if (a.first != b.first) return a.first < b.first;
  return a.second < b.second;
}

bool adjacent(std::size_t i, std::size_t j, std::size_t m) {
  const std::size_t d = i > j ? i - j : j - i;
  return d <= 1 || d == m - 1;
}

void check_polygon(std::span<const Point2> polygon) {
  const std::size_t m = polygon.size();
  if (m < 4) throw DomainError("closed polygon needs at least 4 vertices");
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 a = polygon[i];
    const Point2 b = polygon[(i + 1) % m];
    if (std::hypot(b.x - a.x, b.y - a.y) < kDegenerateSegmentLength) {
      throw DegenerateSegmentError("polygon edge " + std::to_string(i) + " has zero length");
    }
  }
}

SegmentPair measure(std::span<const Point2> polygon, std::size_t i, std::size_t j) {
  const std::size_t m = polygon.size();
  const std::size_t lo = std::min(i, j);
  const std::size_t hi = std::max(i, j);
  return {segment_distance(polygon[lo], polygon[(lo + 1) % m], polygon[hi],
                           polygon[(hi + 1) % m]),
          lo, hi};
}

constexpr SegmentPair kNoPair{std::numeric_limits<double>::infinity(),
                              std::numeric_limits<std::size_t>::max(),
                              std::numeric_limits<std::size_t>::max()};

}  // namespace

int orientation(Point2 a, Point2 b, Point2 c) {
  const double abx = b.x - a.x;
  const double aby = b.y - a.y;
  const double acx = c.x - a.x;
  const double acy = c.y - a.y;
  const double cross = abx * acy - aby * acx;
  const double scale = std::hypot(abx, aby) * std::hypot(acx, acy);
  if (std::abs(cross) <= kCollinearTolerance * scale) return 0;
  return cross > 0.0 ? 1 : -1;
}

bool segments_intersect(Point2 p0, Point2 p1, Point2 q0, Point2 q1) {
  const int o1 = orientation(p0, p1, q0);
  const int o2 = orientation(p0, p1, q1);
  const int o3 = orientation(q0, q1, p0);
  const int o4 = orientation(q0, q1, p1);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment_box(p0, p1, q0)) return true;
  if (o2 == 0 && on_segment_box(p0, p1, q1)) return true;
  if (o3 == 0 && on_segment_box(q0, q1, p0)) return true;
  if (o4 == 0 && on_segment_box(q0, q1, p1)) return true;
  return false;
}

double segment_distance(Point2 p0, Point2 p1, Point2 q0, Point2 q1) {
  if (segments_intersect(p0, p1, q0, q1)) return 0.0;
  return std::min({point_segment_distance(p0, q0, q1), point_segment_distance(p1, q0, q1),
                   point_segment_distance(q0, p0, p1), point_segment_distance(q1, p0, p1)});
}

namespace kernels {

namespace serial {

void sample_boundary(const SymmetricPolynomial& p, std::span<const double> t,
                     std::span<ComplexPoint> out) {
  for (std::size_t k = 0; k < t.size(); ++k) out[k] = eval_power_form(p, unit_point(t[k]));
}

void cosine_rows(int num_vars, std::span<const double> t, std::span<double> rows) {
  const auto cols = static_cast<std::size_t>(num_vars);
  for (std::size_t k = 0; k < t.size(); ++k) {
    for (std::size_t j = 0; j < cols; ++j) {
      rows[k * cols + j] = std::cos(2.0 * t[k] * static_cast<double>(j + 1));
    }
  }
}

SegmentPair closest_nonadjacent_pair(std::span<const Point2> polygon) {
  check_polygon(polygon);
  const std::size_t m = polygon.size();
  SegmentPair best = kNoPair;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 2; j < m; ++j) {
      if (adjacent(i, j, m)) continue;
      const SegmentPair candidate = measure(polygon, i, j);
      if (better(candidate, best)) best = candidate;
    }
  }
  return best;
}

}  // namespace serial

namespace parallel {

void sample_boundary(const SymmetricPolynomial& p, std::span<const double> t,
                     std::span<ComplexPoint> out) {
  const auto count = static_cast<std::ptrdiff_t>(t.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    out[static_cast<std::size_t>(k)] = eval_power_form(p, unit_point(t[static_cast<std::size_t>(k)]));
  }
}

void cosine_rows(int num_vars, std::span<const double> t, std::span<double> rows) {
  const auto cols = static_cast<std::size_t>(num_vars);
  const auto count = static_cast<std::ptrdiff_t>(t.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t kk = 0; kk < count; ++kk) {
    const auto k = static_cast<std::size_t>(kk);
    for (std::size_t j = 0; j < cols; ++j) {
      rows[k * cols + j] = std::cos(2.0 * t[k] * static_cast<double>(j + 1));
    }
  }
}

SegmentPair closest_nonadjacent_pair(std::span<const Point2> polygon) {
  check_polygon(polygon);
  const std::size_t m = polygon.size();

  double bound = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    bound = std::min(bound, measure(polygon, i, (i + 2) % m).distance);
  }

  struct Box {
    double xmin, xmax, ymin, ymax;
  };
  std::vector<Box> boxes(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 a = polygon[i];
    const Point2 b = polygon[(i + 1) % m];
    boxes[i] = {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (boxes[a].xmin != boxes[b].xmin) return boxes[a].xmin < boxes[b].xmin;
    return a < b;
  });

  SegmentPair best = kNoPair;
  const auto count = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel
  {
    SegmentPair local = kNoPair;
#pragma omp for schedule(dynamic, 256)
    for (std::ptrdiff_t pp = 0; pp < count; ++pp) {
      const auto p = static_cast<std::size_t>(pp);
      const std::size_t i = order[p];
      const Box& bi = boxes[i];
      for (std::size_t q = p + 1; q < m; ++q) {
        const std::size_t j = order[q];
        const Box& bj = boxes[j];
        if (bj.xmin > bi.xmax + bound) break;
        if (adjacent(i, j, m)) continue;
        if (bj.ymin > bi.ymax + bound || bi.ymin > bj.ymax + bound) continue;
        const SegmentPair candidate = measure(polygon, i, j);
        if (better(candidate, local)) local = candidate;
      }
    }
#pragma omp critical(univalent_closest_pair)
    if (better(local, best)) best = local;
  }
  return best;
}

}  // namespace parallel

}  // namespace kernels

}  // namespace univalent
