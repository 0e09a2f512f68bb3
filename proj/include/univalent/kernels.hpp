#pragma once

#include <cstddef>
#include <span>

#include "univalent/complex_point.hpp"
#include "univalent/polynomial.hpp"

namespace univalent {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend constexpr bool operator==(Point2, Point2) = default;
};

/// Relative tolerance under which three points are treated as collinear.
inline constexpr double kCollinearTolerance = 1e-14;
/// Consecutive polygon vertices closer than this are degenerate.
inline constexpr double kDegenerateSegmentLength = 1e-15;

/// Sign of the turn a -> b -> c: +1 left, -1 right, 0 collinear within
/// kCollinearTolerance relative to |b - a| |c - a|.
int orientation(Point2 a, Point2 b, Point2 c);

/// Closed segments [p0, p1] and [q0, q1] share at least one point.
bool segments_intersect(Point2 p0, Point2 p1, Point2 q0, Point2 q1);

/// Euclidean distance between two closed segments; 0 when they intersect.
double segment_distance(Point2 p0, Point2 p1, Point2 q0, Point2 q1);

/// Closest pair of non-adjacent edges of a closed polygon. Edge i joins
/// vertex i to vertex (i + 1) mod M. Ties resolve to the lexicographically
/// smallest (distance, first, second) so every kernel variant agrees.
struct SegmentPair {
  double distance = 0.0;
  std::size_t first = 0;
  std::size_t second = 0;

  bool intersecting() const noexcept { return distance == 0.0; }
};

/// The data-parallel loops behind the geometry and oracle modules. Each has
/// a serial reference kept for testing and an OpenMP variant; both return
/// identical results.
namespace kernels {

namespace serial {

/// out[k] = F(e^{i t[k]}).
void sample_boundary(const SymmetricPolynomial& p, std::span<const double> t,
                     std::span<ComplexPoint> out);

/// rows[k * num_vars + j] = cos(2 t[k] (j + 1)).
void cosine_rows(int num_vars, std::span<const double> t, std::span<double> rows);

/// O(M^2) scan of every non-adjacent edge pair. Throws DomainError for
/// fewer than 4 vertices and DegenerateSegmentError on a zero-length edge.
SegmentPair closest_nonadjacent_pair(std::span<const Point2> polygon);

}  // namespace serial

namespace parallel {

void sample_boundary(const SymmetricPolynomial& p, std::span<const double> t,
                     std::span<ComplexPoint> out);

void cosine_rows(int num_vars, std::span<const double> t, std::span<double> rows);

/// Sweep over edges sorted by x-extent. The distance between edges i and
/// i + 2 bounds the answer, so only pairs whose bounding boxes lie within
/// that bound are measured.
SegmentPair closest_nonadjacent_pair(std::span<const Point2> polygon);

}  // namespace parallel

}  // namespace kernels

}  // namespace univalent
