#pragma once

#include <span>
#include <vector>

#include "univalent/certificate.hpp"
#include "univalent/complex_point.hpp"
#include "univalent/kernels.hpp"
#include "univalent/polynomial.hpp"

namespace univalent {

struct BoundarySample {
  double t = 0.0;
  double u = 0.0;  // Re F(e^{it})
  double v = 0.0;  // Im F(e^{it})
};

/// Samples of F(e^{it}) over the fundamental arc t in [0, pi/T]; for the odd
/// extremizer (T = 2) this is the quarter arc [0, pi/2].
class BoundaryTrace {
 public:
  /// Throws DomainError unless there are at least 2 samples, t is strictly
  /// increasing, starts at 0 and ends at pi/T.
  BoundaryTrace(int t_fold, int n, std::vector<BoundarySample> samples);

  int t_fold() const noexcept { return t_fold_; }
  int n() const noexcept { return n_; }
  int grid_size() const noexcept { return static_cast<int>(samples_.size()); }
  std::span<const BoundarySample> samples() const noexcept { return samples_; }

  /// Largest |Horner - rational form| seen by trace_boundary, and at how
  /// many nodes it was compared. Zero nodes for traces built otherwise.
  double rational_discrepancy() const noexcept { return rational_discrepancy_; }
  int rational_nodes() const noexcept { return rational_nodes_; }
  void set_rational_check(double discrepancy, int nodes) noexcept {
    rational_discrepancy_ = discrepancy;
    rational_nodes_ = nodes;
  }

 private:
  int t_fold_;
  int n_;
  std::vector<BoundarySample> samples_;
  double rational_discrepancy_ = 0.0;
  int rational_nodes_ = 0;
};

inline constexpr int kMinTraceGrid = 16;
inline constexpr int kMinSimpleCurveGrid = 256;
/// Nodes closer than this to t0 = pi/(2n+2) skip the rational cross-check.
inline constexpr double kRationalExclusion = 1e-3;
inline constexpr double kRationalAgreement = 1e-8;
inline constexpr double kStatementATolerance = 1e-12;

/// u(t) + i v(t) from the rational expressions in t. Throws
/// NearSingularityError within 1e-9 of t0 = pi/(2n+2) (mod reflections),
/// where both have a removable discontinuity.
ComplexPoint boundary_rational_form(int n, double t);

/// Boundary of the extremal odd polynomial on `grid_size` uniform nodes of
/// [0, pi/2], evaluated with Horner. The rational forms are compared at
/// every node at least kRationalExclusion from t0; throws std::logic_error
/// if they disagree by more than kRationalAgreement.
BoundaryTrace trace_boundary(int n, int grid_size);

/// Boundary of any T-symmetric polynomial on `grid_size` uniform nodes of
/// [0, pi/T].
BoundaryTrace trace_symmetric_boundary(const SymmetricPolynomial& p, int grid_size);

/// Full closed boundary: the arc together with its conjugate covers
/// [-pi/T, pi/T], which is then rotated by 2 pi m/T for m = 0..T-1.
/// Returns 2 (grid_size - 1) T vertices; the closing edge is implicit.
std::vector<Point2> closed_polygon(const BoundaryTrace& trace);

/// Boundary parameter theta in [-pi/T, 2 pi - pi/T) of polygon vertex k.
double polygon_parameter(const BoundaryTrace& trace, std::size_t k);

/// Winding number of a closed polygon around a point not on it.
int winding_number(std::span<const Point2> polygon, Point2 point);

CertificateReport certify_statement_a(const BoundaryTrace& trace);
CertificateReport certify_statement_b(int n, int grid_size);
CertificateReport certify_statement_c(int n, int grid_size);
CertificateReport certify_statement_d(int n, int grid_size);
CertificateReport certify_aux_inequality(int grid_size);
/// Requires grid_size >= kMinSimpleCurveGrid. worst_margin is the smallest
/// distance between non-adjacent edges of closed_polygon(trace).
CertificateReport certify_simple_curve(const BoundaryTrace& trace);

}  // namespace univalent
