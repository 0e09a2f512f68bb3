#pragma once

#include <vector>

#include "univalent/certificate.hpp"
#include "univalent/polynomial.hpp"

namespace univalent {

/// The extremal problem restated over the ratios c_j = gamma_{j+1}/gamma_1:
///   maximize c_1  subject to  1 + 2 sum_{j=1}^{n-1} c_j cos(2 t_k j) >= 0
/// on grid nodes t_k = (k/(grid_size-1)) pi/2. gamma_1 = 1/(1 + c_1).
struct LinearProgram {
  int n = 0;
  std::vector<double> nodes;
  /// cos(2 t_k j), row-major, nodes.size() x num_vars().
  std::vector<double> cosines;

  int num_vars() const noexcept { return n - 1; }
  int num_rows() const noexcept { return static_cast<int>(nodes.size()); }
  /// 1 + 2 sum_j c_j cos(2 t_k j).
  double constraint_value(int row, const std::vector<double>& c) const;
};

inline constexpr double kFeasibilityTolerance = 1e-9;
inline constexpr double kOracleAgreementTolerance = 5e-4;
inline constexpr double kNonnegativityTolerance = 1e-10;

struct OracleSolution {
  std::vector<double> c;
  double objective_value = 0.0;  // c_1 at the optimum
  double gamma1 = 1.0;
  long iterations = 0;
  double feasibility_tol = kFeasibilityTolerance;
  /// Multipliers of the grid constraints (y_k >= 0) and
  /// sum_k y_k - objective_value.
  std::vector<double> duals;
  double duality_gap = 0.0;
  /// Smallest constraint value at the returned c.
  double min_constraint = 0.0;
};

/// Throws DomainError unless n >= 2 and grid_size >= 8 n. n = 1 has no free
/// ratios: J_1 = 1 directly.
LinearProgram build_lp(int n, int grid_size);

/// Throws IterationLimitError on cycling and std::logic_error if the
/// optimum violates a constraint by more than kFeasibilityTolerance.
OracleSolution solve_lp(const LinearProgram& lp);

/// Ratios gamma_{j+1}/gamma_1, j = 1..n-1, of the closed-form extremizer.
std::vector<double> extremal_gamma_ratios(int n);

/// Compares the LP optimum with extremal_gamma_ratios. worst_margin is
/// -max_j |c_j - ratio_j|; for this report worst_t carries the 1-based j of
/// that component rather than an angle.
CertificateReport verify_extremal_against_oracle(int n, int grid_size);

/// sum_j a_j cos((2j-1) t), summed term by term.
double cosine_sum(const OddPolynomial& p, double t);

/// gamma_1 cos t (1 + 2 sum_{j=2}^{n} (gamma_j/gamma_1) cos(2 (j-1) t)).
double factorized_cosine_sum(const GammaVector& g, double t);

/// min over [0, pi/2] of cosine_sum on grid_size uniform nodes; passes at
/// >= -kNonnegativityTolerance.
CertificateReport certify_nonnegativity(const OddPolynomial& p, int grid_size);

}  // namespace univalent
