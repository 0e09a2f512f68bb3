#pragma once

#include <vector>

namespace univalent {

/// maximize c^T x  subject to  A x <= b  with x free. A is row-major,
/// rows x cols. The solver also imposes |x_j| <= bound; an optimum that
/// leans on that box is reported as unbounded, so bound should sit well
/// outside any vertex of interest.
struct InequalityLp {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> c;
  double bound = 1e3;
};

struct SimplexResult {
  std::vector<double> x;
  std::vector<double> duals;  // one per row, >= 0, zero off the final basis
  std::vector<int> basis;     // tight rows defining the vertex
  double objective = 0.0;
  long pivots = 0;
};

inline constexpr long kMaxPivots = 1'000'000;

/// Dual simplex. The start is the box vertex where x_1.. sit on the bound
/// matching the sign of c, which is dual feasible; each pivot brings in the
/// most violated row and drops the basis row chosen by the dual ratio test.
/// The vertex and multipliers are re-solved from the original rows at every
/// basis so rounding never accumulates. Throws DomainError if the problem
/// is malformed, infeasible, or unbounded, and IterationLimitError after
/// max_pivots.
SimplexResult solve_simplex(const InequalityLp& lp, long max_pivots = kMaxPivots);

}  // namespace univalent
