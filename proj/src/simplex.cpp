#include "univalent/simplex.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "univalent/errors.hpp"

namespace univalent {

namespace {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

// A row counts as violated once its slack drops below -kPrimalEps.
constexpr double kPrimalEps = 1e-11;
constexpr double kRatioEps = 1e-12;
// Harris allowance on the multipliers in the dual ratio test.
constexpr double kHarrisSlack = 1e-12;
constexpr double kBoxDualEps = 1e-9;

// Rows 0..rows-1 are the problem's own; rows+j is x_j <= bound and
// rows+cols+j is -x_j <= bound.
class Rows {
 public:
  explicit Rows(const InequalityLp& lp)
      : a_(lp.a.data(), lp.rows, lp.cols),
        b_(Eigen::Map<const Vector>(lp.b.data(), lp.rows)),
        m_(lp.rows),
        n_(lp.cols),
        bound_(lp.bound) {}

  int total() const { return m_ + 2 * n_; }
  bool is_box(int i) const { return i >= m_; }

  Vector normal(int i) const {
    if (i < m_) return a_.row(i).transpose();
    const int j = (i - m_) % n_;
    return (i - m_ < n_ ? 1.0 : -1.0) * Vector::Unit(n_, j);
  }
  double rhs(int i) const { return i < m_ ? b_[i] : bound_; }

  // Most violated row at x, ties to the smallest index; -1 if none.
  int most_violated(const Vector& x, double& slack_out) const {
    const Vector slack = b_ - a_ * x;
    int worst = -1;
    double lowest = -kPrimalEps;
    for (int i = 0; i < m_; ++i) {
      if (slack[i] < lowest) {
        lowest = slack[i];
        worst = i;
      }
    }
    for (int j = 0; j < n_; ++j) {
      const double up = bound_ - x[j];
      const double down = bound_ + x[j];
      if (up < lowest) {
        lowest = up;
        worst = m_ + j;
      }
      if (down < lowest) {
        lowest = down;
        worst = m_ + n_ + j;
      }
    }
    slack_out = lowest;
    return worst;
  }

  Matrix gather(const std::vector<int>& basis) const {
    Matrix out(n_, n_);
    for (int k = 0; k < n_; ++k) out.row(k) = normal(basis[static_cast<std::size_t>(k)]).transpose();
    return out;
  }

 private:
  Eigen::Map<const Matrix> a_;
  Vector b_;
  int m_;
  int n_;
  double bound_;
};

}  // namespace

SimplexResult solve_simplex(const InequalityLp& lp, long max_pivots) {
  const auto m = static_cast<std::size_t>(lp.rows);
  const auto n = static_cast<std::size_t>(lp.cols);
  if (lp.rows < 1 || lp.cols < 1 || lp.a.size() != m * n || lp.b.size() != m ||
      lp.c.size() != n || !(lp.bound > 0.0)) {
    throw DomainError("malformed linear program");
  }
  const Rows rows(lp);
  const Vector c = Eigen::Map<const Vector>(lp.c.data(), lp.cols);

  std::vector<int> basis(n);
  for (int j = 0; j < lp.cols; ++j) {
    basis[static_cast<std::size_t>(j)] = lp.c[static_cast<std::size_t>(j)] >= 0.0
                                             ? lp.rows + j
                                             : lp.rows + lp.cols + j;
  }

  Vector x;
  Vector y;
  long pivots = 0;
  for (;;) {
    const Matrix ab = rows.gather(basis);
    const Eigen::FullPivLU<Matrix> lu(ab);
    Vector bb(lp.cols);
    for (int k = 0; k < lp.cols; ++k) bb[k] = rows.rhs(basis[static_cast<std::size_t>(k)]);
    x = lu.solve(bb);
    y = ab.transpose().fullPivLu().solve(c);

    double slack = 0.0;
    const int enter = rows.most_violated(x, slack);
    if (enter < 0) break;
    if (pivots >= max_pivots) {
      throw IterationLimitError("simplex exceeded " + std::to_string(max_pivots) + " pivots");
    }

    // Write the entering normal in the basis normals, a_enter = ab^T w.
    // Raising its multiplier by theta lowers y by theta w, so the leaving
    // row is the first whose multiplier reaches zero. Harris: among rows
    // reaching zero within a small allowance, take the largest w_k, which
    // keeps the new basis away from singular.
    const Vector w = ab.transpose().fullPivLu().solve(rows.normal(enter));
    const double w_scale = w.cwiseAbs().maxCoeff();
    double limit = std::numeric_limits<double>::infinity();
    for (int k = 0; k < lp.cols; ++k) {
      if (w[k] > kRatioEps * w_scale) limit = std::min(limit, (std::max(y[k], 0.0) + kHarrisSlack) / w[k]);
    }
    int leave = -1;
    for (int k = 0; k < lp.cols; ++k) {
      if (w[k] <= kRatioEps * w_scale || std::max(y[k], 0.0) / w[k] > limit) continue;
      if (leave < 0 || w[k] > w[leave]) leave = k;
    }
    if (leave < 0) throw DomainError("linear program is infeasible");
    basis[static_cast<std::size_t>(leave)] = enter;
    ++pivots;
  }

  SimplexResult result;
  result.x.assign(x.data(), x.data() + x.size());
  result.duals.assign(m, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const int row = basis[k];
    const double dual = y[static_cast<Eigen::Index>(k)];
    if (rows.is_box(row)) {
      if (dual > kBoxDualEps) throw DomainError("linear program is unbounded");
      continue;
    }
    result.duals[static_cast<std::size_t>(row)] = dual;
  }
  result.basis = basis;
  result.objective = c.dot(x);
  result.pivots = pivots;
  return result;
}

}  // namespace univalent
