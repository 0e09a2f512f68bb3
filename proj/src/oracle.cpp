#include "univalent/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "univalent/errors.hpp"
#include "univalent/extremal.hpp"
#include "univalent/kernels.hpp"
#include "univalent/simplex.hpp"
#include "univalent/summation.hpp"

namespace univalent {

namespace {

using std::numbers::pi;

constexpr double kCoefficientBox = 64.0;

std::vector<double> quarter_nodes(int grid_size) {
  std::vector<double> t(static_cast<std::size_t>(grid_size));
  for (int k = 0; k < grid_size; ++k) t[k] = pi / 2.0 * k / (grid_size - 1);
  t.back() = pi / 2.0;
  return t;
}

}  // namespace

double LinearProgram::constraint_value(int row, const std::vector<double>& c) const {
  const auto vars = static_cast<std::size_t>(num_vars());
  const double* cos_row = &cosines[static_cast<std::size_t>(row) * vars];
  double s = 0.0;
  for (std::size_t j = 0; j < vars; ++j) s += c[j] * cos_row[j];
  return 1.0 + 2.0 * s;
}

LinearProgram build_lp(int n, int grid_size) {
  if (n < 2) throw DomainError("the LP oracle needs n >= 2 (J_1 = 1 has no free ratios)");
  if (grid_size < 8 * n) {
    throw DomainError("LP grid must have at least 8 n nodes, got " + std::to_string(grid_size));
  }
  LinearProgram lp;
  lp.n = n;
  lp.nodes = quarter_nodes(grid_size);
  lp.cosines.resize(lp.nodes.size() * static_cast<std::size_t>(lp.num_vars()));
  kernels::parallel::cosine_rows(lp.num_vars(), lp.nodes, lp.cosines);
  return lp;
}

OracleSolution solve_lp(const LinearProgram& lp) {
  const int vars = lp.num_vars();
  const int rows = lp.num_rows();
  const auto cols = static_cast<std::size_t>(vars);

  // Row k reads  -2 sum_j cos(2 t_k j) c_j <= 1.
  InequalityLp form;
  form.rows = rows;
  form.cols = vars;
  form.a.resize(static_cast<std::size_t>(rows) * cols);
  for (std::size_t i = 0; i < form.a.size(); ++i) form.a[i] = -2.0 * lp.cosines[i];
  form.b.assign(static_cast<std::size_t>(rows), 1.0);
  form.c.assign(cols, 0.0);
  form.c[0] = 1.0;
  // Nonnegativity forces |c_j| <= 1 on the continuum, so this box never binds.
  form.bound = kCoefficientBox;

  const SimplexResult raw = solve_simplex(form);
  OracleSolution sol;
  sol.iterations = raw.pivots;
  sol.c = raw.x;
  sol.duals = raw.duals;
  std::vector<double> values(static_cast<std::size_t>(rows));
  for (int k = 0; k < rows; ++k) values[k] = lp.constraint_value(k, sol.c);

  sol.objective_value = sol.c.front();
  sol.gamma1 = 1.0 / (1.0 + sol.objective_value);
  sol.duality_gap = pairwise_sum(sol.duals) - sol.objective_value;
  sol.min_constraint = *std::min_element(values.begin(), values.end());
  if (sol.min_constraint < -sol.feasibility_tol) {
    throw std::logic_error("simplex optimum violates a grid constraint by " +
                           std::to_string(-sol.min_constraint));
  }
  return sol;
}

std::vector<double> extremal_gamma_ratios(int n) {
  const GammaVector g = gamma_from_coeffs(extremal_coeffs(n));
  std::vector<double> ratios;
  for (int j = 1; j < n; ++j) ratios.push_back(g.gamma(j + 1) / g.gamma(1));
  return ratios;
}

CertificateReport verify_extremal_against_oracle(int n, int grid_size) {
  const OracleSolution sol = solve_lp(build_lp(n, grid_size));
  const std::vector<double> expected = extremal_gamma_ratios(n);
  double worst = 0.0;
  int where = 1;
  for (std::size_t j = 0; j < expected.size(); ++j) {
    const double diff = std::abs(sol.c[j] - expected[j]);
    if (diff > worst) {
      worst = diff;
      where = static_cast<int>(j) + 1;
    }
  }
  return make_report(StatementId::OracleAgreement, -worst, where, grid_size,
                     kOracleAgreementTolerance, false);
}

double cosine_sum(const OddPolynomial& p, double t) {
  std::vector<double> terms(static_cast<std::size_t>(p.n()));
  for (int j = 1; j <= p.n(); ++j) terms[j - 1] = p.a(j) * std::cos((2.0 * j - 1.0) * t);
  return pairwise_sum(terms);
}

double factorized_cosine_sum(const GammaVector& g, double t) {
  const double g1 = g.gamma(1);
  std::vector<double> terms(static_cast<std::size_t>(g.n()));
  terms[0] = 1.0;
  for (int j = 2; j <= g.n(); ++j) terms[j - 1] = 2.0 * (g.gamma(j) / g1) * std::cos(2.0 * (j - 1) * t);
  return g1 * std::cos(t) * pairwise_sum(terms);
}

CertificateReport certify_nonnegativity(const OddPolynomial& p, int grid_size) {
  if (grid_size < 2) throw DomainError("nonnegativity grid needs at least 2 nodes");
  const std::vector<double> t = quarter_nodes(grid_size);
  std::vector<double> values(t.size());
  const auto count = static_cast<std::ptrdiff_t>(t.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    values[static_cast<std::size_t>(k)] = cosine_sum(p, t[static_cast<std::size_t>(k)]);
  }
  const auto lowest = std::min_element(values.begin(), values.end());
  return make_report(StatementId::Nonnegativity, *lowest,
                     t[static_cast<std::size_t>(lowest - values.begin())], grid_size,
                     kNonnegativityTolerance, false);
}

}  // namespace univalent
