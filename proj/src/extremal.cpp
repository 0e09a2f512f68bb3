#include "univalent/extremal.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "univalent/chebyshev.hpp"
#include "univalent/errors.hpp"
#include "univalent/summation.hpp"

namespace univalent {

namespace {

using std::numbers::pi;

void require_positive(int value, const char* what) {
  if (value < 1) {
    throw DomainError(std::string(what) + " must be >= 1, got " + std::to_string(value));
  }
}

/// Divides through by a_1 so the first coefficient is exactly 1.
std::vector<double> normalize(std::vector<double> coeffs) {
  const double lead = coeffs.front();
  for (double& c : coeffs) c /= lead;
  coeffs.front() = 1.0;
  return coeffs;
}

void require_in_disc(ComplexPoint z) {
  if (modulus(z) > 1.0 + kDiscSlack) {
    throw DomainError("evaluation point lies outside the closed unit disc");
  }
}

ComplexPoint horner(std::span<const double> coeffs, ComplexPoint w) {
  ComplexPoint acc{coeffs.back(), 0.0};
  for (std::size_t j = coeffs.size() - 1; j-- > 0;) {
    acc = acc * w + ComplexPoint{coeffs[j], 0.0};
  }
  return acc;
}

}  // namespace

OddPolynomial extremal_coeffs(int n) {
  require_positive(n, "n");
  const ChebyshevArgument arg(pi / (2.0 * n + 2.0));
  const double denom = chebyshev_u_prime(arg, 2 * n);
  std::vector<double> a(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    a[j - 1] = chebyshev_u_prime(arg, 2 * (n - j + 1)) / denom;
  }
  return OddPolynomial(normalize(std::move(a)));
}

OddPolynomial extremal_coeffs_sine_form(int n) {
  require_positive(n, "n");
  const double step = pi / (n + 1.0);
  const double scale = (n + 1.0) * std::sin(step);
  std::vector<double> a(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    a[j - 1] = ((n - j + 2.0) * std::sin(step * j) - (n - j + 1.0) * std::sin(step * (j - 1))) /
               scale;
  }
  return OddPolynomial(normalize(std::move(a)));
}

GammaVector gamma_from_coeffs(const OddPolynomial& p) {
  const int n = p.n();
  std::vector<double> gammas(static_cast<std::size_t>(n));
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (int s = 1; s <= n; ++s) {
    terms.clear();
    for (int j = s; j <= n; ++j) {
      terms.push_back(((s + j) % 2 == 0) ? p.a(j) : -p.a(j));
    }
    gammas[s - 1] = pairwise_sum(terms);
  }
  return GammaVector(std::move(gammas));
}

OddPolynomial coeffs_from_gamma(const GammaVector& g) {
  std::vector<double> a(static_cast<std::size_t>(g.n()));
  for (int s = 1; s <= g.n(); ++s) a[s - 1] = g.gamma(s) + g.gamma(s + 1);
  return OddPolynomial(std::move(a));
}

double extremal_value(int n) {
  require_positive(n, "n");
  const double c = std::cos(pi / (2.0 * n + 2.0));
  return 0.5 / (c * c);
}

double alternating_coefficient_sum(const OddPolynomial& p) {
  std::vector<double> terms(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t j = 1; j < terms.size(); j += 2) terms[j] = -terms[j];
  return pairwise_sum(terms);
}

ComplexPoint eval_power_form(const OddPolynomial& p, ComplexPoint z) {
  require_in_disc(z);
  return z * horner(p.coeffs(), z * z);
}

ComplexPoint eval_power_form(const SymmetricPolynomial& p, ComplexPoint z) {
  require_in_disc(z);
  return z * horner(p.coeffs(), power(z, static_cast<unsigned>(p.t_fold())));
}

ComplexPoint eval_closed_form(int n, ComplexPoint z) {
  require_positive(n, "n");
  require_in_disc(z);
  const double c = std::cos(pi / (n + 1.0));
  const double s = std::sin(pi / (2.0 * n + 2.0));
  const double s2 = s * s;
  const ComplexPoint one{1.0, 0.0};
  const ComplexPoint z2 = z * z;
  const ComplexPoint denom = z2 * z2 - (2.0 * c) * z2 + one;
  if (modulus(denom) < kClosedFormGuard) {
    throw NearSingularityError("closed form is near a removable singularity; use Horner");
  }
  const ComplexPoint z_2n2 = power(z2, static_cast<unsigned>(n + 1));
  const ComplexPoint one_minus_z2 = one - z2;
  const ComplexPoint cube = one_minus_z2 * one_minus_z2 * one_minus_z2;
  const ComplexPoint inner = z_2n2 * (one + z2) + static_cast<double>(n) * one_minus_z2 +
                             ComplexPoint{2.0, 0.0};
  const ComplexPoint numer = (4.0 * s2) * (z2 * inner) + (n + 1.0) * cube;
  return z * numer / ((n + 1.0) * (denom * denom));
}

SymmetricPolynomial conjectured_symmetric_coeffs(int t_fold, int n) {
  require_positive(t_fold, "T");
  require_positive(n, "n");
  const double base = static_cast<double>(t_fold) * n + 2.0;
  const ChebyshevArgument arg(pi / base);
  const double denom = chebyshev_u_prime(arg, t_fold * n);
  std::vector<double> a(static_cast<std::size_t>(n));
  double product = 1.0;
  for (int j = 1; j <= n; ++j) {
    if (j >= 2) {
      const int k = j - 1;
      product *= std::sin(pi * (2.0 + t_fold * (k - 1.0)) / base) /
                 std::sin(pi * static_cast<double>(t_fold) * k / base);
    }
    a[j - 1] = chebyshev_u_prime(arg, t_fold * (n - j + 1)) / denom * product;
  }
  return SymmetricPolynomial(t_fold, normalize(std::move(a)));
}

SymmetricPolynomial segment_covering_coeffs(int n) {
  require_positive(n, "n");
  const ChebyshevArgument arg(pi / (n + 2.0));
  const double denom = chebyshev_u_prime(arg, n);
  std::vector<double> a(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    a[j - 1] = chebyshev_u_prime(arg, n - j + 1) / denom * chebyshev_u(arg, j - 1);
  }
  return SymmetricPolynomial(1, normalize(std::move(a)));
}

double conjectured_koebe_radius(int t_fold, int n) {
  const SymmetricPolynomial p = conjectured_symmetric_coeffs(t_fold, n);
  return modulus(eval_power_form(p, unit_point(pi / t_fold)));
}

}  // namespace univalent
