#pragma once

#include "univalent/complex_point.hpp"
#include "univalent/polynomial.hpp"

namespace univalent {

/// Extremizer of min |F(i)| over univalent odd polynomials of degree 2n-1
/// with a_1 = 1:
///   a_j = U'_{2(n-j+1)}(cos(pi/(2n+2))) / U'_{2n}(cos(pi/(2n+2))).
/// a_1 is exactly 1. Throws DomainError for n < 1.
OddPolynomial extremal_coeffs(int n);

/// The same coefficients from the sine expression
///   a_j = ((n-j+2) sin(pi j/(n+1)) - (n-j+1) sin(pi (j-1)/(n+1)))
///         / ((n+1) sin(pi/(n+1))).
/// Kept as an independent cross-check of extremal_coeffs.
OddPolynomial extremal_coeffs_sine_form(int n);

GammaVector gamma_from_coeffs(const OddPolynomial& p);
OddPolynomial coeffs_from_gamma(const GammaVector& g);

/// J_n = sec^2(pi/(2n+2)) / 2.
double extremal_value(int n);

/// -i F(i) = a_1 - a_2 + a_3 - ..., the quantity J_n minimizes.
double alternating_coefficient_sum(const OddPolynomial& p);

/// Largest |z| accepted by the evaluators.
inline constexpr double kDiscSlack = 1e-9;
/// The closed form refuses points where |z^4 - 2 z^2 cos(pi/(n+1)) + 1| is
/// below this.
inline constexpr double kClosedFormGuard = 1e-9;

/// Horner evaluation on the closed unit disc. Throws DomainError when
/// |z| > 1 + kDiscSlack.
ComplexPoint eval_power_form(const OddPolynomial& p, ComplexPoint z);
ComplexPoint eval_power_form(const SymmetricPolynomial& p, ComplexPoint z);

/// Rational closed form of the extremizer,
///   z (4 z^2 (z^{2n+2}(1+z^2) + n(1-z^2) + 2) sin^2(pi/(2n+2)) + (n+1)(1-z^2)^3)
///     / ((n+1) (z^4 - 2 z^2 cos(pi/(n+1)) + 1)^2).
/// Throws NearSingularityError near the removable singularities.
ComplexPoint eval_closed_form(int n, ComplexPoint z);

/// Conjectured extremizer of the T-fold symmetric problem:
///   a_j = U'_{T(n-j+1)}(c) / U'_{Tn}(c)
///         * prod_{k=1}^{j-1} sin(pi (2 + T(k-1))/(Tn+2)) / sin(pi T k/(Tn+2)),
/// c = cos(pi/(Tn+2)). The empty product for j = 1 is 1.
SymmetricPolynomial conjectured_symmetric_coeffs(int t_fold, int n);

/// Extremizer of the segment-covering problem for univalent polynomials
/// z + a_2 z^2 + ... + a_n z^n:
///   a_j = U'_{n-j+1}(c) / U'_n(c) * U_{j-1}(c),  c = cos(pi/(n+2)).
/// Returned with T = 1.
SymmetricPolynomial segment_covering_coeffs(int n);

/// |F(e^{i pi/T})| for the conjectured T-symmetric extremizer.
double conjectured_koebe_radius(int t_fold, int n);

}  // namespace univalent
