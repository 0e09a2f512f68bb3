#pragma once

namespace univalent {

/// An angle theta in (0, pi) together with x = cos(theta). Chebyshev
/// polynomials of the second kind are evaluated through theta, where
/// U_k(cos theta) = sin((k+1) theta) / sin(theta).
class ChebyshevArgument {
 public:
  /// Throws DomainError unless 0 < theta < pi.
  explicit ChebyshevArgument(double theta);

  double theta() const noexcept { return theta_; }
  double x() const noexcept { return x_; }
  double sin_theta() const noexcept { return sin_theta_; }

 private:
  double theta_;
  double x_;
  double sin_theta_;
};

/// U_k(cos theta). U_{-1} is taken to be 0; any k < -1 is a DomainError.
double chebyshev_u(const ChebyshevArgument& arg, int k);

/// U'_k(x) at x = cos theta, from
///   U'_k(x) = ((k + 2) U_{k-1}(x) - k U_{k+1}(x)) / (2 (1 - x^2)).
double chebyshev_u_prime(const ChebyshevArgument& arg, int k);

}  // namespace univalent
