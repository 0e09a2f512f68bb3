#include "univalent/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "univalent/errors.hpp"

namespace univalent {

ChebyshevArgument::ChebyshevArgument(double theta) : theta_(theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw DomainError("Chebyshev argument theta must lie in (0, pi), got " +
                      std::to_string(theta));
  }
  x_ = std::cos(theta);
  sin_theta_ = std::sin(theta);
}

double chebyshev_u(const ChebyshevArgument& arg, int k) {
  if (k < -1) throw DomainError("Chebyshev index must be >= -1");
  if (k == -1) return 0.0;
  return std::sin((k + 1) * arg.theta()) / arg.sin_theta();
}

double chebyshev_u_prime(const ChebyshevArgument& arg, int k) {
  if (k < 0) throw DomainError("Chebyshev derivative index must be >= 0");
  // 1 - x^2 = sin^2(theta), which keeps its relative accuracy near x = 1.
  const double one_minus_x2 = arg.sin_theta() * arg.sin_theta();
  return ((k + 2) * chebyshev_u(arg, k - 1) - k * chebyshev_u(arg, k + 1)) /
         (2.0 * one_minus_x2);
}

}  // namespace univalent
