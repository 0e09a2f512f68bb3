#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace univalent {

/// Tolerance on a_1 = 1 accepted when a polynomial is built from arbitrary
/// coefficients. The extremal constructors normalize a_1 to exactly 1.
inline constexpr double kNormalizationTolerance = 1e-12;

/// F(z) = sum_{j=1}^{n} a_j z^{2j-1} with real coefficients and a_1 = 1.
class OddPolynomial {
 public:
  /// Throws DomainError when coeffs is empty or |a_1 - 1| exceeds
  /// kNormalizationTolerance.
  explicit OddPolynomial(std::vector<double> coeffs);

  int n() const noexcept { return static_cast<int>(coeffs_.size()); }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  /// 1-based, as a_j.
  double a(int j) const { return coeffs_.at(static_cast<std::size_t>(j - 1)); }
  /// Degree 2n - 1.
  int degree() const noexcept { return 2 * n() - 1; }

 private:
  std::vector<double> coeffs_;
};

/// gamma_1..gamma_n with gamma_{n+1} = 0 implied, linked to OddPolynomial by
/// gamma_s = sum_{j>=s} (-1)^{s+j} a_j and a_s = gamma_s + gamma_{s+1}.
class GammaVector {
 public:
  /// Throws DomainError on an empty vector.
  explicit GammaVector(std::vector<double> gammas);

  int n() const noexcept { return static_cast<int>(gammas_.size()); }
  std::span<const double> gammas() const noexcept { return gammas_; }
  /// 1-based; returns 0 for s == n + 1.
  double gamma(int s) const;

 private:
  std::vector<double> gammas_;
};

/// F(z) = sum_{j=1}^{n} a_j z^{T(j-1)+1}: invariant under z -> e^{2 pi i/T} z.
class SymmetricPolynomial {
 public:
  /// Throws DomainError when t_fold < 1, coeffs is empty, or a_1 is not 1.
  SymmetricPolynomial(int t_fold, std::vector<double> coeffs);

  int t_fold() const noexcept { return t_fold_; }
  int n() const noexcept { return static_cast<int>(coeffs_.size()); }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double a(int j) const { return coeffs_.at(static_cast<std::size_t>(j - 1)); }
  int degree() const noexcept { return t_fold_ * (n() - 1) + 1; }

 private:
  int t_fold_;
  std::vector<double> coeffs_;
};

/// The odd polynomial seen as the T = 2 member of the symmetric family.
SymmetricPolynomial as_symmetric(const OddPolynomial& p);

}  // namespace univalent
