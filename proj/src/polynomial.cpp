#include "univalent/polynomial.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "univalent/errors.hpp"

namespace univalent {

namespace {

void check_normalized(const std::vector<double>& coeffs) {
  if (coeffs.empty()) throw DomainError("polynomial needs at least one coefficient");
  if (!(std::abs(coeffs.front() - 1.0) <= kNormalizationTolerance)) {
    throw DomainError("polynomial must satisfy a_1 = 1, got a_1 = " +
                      std::to_string(coeffs.front()));
  }
}

}  // namespace

OddPolynomial::OddPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  check_normalized(coeffs_);
}

GammaVector::GammaVector(std::vector<double> gammas) : gammas_(std::move(gammas)) {
  if (gammas_.empty()) throw DomainError("gamma vector must not be empty");
}

double GammaVector::gamma(int s) const {
  if (s == n() + 1) return 0.0;
  return gammas_.at(static_cast<std::size_t>(s - 1));
}

SymmetricPolynomial::SymmetricPolynomial(int t_fold, std::vector<double> coeffs)
    : t_fold_(t_fold), coeffs_(std::move(coeffs)) {
  if (t_fold < 1) throw DomainError("symmetry order T must be >= 1");
  check_normalized(coeffs_);
}

SymmetricPolynomial as_symmetric(const OddPolynomial& p) {
  return SymmetricPolynomial(2, {p.coeffs().begin(), p.coeffs().end()});
}

}  // namespace univalent
