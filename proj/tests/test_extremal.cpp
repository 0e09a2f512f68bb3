#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "univalent/errors.hpp"
#include "univalent/extremal.hpp"
#include "univalent/summation.hpp"

using namespace univalent;
using std::numbers::pi;

namespace {

double sec2(double x) { return 1.0 / (std::cos(x) * std::cos(x)); }

double max_diff(std::span<const double> a, std::span<const double> b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_CASE("small extremal polynomials") {
  CHECK(extremal_coeffs(1).coeffs().size() == 1);
  CHECK(extremal_coeffs(1).a(1) == 1.0);
  const OddPolynomial p2 = extremal_coeffs(2);
  CHECK(p2.a(1) == 1.0);
  CHECK(p2.a(2) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(p2.a(1) - p2.a(2) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(extremal_coeffs_sine_form(2).a(2) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(extremal_coeffs_sine_form(1).a(1) == 1.0);
  CHECK(p2.degree() == 3);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(extremal_coeffs(0), DomainError);
  CHECK_THROWS_AS(extremal_coeffs_sine_form(0), DomainError);
  CHECK_THROWS_AS(extremal_value(0), DomainError);
  CHECK_THROWS_AS(conjectured_symmetric_coeffs(0, 3), DomainError);
  CHECK_THROWS_AS(conjectured_symmetric_coeffs(2, 0), DomainError);
  CHECK_THROWS_AS(conjectured_koebe_radius(0, 1), DomainError);
  CHECK_THROWS_AS(OddPolynomial({}), DomainError);
  CHECK_THROWS_AS(OddPolynomial({1.1, 0.2}), DomainError);
  CHECK_THROWS_AS(GammaVector({}), DomainError);
}

TEST_CASE("Chebyshev and sine forms agree for n <= 100") {
  for (int n = 1; n <= 100; ++n) {
    CHECK(max_diff(extremal_coeffs(n).coeffs(), extremal_coeffs_sine_form(n).coeffs()) <= 1e-12);
  }
}

TEST_CASE("extremal value identity for n <= 200") {
  for (int n = 1; n <= 200; ++n) {
    const double j_n = extremal_value(n);
    CHECK(j_n == doctest::Approx(0.5 * sec2(pi / (2.0 * n + 2.0))).epsilon(1e-15));
    CHECK(std::abs(alternating_coefficient_sum(extremal_coeffs(n)) - j_n) <= 1e-12 * j_n);
  }
  CHECK(extremal_value(1) == doctest::Approx(1.0));
  CHECK(extremal_value(2) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("extremal value decreases toward one half") {
  double prev = extremal_value(1);
  for (int n = 2; n <= 1000; ++n) {
    const double j_n = extremal_value(n);
    CHECK(j_n < prev);
    CHECK(j_n > 0.5);
    prev = j_n;
  }
}

TEST_CASE("gamma_1, last coefficient and positivity") {
  for (int n = 1; n <= 200; ++n) {
    const OddPolynomial p = extremal_coeffs(n);
    const double h = pi / (2.0 * n + 2.0);
    CHECK(p.a(1) == 1.0);
    CHECK(std::abs(gamma_from_coeffs(p).gamma(1) - 1.0 / (2.0 * std::cos(h) * std::cos(h))) <= 1e-12);
    CHECK(std::abs(p.a(n) - 4.0 / (n + 1) * std::sin(h) * std::sin(h)) <= 1e-12);
    for (double a : p.coeffs()) CHECK(a > 0.0);
  }
}

TEST_CASE("gamma bijection examples") {
  const GammaVector g1 = gamma_from_coeffs(OddPolynomial({1.0}));
  CHECK(g1.n() == 1);
  CHECK(g1.gamma(1) == 1.0);
  CHECK(g1.gamma(2) == 0.0);
  const GammaVector g2 = gamma_from_coeffs(OddPolynomial({1.0, 1.0 / 3.0}));
  CHECK(g2.gamma(1) == doctest::Approx(2.0 / 3.0));
  CHECK(g2.gamma(2) == doctest::Approx(1.0 / 3.0));
  const OddPolynomial back = coeffs_from_gamma(GammaVector({2.0 / 3.0, 1.0 / 3.0}));
  CHECK(back.a(1) == 1.0);
  CHECK(back.a(2) == doctest::Approx(1.0 / 3.0));
  CHECK(coeffs_from_gamma(GammaVector({1.0})).a(1) == 1.0);
}

TEST_CASE("gamma bijection round trips on random vectors") {
  std::mt19937_64 rng(20261015);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_int_distribution<int> size(1, 50);
  for (int trial = 0; trial < 256; ++trial) {
    const int n = size(rng);
    std::vector<double> a(static_cast<std::size_t>(n));
    a[0] = 1.0;
    for (int j = 1; j < n; ++j) a[j] = coef(rng);
    const OddPolynomial p(a);
    const GammaVector g = gamma_from_coeffs(p);
    CHECK(std::abs(g.gamma(1) + (n > 1 ? g.gamma(2) : 0.0) - 1.0) <= 1e-14);
    CHECK(max_diff(coeffs_from_gamma(g).coeffs(), p.coeffs()) <= 1e-14);

    std::vector<double> gs(static_cast<std::size_t>(n));
    for (double& x : gs) x = coef(rng);
    gs[0] = 1.0 - (n > 1 ? gs[1] : 0.0);
    const GammaVector gv(gs);
    CHECK(max_diff(gamma_from_coeffs(coeffs_from_gamma(gv)).gammas(), gv.gammas()) <= 1e-14);
  }
}

TEST_CASE("power form values") {
  const ComplexPoint i{0.0, 1.0};
  const ComplexPoint f1 = eval_power_form(OddPolynomial({1.0}), i);
  CHECK(f1.re == 0.0);
  CHECK(f1.im == 1.0);
  const OddPolynomial p2({1.0, 1.0 / 3.0});
  const ComplexPoint f2 = eval_power_form(p2, i);
  CHECK(f2.re == doctest::Approx(0.0));
  CHECK(f2.im == doctest::Approx(2.0 / 3.0));
  const ComplexPoint one = eval_power_form(p2, ComplexPoint{1.0, 0.0});
  CHECK(one.re == doctest::Approx(4.0 / 3.0));
  CHECK(one.im == 0.0);
  CHECK_THROWS_AS(eval_power_form(p2, ComplexPoint{1.01, 0.0}), DomainError);
  CHECK_NOTHROW(eval_power_form(p2, ComplexPoint{1.0 + 1e-10, 0.0}));
}

TEST_CASE("closed form values") {
  const ComplexPoint half = eval_closed_form(1, ComplexPoint{0.5, 0.0});
  CHECK(half.re == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(half.im == doctest::Approx(0.0).scale(1.0));
  const ComplexPoint at_i = eval_closed_form(2, ComplexPoint{0.0, 1.0});
  CHECK(at_i.re == doctest::Approx(0.0).scale(1.0));
  CHECK(at_i.im == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("closed form near its removable singularity") {
  for (int n : {1, 2, 5, 20}) {
    const double h = pi / (2.0 * n + 2.0);
    for (double angle : {h, -h, pi - h, pi + h}) {
      CHECK_THROWS_AS(eval_closed_form(n, unit_point(angle)), NearSingularityError);
    }
  }
}

TEST_CASE("closed form agrees with the power form inside the disc") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> radius(0.0, 0.95);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
  for (int n = 1; n <= 50; ++n) {
    const OddPolynomial p = extremal_coeffs(n);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const double r = std::sqrt(radius(rng) / 0.95) * 0.95;
      const ComplexPoint z = r * unit_point(angle(rng));
      worst = std::max(worst, modulus(eval_closed_form(n, z) - eval_power_form(p, z)));
    }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("symmetric family reduces to the odd extremizer at T = 2") {
  for (int n = 1; n <= 100; ++n) {
    const SymmetricPolynomial q = conjectured_symmetric_coeffs(2, n);
    CHECK(q.t_fold() == 2);
    CHECK(q.a(1) == 1.0);
    CHECK(max_diff(q.coeffs(), extremal_coeffs(n).coeffs()) <= 1e-12);
  }
  const SymmetricPolynomial s = as_symmetric(extremal_coeffs(4));
  CHECK(s.degree() == extremal_coeffs(4).degree());
}

TEST_CASE("symmetric family at T = 1 reduces to the segment-covering extremizer") {
  for (int n = 1; n <= 100; ++n) {
    const SymmetricPolynomial q = conjectured_symmetric_coeffs(1, n);
    const SymmetricPolynomial s = segment_covering_coeffs(n);
    CHECK(max_diff(q.coeffs(), s.coeffs()) <= 1e-12);
    CHECK(q.degree() == n);
  }
}

TEST_CASE("Koebe radius values") {
  CHECK(conjectured_koebe_radius(2, 2) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(conjectured_koebe_radius(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
  double prev = 2.0;
  for (int n = 1; n <= 500; ++n) {
    const double r1 = conjectured_koebe_radius(1, n);
    CHECK(std::abs(r1 - 0.25 * sec2(pi / (n + 2.0))) <= 1e-10);
    CHECK(r1 < prev);
    prev = r1;
    if (n <= 100) CHECK(std::abs(conjectured_koebe_radius(2, n) - extremal_value(n)) <= 1e-10);
  }
  CHECK(prev == doctest::Approx(0.25).epsilon(1e-4));
}

TEST_CASE("T-fold polynomial power form") {
  const SymmetricPolynomial q(4, {1.0, 0.5});
  // z + 0.5 z^5 at z = i is i + 0.5 i
  const ComplexPoint v = eval_power_form(q, ComplexPoint{0.0, 1.0});
  CHECK(v.re == doctest::Approx(0.0).scale(1.0));
  CHECK(v.im == doctest::Approx(1.5));
  CHECK(q.degree() == 5);
  CHECK_THROWS_AS(SymmetricPolynomial(0, {1.0}), DomainError);
}

TEST_CASE("pairwise summation") {
  std::vector<double> v(1000, 0.1);
  CHECK(pairwise_sum(v) == doctest::Approx(100.0).epsilon(1e-15));
  CHECK(pairwise_sum(std::span<const double>{}) == 0.0);
}
