#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "polder/numerics.hpp"
#include "polder/quadrature.hpp"

using namespace polder;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TEST_SUITE("numerics") {

TEST_CASE("pairwise sum") {
  CHECK(pairwise_sum({}) == 0.0);
  CHECK(pairwise_sum({4.25}) == 4.25);
  std::vector<double> v;
  for (int i = 1; i <= 1000; ++i) v.push_back(static_cast<double>(i));
  CHECK(pairwise_sum(v) == doctest::Approx(500500.0).epsilon(1e-15));
  // many equal small terms: pairwise stays at full precision
  std::vector<double> tenths(1000, 0.1);
  CHECK(pairwise_sum(tenths) == doctest::Approx(100.0).epsilon(1e-14));
}

TEST_CASE("periodic trapezoid integrates smooth periodic functions") {
  const double c2 = periodic_trapezoid([](double x) { return std::cos(x) * std::cos(x); }, kTwoPi);
  CHECK(c2 == doctest::Approx(std::numbers::pi).epsilon(1e-14));

  // exp(sin x) integrates to 2 pi I0(1)
  const double besselref = kTwoPi * std::cyl_bessel_i(0.0, 1.0);
  const double b = periodic_trapezoid([](double x) { return std::exp(std::sin(x)); }, kTwoPi);
  CHECK(b == doctest::Approx(besselref).epsilon(1e-13));
}

TEST_CASE("periodic trapezoid converges on integrals that cancel to zero") {
  // The exact integral of cos over a period is zero; only roundoff noise
  // remains in the sums, so convergence must be judged against the size of
  // the integrand, not of the (vanishing) result.
  const double z = periodic_trapezoid([](double x) { return std::cos(x); }, kTwoPi);
  CHECK(std::abs(z) < 1e-13);
  const double z3 = periodic_trapezoid([](double x) { return std::cos(3.0 * x + 0.7); }, kTwoPi);
  CHECK(std::abs(z3) < 1e-13);
}

TEST_CASE("adaptive Gauss-Legendre on finite intervals") {
  const double e1 = adaptive_gauss([](double x) { return std::exp(x); }, 0.0, 1.0);
  CHECK(e1 == doctest::Approx(std::numbers::e - 1.0).epsilon(1e-14));

  const double at = adaptive_gauss([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 10.0);
  CHECK(at == doctest::Approx(std::atan(10.0)).epsilon(1e-13));

  // sharp Gaussian forces subdivision
  const double g = adaptive_gauss([](double x) { return std::exp(-1000.0 * (x - 0.3) * (x - 0.3)); },
                                  0.0, 1.0);
  const double s = std::sqrt(std::numbers::pi / 1000.0);
  const double gref = 0.5 * s * (std::erf(0.3 * std::sqrt(1000.0)) + std::erf(0.7 * std::sqrt(1000.0)));
  CHECK(g == doctest::Approx(gref).epsilon(1e-12));

  // a split hint must not change the value
  const double gh = adaptive_gauss([](double x) { return std::exp(-1000.0 * (x - 0.3) * (x - 0.3)); },
                                   0.0, 1.0, {}, {0.25, 0.5});
  CHECK(gh == doctest::Approx(gref).epsilon(1e-12));
}

TEST_CASE("semi-infinite quadrature handles algebraic tails") {
  const double inv2 = adaptive_gauss_semi_infinite([](double x) { return 1.0 / (x * x); }, 1.0, 1.0);
  CHECK(inv2 == doctest::Approx(1.0).epsilon(1e-13));

  // integral of (1+x^2)^-2 from 1/2 to infinity
  const double lor = adaptive_gauss_semi_infinite(
      [](double x) { return 1.0 / ((1.0 + x * x) * (1.0 + x * x)); }, 0.5, 1.0);
  const double want = std::numbers::pi / 4.0 - 0.2 - 0.5 * std::atan(0.5);
  CHECK(lor == doctest::Approx(want).epsilon(1e-13));

  CHECK_THROWS_AS(adaptive_gauss_semi_infinite([](double x) { return x; }, 0.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("quadrature failure carries the best estimate") {
  QuadratureSettings strict;
  strict.rel_tol = 1e-16;
  strict.max_subdivisions = 1;
  bool threw = false;
  try {
    adaptive_gauss([](double x) { return std::exp(-1000.0 * (x - 0.3) * (x - 0.3)); }, 0.0, 1.0,
                   strict);
  } catch (const QuadratureError& e) {
    threw = true;
    CHECK(std::isfinite(e.best_estimate()));
    CHECK(e.error_bound() > 0.0);
  }
  CHECK(threw);
}

TEST_CASE("Richardson derivative") {
  const auto d = derivative_richardson([](double x) { return std::sin(x); }, 0.7, 0.1);
  CHECK(d.value == doctest::Approx(std::cos(0.7)).epsilon(1e-11));
  CHECK(d.error < 1e-8);
}

TEST_CASE("force and torque sign conventions") {
  // F = -dE/dh: for E = -1/h the force is attractive, -1/h^2
  const double f = force_numeric([](double h) { return -1.0 / h; }, 2.0);
  CHECK(f == doctest::Approx(-0.25).epsilon(1e-10));

  // tau = -dE/dtheta: for E = cos(2 theta), tau = 2 sin(2 theta)
  const double t = torque_numeric([](double th) { return std::cos(2.0 * th); }, 0.6);
  CHECK(t == doctest::Approx(2.0 * std::sin(1.2)).epsilon(1e-10));
}

TEST_CASE("Brent root finding") {
  const double r = brent_root([](double x) { return std::cos(x); }, 1.0, 2.0);
  CHECK(r == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-13));
  const double c = brent_root([](double x) { return x * x * x - 2.0; }, 1.0, 2.0);
  CHECK(c == doctest::Approx(std::cbrt(2.0)).epsilon(1e-13));
}

TEST_CASE("sign change scanning") {
  const auto br = sign_change_brackets([](double x) { return std::sin(x); }, 0.1, 9.0, 100);
  REQUIRE(br.size() == 2);
  CHECK(br[0].first < std::numbers::pi);
  CHECK(br[0].second > std::numbers::pi);
  CHECK(br[1].first < 2.0 * std::numbers::pi);
  CHECK(br[1].second > 2.0 * std::numbers::pi);
  CHECK(sign_change_brackets([](double x) { return 1.0 + x * x; }, -1.0, 1.0, 50).empty());
}

}  // TEST_SUITE
