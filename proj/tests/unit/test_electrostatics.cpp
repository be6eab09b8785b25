// Permanent dipole against a polarized ring. The axially polarized ring has
// the full closed set (energy, force, torque); the radially polarized one a
// single cosine form; the tangentially polarized one no interaction at all.

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "polder/electrostatics.hpp"
#include "polder/numerics.hpp"
#include "support.hpp"

using namespace polder;
using testsup::rel_dev;

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 tilted(double theta) { return {std::sin(theta), 0.0, std::cos(theta)}; }

}  // namespace

TEST_SUITE("electrostatics") {

TEST_CASE("closed forms match their stated expressions") {
  for (double u : {0.0, 0.4, 1.0, 2.5}) {
    for (double th : {0.0, 0.7, 2.0}) {
      const double den = std::pow(1.0 + u * u, 2.5);
      CHECK(rel_dev(dipole_ring_energy_axial(u, th),
                    2.0 * kPi * std::cos(th) * (1.0 - 2.0 * u * u) / den, 1e-14) < 1e-13);
      CHECK(rel_dev(dipole_ring_energy_radial(u, th),
                    6.0 * kPi * std::cos(th) * u / den, 1e-14) < 1e-13);
    }
  }
}

TEST_CASE("centre anchor is exact") {
  CHECK(dipole_ring_energy_axial(0.0, 0.0) == 2.0 * kPi);
}

TEST_CASE("frozen cross-check against the azimuthal quadrature") {
  const double th = 40.0 * kPi / 180.0;
  CHECK(rel_dev(dipole_ring_energy_axial(0.6, th), 0.62480514243516383) < 1e-13);
  CHECK(rel_dev(dipole_ring_energy_quadrature(tilted(th), RingDipolePolarization::Axial, 1.0, 0.6),
                0.62480514243516305) < 5e-12);
  CHECK(rel_dev(dipole_ring_energy_radial(0.6, th), 4.0166044870831952) < 1e-13);
  CHECK(rel_dev(dipole_ring_energy_quadrature(tilted(th), RingDipolePolarization::Radial, 1.0, 0.6),
                4.0166044870831978) < 5e-12);
}

TEST_CASE("closed and quadrature paths agree over a grid") {
  for (double u : {0.0, 0.3, 0.8, 1.7, 3.0}) {
    for (double deg : {0.0, 30.0, 60.0, 90.0, 140.0}) {
      const double th = deg * kPi / 180.0;
      // floor the comparison at a sliver of the family scale (about 2 pi):
      // where the closed form is exactly zero the quadrature returns bare
      // rounding noise, which should not be measured against itself
      const double qa =
          dipole_ring_energy_quadrature(tilted(th), RingDipolePolarization::Axial, 1.0, u);
      CHECK(rel_dev(dipole_ring_energy_axial(u, th), qa, 1e-5) < 1e-9);
      const double qr =
          dipole_ring_energy_quadrature(tilted(th), RingDipolePolarization::Radial, 1.0, u);
      CHECK(rel_dev(dipole_ring_energy_radial(u, th), qr, 1e-5) < 1e-9);
    }
  }
}

TEST_CASE("force and torque are derivatives of the energy") {
  for (double u : {0.2, 0.7071, 1.5}) {
    for (double th : {0.3, 1.1}) {
      const double f = force_numeric([&](double uu) { return dipole_ring_energy_axial(uu, th); }, u);
      CHECK(rel_dev(dipole_ring_force_axial(u, th), f, 1e-10) < 1e-8);
      const double t =
          torque_numeric([&](double tt) { return dipole_ring_energy_axial(u, tt); }, th);
      CHECK(rel_dev(dipole_ring_torque_axial(u, th), t, 1e-10) < 1e-8);
    }
  }
  CHECK(rel_dev(dipole_ring_force_axial(0.6, 40.0 * kPi / 180.0), 6.7337192871688876) < 1e-13);
  CHECK(rel_dev(dipole_ring_torque_axial(0.6, 40.0 * kPi / 180.0), 0.52427376457501385) < 1e-13);
}

TEST_CASE("axial interaction vanishes at the crossover height") {
  const double u0 = 1.0 / std::sqrt(2.0);
  for (double th : {0.0, 0.8, 2.4}) {
    CHECK(std::abs(dipole_ring_energy_axial(u0, th)) < 1e-12);
    CHECK(std::abs(dipole_ring_torque_axial(u0, th)) < 1e-12);
  }
}

TEST_CASE("preferred orientation flips across the crossover") {
  auto argmin_theta = [](double u) {
    double best = 0.0, ebest = dipole_ring_energy_axial(u, 0.0);
    for (int i = 1; i <= 180; ++i) {
      const double th = i * kPi / 180.0;
      const double e = dipole_ring_energy_axial(u, th);
      if (e < ebest) {
        ebest = e;
        best = th;
      }
    }
    return best;
  };
  CHECK(argmin_theta(0.5) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(argmin_theta(1.0) == 0.0);
}

TEST_CASE("tangentially polarized ring does not couple to a dipole") {
  for (double u : {0.0, 0.5, 1.3}) {
    for (double th : {0.0, 0.6, kPi / 2.0}) {
      CHECK(std::abs(dipole_ring_energy_quadrature(tilted(th), RingDipolePolarization::Tangential,
                                                   1.0, u)) < 1e-10);
    }
  }
}

}  // TEST_SUITE
