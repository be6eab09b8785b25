#include "polder/electrostatics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polder {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double dipole_ring_energy_axial(double u, double theta) {
  const double u2 = u * u;
  return kTwoPi * std::cos(theta) * (1.0 - 2.0 * u2) / std::pow(1.0 + u2, 2.5);
}

double dipole_ring_force_axial(double u, double theta) {
  const double u2 = u * u;
  return 6.0 * kPi * std::cos(theta) * u * (3.0 - 2.0 * u2) / std::pow(1.0 + u2, 3.5);
}

double dipole_ring_torque_axial(double u, double theta) {
  const double u2 = u * u;
  return kTwoPi * std::sin(theta) * (1.0 - 2.0 * u2) / std::pow(1.0 + u2, 2.5);
}

double dipole_ring_energy_radial(double u, double theta) {
  const double u2 = u * u;
  return 6.0 * kPi * std::cos(theta) * u / std::pow(1.0 + u2, 2.5);
}

double dipole_ring_energy_quadrature(const Vec3& p, RingDipolePolarization pol, double a,
                                     double h, const QuadratureSettings& settings) {
  if (!(a > 0.0))
    throw std::invalid_argument("dipole_ring_energy_quadrature: radius must be positive");
  auto integrand = [&](double phi) {
    const double sp = std::sin(phi), cp = std::cos(phi);
    Vec3 lam;
    switch (pol) {
      case RingDipolePolarization::Tangential: lam = {-sp, cp, 0.0}; break;
      case RingDipolePolarization::Radial: lam = {cp, sp, 0.0}; break;
      case RingDipolePolarization::Axial: lam = {0.0, 0.0, 1.0}; break;
    }
    const Separation sep = rhat_on_axis(a, h, phi);
    // Dipole-dipole interaction of p with the line element lam dl / r^3.
    const double coupling = dot(p, lam) - 3.0 * dot(p, sep.rhat) * dot(sep.rhat, lam);
    return coupling / (sep.r * sep.r * sep.r);
  };
  // Symmetric orientations integrate to zero (or cancel pointwise up to
  // roundoff), so the tolerance gets an absolute floor well below the
  // largest value this configuration could produce but well above noise.
  const double r3 = std::pow(a * a + h * h, 1.5);
  QuadratureSettings s = settings;
  s.abs_tol = std::max(s.abs_tol, 1e-2 * settings.rel_tol * 8.0 * kPi * a * p.norm() / r3);
  return a * periodic_trapezoid(integrand, kTwoPi, s);
}

}  // namespace polder
