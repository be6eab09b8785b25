#include "polder/machine.hpp"

#include <cmath>
#include <numbers>

namespace polder {

namespace {
constexpr double kHalfPi = 0.5 * std::numbers::pi;
}

double machine_energy(const MachineState& s) {
  const double u2 = s.h * s.h;
  const double c2 = std::cos(2.0 * s.theta);
  const double bracket = (26.0 + u2 * (3.0 + 40.0 * u2)) +
                         (26.0 + u2 * (-123.0 + 40.0 * u2)) * c2;
  return -bracket / (52.0 * std::pow(1.0 + u2, 5.5));
}

double machine_force(const MachineState& s) {
  const double u2 = s.h * s.h;
  const double c2 = std::cos(2.0 * s.theta);
  const double bracket = (40.0 + u2 * (-19.0 + 40.0 * u2)) +
                         (76.0 + u2 * (-181.0 + 40.0 * u2)) * c2;
  return -7.0 * s.h * bracket / (52.0 * std::pow(1.0 + u2, 6.5));
}

double machine_torque(const MachineState& s) {
  const double u2 = s.h * s.h;
  return -(26.0 + u2 * (-123.0 + 40.0 * u2)) * std::sin(2.0 * s.theta) /
         (26.0 * std::pow(1.0 + u2, 5.5));
}

double machine_torsion_free_height() {
  // Lower root of 40 x^2 - 123 x + 26 in x = h^2.
  return std::sqrt((123.0 - std::sqrt(123.0 * 123.0 - 4.0 * 40.0 * 26.0)) / 80.0);
}

double machine_force_equilibrium_height() {
  // The perpendicular atom feels F proportional to h (36 - 162 h^2), so the
  // repulsion below turns to attraction at h = sqrt(2/9).
  return std::sqrt(2.0 / 9.0);
}

CycleReport cycle_report(EngagementHeight choice, const QuadratureSettings& settings) {
  CycleReport rep{};
  rep.h_engage = (choice == EngagementHeight::TorsionFree) ? machine_torsion_free_height()
                                                           : machine_force_equilibrium_height();
  const double he = rep.h_engage;
  auto energy = [](double h, double theta) { return machine_energy({h, theta}); };

  // Work done on the atom along each stroke as an energy difference.
  rep.w_ab = energy(0.0, kHalfPi) - energy(0.0, 0.0);
  rep.w_bc = energy(he, kHalfPi) - energy(0.0, kHalfPi);
  rep.w_cd = energy(he, 0.0) - energy(he, kHalfPi);
  rep.w_da = energy(0.0, 0.0) - energy(he, 0.0);
  rep.net_input = rep.w_ab + rep.w_bc + rep.w_cd + rep.w_da;

  // Independent line-integral path: W = -integral tau dtheta along the
  // rotations, -integral F dh along the translations, signed by direction.
  auto torque_at = [](double h) {
    return [h](double theta) { return machine_torque({h, theta}); };
  };
  auto force_at = [](double theta) {
    return [theta](double h) { return machine_force({h, theta}); };
  };
  rep.w_ab_line = -adaptive_gauss(torque_at(0.0), 0.0, kHalfPi, settings);
  rep.w_bc_line = -adaptive_gauss(force_at(kHalfPi), 0.0, he, settings);
  rep.w_cd_line = adaptive_gauss(torque_at(he), 0.0, kHalfPi, settings);
  rep.w_da_line = adaptive_gauss(force_at(0.0), 0.0, he, settings);
  rep.closure_residual =
      std::abs(rep.w_ab_line + rep.w_bc_line + rep.w_cd_line + rep.w_da_line);
  return rep;
}

}  // namespace polder
