// Electrostatic analog: a permanent point dipole on the axis of a ring
// carrying a fixed linear polarization density. Closed forms exist for the
// axially polarized ring; the tangentially polarized ring interacts not at
// all, and the radially polarized one through a simpler cosine form.
//
// Reduced units: energies and torques in p lambda / (4 pi eps0 a^2), forces
// in p lambda / (4 pi eps0 a^3), heights u = h/a. The quadrature evaluator
// is the independent reference path for these closed forms.

#pragma once

#include "polder/quadrature.hpp"
#include "polder/tensors.hpp"

namespace polder {

enum class RingDipolePolarization { Tangential, Radial, Axial };

// Closed forms for the dipole tilted by theta from the ring axis.
double dipole_ring_energy_axial(double u, double theta);   // 2 pi cos(theta) (1-2u^2)/(1+u^2)^{5/2}
double dipole_ring_force_axial(double u, double theta);    // 6 pi cos(theta) u (3-2u^2)/(1+u^2)^{7/2}
double dipole_ring_torque_axial(double u, double theta);   // 2 pi sin(theta) (1-2u^2)/(1+u^2)^{5/2}
double dipole_ring_energy_radial(double u, double theta);  // 6 pi cos(theta) u/(1+u^2)^{5/2}

// Direct azimuthal quadrature of the dipole-dipole coupling with the
// polarization density, for an arbitrary dipole vector p, unit density
// magnitude and 1/(4 pi eps0) = 1. For |p| = 1 and a = 1 this equals the
// reduced closed forms above.
double dipole_ring_energy_quadrature(const Vec3& p, RingDipolePolarization pol, double a,
                                     double h, const QuadratureSettings& settings = {});

}  // namespace polder
