// Closed-form retarded interaction energies and forces for an atom on the
// symmetry axis of a ring, annular disc, or apertured plate, in natural
// units (hbar = c = 1). Forces are along +h with positive meaning repulsion
// (the atom pushed away from the body plane).
//
// Conventions: u = h/a, the atom orientation enters through the polar angle
// theta of its first principal axis and the roll angle beta of the other
// two; single-axis results for the second and third axes depend on both.
// Energies of the alpha1-only atom are all of the form
//   E(h, theta) = A(h) + B(h) cos(2 theta).

#pragma once

#include "polder/tensors.hpp"

namespace polder {

// Which diagonal component of the annulus tensor is switched on.
enum class AnnulusComponent { Tangential, Radial, Axial };

// Material patterns for a disc or plate: isotropic within the body plane,
// purely radial, or purely axial.
enum class LayerMode { InPlaneIso, Radial, Axial };

// Natural reduced energy scales.
double ring_energy_scale(double alpha, double sigma, double a);    // alpha sigma / (64 pi a^6)
double plate_energy_scale(double alpha, double lambda, double a);  // alpha lambda / (64 pi a^5)

// Energy of an atom polarizable along a single principal axis (1, 2 or 3,
// weight alpha) against a single ring component of line density sigma.
double ring_energy_component(int axis, double alpha, AnnulusComponent comp, double sigma,
                             double a, double h, double theta, double beta);

// Full superposition over the three atom axes and three ring components.
double ring_energy(const AtomPolarizability& atom, const AnnularPolarizability& sig, double a,
                   double h);

// alpha1-only families in half-angle form, and their axial forces.
double ring_energy_e1_radial(double alpha1, double sigma_rho, double a, double h, double theta);
double ring_energy_e1_axial(double alpha1, double sigma_z, double a, double h, double theta);
double ring_energy_e1_inplane_iso(double alpha1, double sigma, double a, double h, double theta);
double ring_force_e1_radial(double alpha1, double sigma_rho, double a, double h, double theta);
double ring_force_e1_axial(double alpha1, double sigma_z, double a, double h, double theta);

// Annular disc (inner radius a, outer b) and apertured plate, alpha1-only
// atom, per-area density lambda. The disc value is an exact boundary
// difference of the same antiderivative whose b -> infinity limit gives the
// plate and whose b -> a limit (lambda (b - a) -> sigma) gives the ring.
double disc_energy_e1(LayerMode mode, double alpha1, double lambda, double a, double b, double h,
                      double theta);
double plate_energy_e1(LayerMode mode, double alpha1, double lambda, double a, double h,
                       double theta);

}  // namespace polder
