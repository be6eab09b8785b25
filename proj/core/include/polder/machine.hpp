// Four-stroke rotation/translation cycle of an atom above an axially
// polarized ring. Reduced units throughout: heights in units of the ring
// radius, energies in units of E0 = |E(0, 0)| (the binding energy of the
// aligned atom at the ring centre), forces in units of F0 = E0 / a.
//
// Strokes: A (h=0, theta=0) -> B (h=0, theta=pi/2) -> C (h=h_e, pi/2)
// -> D (h_e, 0) -> A. Rotating at the torsion-free engagement height makes
// stroke C -> D free, so the cycle converts the work of the two rotations
// into the difference of the two translations.

#pragma once

#include "polder/quadrature.hpp"

namespace polder {

struct MachineState {
  double h = 0.0;      // height over ring radius
  double theta = 0.0;  // orientation of the atom's first principal axis
};

double machine_energy(const MachineState& s);  // units of E0
double machine_force(const MachineState& s);   // units of F0, positive = repulsive
double machine_torque(const MachineState& s);  // units of E0, conjugate to theta

// Candidate engagement heights.
double machine_torsion_free_height();      // upper-stroke height with zero torque everywhere
double machine_force_equilibrium_height(); // where the perpendicular-atom force changes sign

enum class EngagementHeight { TorsionFree, ForceEquilibrium };

struct CycleReport {
  double h_engage;
  // Work done on the atom per stroke, as energy differences.
  double w_ab, w_bc, w_cd, w_da;
  // The same works as line integrals of -torque and -force.
  double w_ab_line, w_bc_line, w_cd_line, w_da_line;
  double net_input;          // sum of the energy-difference works (zero by closure)
  double closure_residual;   // magnitude of the line-integral sum
};

CycleReport cycle_report(EngagementHeight choice = EngagementHeight::TorsionFree,
                         const QuadratureSettings& settings = {});

}  // namespace polder
