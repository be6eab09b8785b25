// Downstream analysis of the closed-form energy families: separation into
// orientation-independent and cos(2 theta) parts, torsion-free heights,
// repulsive-force regions in the (h, theta) plane, the angular boundaries
// of those regions, and the outer-radius threshold beyond which a detached
// repulsion region of the annular disc disappears.
//
// All heights are the dimensionless u = h/a. Families are callables
// (u, theta) -> value in whatever consistent units the caller prefers.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace polder {

using EnergyFamily = std::function<double(double u, double theta)>;
using ForceFamily = std::function<double(double u, double theta)>;

// E(u, theta) = a_part(u) + b_part(u) cos(2 theta). Verified at theta = 45
// degrees, where the cosine term vanishes; throws std::domain_error if the
// family does not actually have this form.
struct Cos2Split {
  double a_part;
  double b_part;
};
Cos2Split cos2_split(const EnergyFamily& family, double u, double check_tol = 1e-10);

// Heights at which the torque vanishes for every orientation, i.e. the
// roots of b_part(u) on (0, u_max]. Grid scan plus derivative-free
// refinement to about 1e-12 in u.
std::vector<double> torsion_free_heights(const EnergyFamily& family, double u_max = 20.0,
                                         int scan_points = 2000);

// The same heights in closed form, as roots of the quadratic (in u^2)
// cos(2 theta) coefficient of each family. Ascending.
enum class TorsionFamily {
  RingRadial,
  RingAxial,
  RingInPlaneIso,
  PlateInPlaneIso,
  PlateRadial,
  PlateAxial,
};
std::vector<double> torsion_free_analytic(TorsionFamily family);

// Maximal sub-intervals of (0, u_max] on which the force is repulsive
// (F > 0) at fixed theta. The scan grid is fine (du = 1e-4) below u = 4,
// where every known feature lives, and coarse beyond; edges are refined to
// about 1e-10. An interval reaching the first grid point is reported with
// lo = 0 (the force vanishes at the plane itself).
struct Interval {
  double lo;
  double hi;
};
std::vector<Interval> repulsion_intervals(const ForceFamily& force, double theta,
                                          double u_max = 20.0);

// Boundary angles (radians, over [0, pi]) between orientations that admit
// some repulsive height and orientations that admit none, resolved by
// bisection of the existence predicate to 0.01 degrees.
std::vector<double> repulsion_angle_boundaries(const ForceFamily& force, double u_max = 20.0);

// Largest outer radius (in units of the inner radius) for which the radial
// annular disc still shows a repulsion region detached from the plane at
// the given orientation; the disc force is obtained by numerical
// differentiation of the closed-form energy. Bisection over b to xtol.
double detached_region_threshold(double theta, double xtol = 1e-4, double b_max = 2.0);

// Repulsion flags over a rectangular (u, theta) grid plus the refined
// per-column intervals (the region boundary as height-against-angle).
struct RepulsionMap {
  std::vector<double> u_grid;
  std::vector<double> theta_grid;
  std::vector<std::uint8_t> repulsive;           // theta-major, [it * nu + iu]
  std::vector<std::vector<Interval>> intervals;  // one list per theta
};
RepulsionMap repulsion_map(const ForceFamily& force, const std::vector<double>& u_grid,
                           const std::vector<double>& theta_grid);

}  // namespace polder
