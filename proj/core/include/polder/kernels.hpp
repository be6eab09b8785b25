// Dyadic interaction kernels and reference quadrature evaluators.
//
// Retarded dispersion energy of an anisotropic atom against a dilute
// anisotropic body, in natural units (hbar = c = 1):
//
//   E = prefactor * Integral dV  [ c_tr  tr(alpha chi)
//                                + c_cross rhat . alpha chi . rhat
//                                + c_dd (rhat . alpha . rhat)(rhat . chi . rhat) ] / r^p
//
// The retarded kernel has (c_tr, c_cross, c_dd) = (13, -56, 63), p = 7 and
// prefactor -1/(32 pi^2); the nonretarded one (1, -6, 9), p = 6 is exposed
// for qualitative shape studies only (its frequency integral is not
// included, so absolute magnitudes are meaningless).
//
// These quadrature evaluators are the independent reference path used to
// validate every closed form; they never share algebra with closed_forms.

#pragma once

#include "polder/quadrature.hpp"
#include "polder/tensors.hpp"

namespace polder {

struct DyadicKernel {
  double c_tr;
  double c_cross;
  double c_dd;
  int p;                 // power of the separation in the denominator
  double prefactor;      // multiplies the whole volume integral
};

DyadicKernel cp_kernel();      // retarded (Casimir-Polder) kernel
DyadicKernel london_kernel();  // nonretarded shape-study kernel

// The bracketed contraction alone, without prefactor or 1/r^p.
double kernel_bracket(const SymTensor3& alpha, const SymTensor3& chi, const Vec3& rhat,
                      const DyadicKernel& kernel);

// Energy of the atom at (0,0,h) against a ring of radius a carrying the
// per-length polarizability sig; single periodic quadrature over azimuth.
double ring_energy_quadrature(const AtomPolarizability& atom, const AnnularPolarizability& sig,
                              double a, double h, const DyadicKernel& kernel,
                              const QuadratureSettings& settings = {});

// Same against an annular disc (inner radius a, outer b) with per-area
// polarizability lam; adaptive radial quadrature outside a periodic
// azimuthal one.
double disc_energy_quadrature(const AtomPolarizability& atom, const AnnularPolarizability& lam,
                              double a, double b, double h, const DyadicKernel& kernel,
                              const QuadratureSettings& settings = {});

// Same against an infinite plate with an aperture of radius a (disc with
// b -> infinity, integrated via a mapped tail).
double plate_energy_quadrature(const AtomPolarizability& atom, const AnnularPolarizability& lam,
                               double a, double h, const DyadicKernel& kernel,
                               const QuadratureSettings& settings = {});

// Retarded energy of two isotropic atoms a distance r apart,
// E = -(23/4pi) alpha1 alpha2 / r^7, routed through the same kernel
// contraction (the point dyadic carries one factor of 4 pi).
double atom_atom_cp(double alpha1, double alpha2, double r);

}  // namespace polder
