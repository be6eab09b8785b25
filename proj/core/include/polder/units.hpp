// Unit helpers. All core computations use natural units (hbar = c = 1) with
// lengths in units of the inner radius a; converting an energy to eV needs
// only the physical radius in nanometres.

#pragma once

#include <numbers>

namespace polder {

// CODATA: hbar c in eV nm.
inline constexpr double hbar_c_ev_nm = 197.3269804;

inline constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

// Natural-unit energy (computed with a = 1) to eV for a radius in nm.
inline constexpr double natural_energy_to_ev(double energy, double a_nm) {
  return energy * hbar_c_ev_nm / a_nm;
}

}  // namespace polder
