// Run configuration shared by all subcommands, plus the parsing helpers for
// angles ("30", "30deg", "0.52rad"; degrees by default) and grids
// ("start:stop:count", inclusive ends).

#pragma once

#include <string>
#include <vector>

#include "polder/quadrature.hpp"

namespace polder::cli {

struct GridSpec {
  double start = 0.0;
  double stop = 5.0;
  int count = 51;

  std::vector<double> points() const;
};

struct RunConfig {
  std::string command;

  // Geometry and material
  std::string geometry = "ring";  // ring | disc | plate
  double a = 1.0;                 // inner radius; physical value in nm for eV output
  double b = 2.0;                 // disc outer radius, units of a
  std::string pol = "radial";     // radial | axial | tangential | iso | mixed
  double comp_z = 0.0, comp_rho = 0.0, comp_phi = 0.0;  // used when pol == mixed

  // Atom
  double alpha1 = 1.0, alpha2 = 0.0, alpha3 = 0.0;
  double theta = 0.0, beta = 0.0, phi_s = 0.0;  // radians

  // Grids
  GridSpec h_grid{0.0, 5.0, 51};
  std::vector<double> theta_list;  // radians; empty means use the single theta

  // Numerics
  std::string kernel = "cp";  // cp | london (quadrature source only)
  QuadratureSettings quad;
  double tol = 1e-9;  // verify acceptance threshold

  // Output
  std::string source = "closed";  // closed | oracle | both
  std::string format = "csv";     // csv | json
  std::string output;             // empty = stdout
  bool absolute = false;          // include natural-unit column
  bool ev = false;                // include eV column (uses a in nm)
  bool quick = false;             // verify: coarser grid

  // Command-specific
  std::string engage = "torsion-free";  // machine: torsion-free | force-equilibrium
  double u_max = 20.0;                  // roots/regions search window
  GridSpec theta_grid{0.0, 180.0, 181}; // regions: degrees
  double threshold_theta = -1.0;        // radians; negative = use theta
};

// "30" or "30deg" -> radians via degrees; "0.5rad" -> radians directly.
double parse_angle(const std::string& text);

// "start:stop:count" with count >= 2, or a single value for count = 1.
GridSpec parse_grid(const std::string& text);

// Comma-separated angles.
std::vector<double> parse_angle_list(const std::string& text);

// Validation beyond what flag parsing enforces; throws std::invalid_argument.
void validate(const RunConfig& cfg);

// Canonical serialization (fixed key order, 17 significant digits) used both
// for the config echo in reports and for the config hash.
std::string canonical_config(const RunConfig& cfg);
std::string config_hash(const RunConfig& cfg);

}  // namespace polder::cli
