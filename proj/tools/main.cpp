// Command line front end. Parses flags into a RunConfig, hands off to the
// command implementations, and maps failures to exit codes: 2 for anything
// wrong with the request, 3 for a numerical failure (or a verification run
// that found a deviation above tolerance).

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "polder_cli/commands.hpp"
#include "polder_cli/config.hpp"
#include "polder/quadrature.hpp"
#include "polder/version.hpp"

namespace {

struct RawAngles {
  std::string theta = "0";
  std::string beta = "0";
  std::string phi_s = "0";
  std::string h_grid = "0:5:51";
  std::string theta_list;
  std::string theta_grid = "0:180:37";
  std::string threshold_theta = "90";
};

}  // namespace

int main(int argc, char** argv) {
  using polder::cli::RunConfig;

  CLI::App app{
      "polder: retarded dispersion interactions of an anisotropic atom with an\n"
      "anisotropically polarizable ring, annular disc or apertured plate, plus the\n"
      "electrostatic dipole-ring analog. Heights are in units of the inner radius;\n"
      "energies default to the natural reduced unit of each geometry."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(polder::version_string));

  RunConfig cfg;
  RawAngles raw;

  const auto add_output = [&](CLI::App* c) {
    c->add_option("--format", cfg.format, "csv | json")->capture_default_str();
    c->add_option("-o,--output", cfg.output, "write to a file instead of stdout");
  };
  const auto add_units = [&](CLI::App* c) {
    c->add_flag("--absolute", cfg.absolute, "also print natural-unit values (hbar = c = a = 1)");
    c->add_flag("--ev", cfg.ev, "also print eV values, taking --radius in nm");
  };
  const auto add_quad = [&](CLI::App* c) {
    c->add_option("--rel-tol", cfg.quad.rel_tol, "quadrature relative tolerance")
        ->capture_default_str();
    c->add_option("--max-subdiv", cfg.quad.max_subdivisions, "quadrature subdivision limit")
        ->capture_default_str();
  };
  const auto add_geometry = [&](CLI::App* c) {
    c->add_option("--geometry", cfg.geometry, "ring | disc | plate")->capture_default_str();
    c->add_option("-a,--radius", cfg.a, "inner radius; only used for --ev, in nm")
        ->capture_default_str();
    c->add_option("-b,--outer", cfg.b, "disc outer radius in units of a")->capture_default_str();
    c->add_option("--pol", cfg.pol,
                  "material pattern: radial | axial | tangential | iso (in-plane) | mixed")
        ->capture_default_str();
    c->add_option("--comp-z", cfg.comp_z, "axial component when --pol mixed");
    c->add_option("--comp-rho", cfg.comp_rho, "radial component when --pol mixed");
    c->add_option("--comp-phi", cfg.comp_phi, "tangential component when --pol mixed");
  };
  const auto add_atom = [&](CLI::App* c) {
    c->add_option("--alpha1", cfg.alpha1, "polarizability along the first principal axis")
        ->capture_default_str();
    c->add_option("--alpha2", cfg.alpha2, "second principal axis")->capture_default_str();
    c->add_option("--alpha3", cfg.alpha3, "third principal axis")->capture_default_str();
    c->add_option("--theta", raw.theta, "polar angle of the first axis (degrees, or e.g. 0.5rad)")
        ->capture_default_str();
    c->add_option("--beta", raw.beta, "roll angle of the other two axes")->capture_default_str();
    c->add_option("--phi-s", raw.phi_s, "azimuth anchoring the orientation frame")
        ->capture_default_str();
  };
  const auto add_sweep = [&](CLI::App* c) -> CLI::Option* {
    CLI::Option* o = c->add_option("--h-grid", raw.h_grid, "height sweep start:stop:count")
                         ->capture_default_str();
    c->add_option("--theta-list", raw.theta_list,
                  "comma separated polar angles; overrides --theta");
    return o;
  };
  const auto add_source = [&](CLI::App* c) {
    c->add_option("--source", cfg.source, "closed | oracle | both")->capture_default_str();
    c->add_option("--kernel", cfg.kernel, "cp (retarded) | london (shape only, oracle source)")
        ->capture_default_str();
  };

  CLI::App* energy = app.add_subcommand("energy", "interaction energy over a height sweep");
  add_geometry(energy);
  add_atom(energy);
  add_sweep(energy);
  add_source(energy);
  add_quad(energy);
  add_units(energy);
  add_output(energy);

  CLI::App* force = app.add_subcommand("force", "axial force, positive pushing the atom away");
  add_geometry(force);
  add_atom(force);
  add_sweep(force);
  add_source(force);
  add_quad(force);
  add_units(force);
  add_output(force);

  CLI::App* torque = app.add_subcommand("torque", "torque conjugate to the polar angle");
  add_geometry(torque);
  add_atom(torque);
  add_sweep(torque);
  add_source(torque);
  add_quad(torque);
  add_units(torque);
  add_output(torque);

  CLI::App* scan = app.add_subcommand("scan", "energy, force and torque in one table");
  add_geometry(scan);
  add_atom(scan);
  add_sweep(scan);
  add_source(scan);
  add_quad(scan);
  add_units(scan);
  add_output(scan);

  CLI::App* roots = app.add_subcommand("roots", "torsion-free heights of the closed forms");
  add_geometry(roots);
  add_atom(roots);
  roots->add_option("--u-max", cfg.u_max, "search window in units of a")->capture_default_str();
  add_output(roots);

  CLI::App* regions =
      app.add_subcommand("regions", "repulsive height intervals against orientation");
  add_geometry(regions);
  add_atom(regions);
  regions->add_option("--u-max", cfg.u_max, "search window in units of a")->capture_default_str();
  regions->add_option("--theta-grid", raw.theta_grid, "orientation sweep start:stop:count, degrees")
      ->capture_default_str();
  add_output(regions);

  CLI::App* threshold = app.add_subcommand(
      "threshold", "largest disc outer radius keeping a detached repulsion region");
  threshold->add_option("--theta", raw.threshold_theta, "orientation of the first atom axis")
      ->capture_default_str();
  threshold->add_option("--theta-list", raw.theta_list, "comma separated orientations");
  add_output(threshold);

  CLI::App* machine = app.add_subcommand(
      "machine", "four-stroke rotation/translation cycle over the axially polarized ring");
  machine->add_option("--engage", cfg.engage, "torsion-free | force-equilibrium")
      ->capture_default_str();
  CLI::Option* machine_h = machine->add_option(
      "--h-grid", raw.h_grid, "height sweep start:stop:count for the landscape table");
  add_quad(machine);
  add_output(machine);

  CLI::App* verify =
      app.add_subcommand("verify", "compare every closed form against the quadrature reference");
  verify->add_option("--tol", cfg.tol, "maximum accepted relative deviation")
      ->capture_default_str();
  verify->add_flag("--quick", cfg.quick, "smaller grid");
  add_quad(verify);
  add_output(verify);

  CLI::App* electro =
      app.add_subcommand("electro", "permanent dipole over a polarized ring, closed forms");
  CLI::Option* electro_h =
      electro->add_option("--h-grid", raw.h_grid, "height sweep start:stop:count");
  electro->add_option("--theta", raw.theta, "dipole tilt from the ring axis")
      ->capture_default_str();
  electro->add_option("--theta-list", raw.theta_list, "comma separated tilts");
  electro->add_option("--source", cfg.source, "closed | oracle | both")->capture_default_str();
  add_quad(electro);
  add_output(electro);

  try {
    app.parse(argc, argv);

    cfg.command = app.get_subcommands().front()->get_name();
    if (machine->parsed() && machine_h->count() == 0) raw.h_grid = "0:1.5:31";
    if (electro->parsed() && electro_h->count() == 0) raw.h_grid = "0:3:31";

    cfg.theta = polder::cli::parse_angle(raw.theta);
    cfg.beta = polder::cli::parse_angle(raw.beta);
    cfg.phi_s = polder::cli::parse_angle(raw.phi_s);
    cfg.h_grid = polder::cli::parse_grid(raw.h_grid);
    cfg.theta_grid = polder::cli::parse_grid(raw.theta_grid);
    if (!raw.theta_list.empty()) cfg.theta_list = polder::cli::parse_angle_list(raw.theta_list);
    if (threshold->parsed())
      cfg.threshold_theta = polder::cli::parse_angle(raw.threshold_theta);

    polder::cli::validate(cfg);

    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!cfg.output.empty()) {
      file_out.open(cfg.output);
      if (!file_out) throw std::invalid_argument("cannot open output file '" + cfg.output + "'");
      out = &file_out;
    }
    return polder::cli::run_command(cfg, *out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const polder::QuadratureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
