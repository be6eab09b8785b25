// The four-stroke rotation/translation cycle. Energies are normalized so the
// aligned atom bound at the centre sits at exactly -1; all cycle bookkeeping
// is then dimensionless.

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "polder/machine.hpp"
#include "polder/numerics.hpp"
#include "support.hpp"

using namespace polder;
using testsup::rel_dev;

TEST_SUITE("machine") {

TEST_CASE("normalization anchors") {
  CHECK(std::abs(machine_energy({0.0, 0.0}) + 1.0) < 1e-14);
  // perpendicular atom at the centre is decoupled
  CHECK(std::abs(machine_energy({0.0, std::numbers::pi / 2.0})) < 1e-14);
}

TEST_CASE("frozen state values") {
  CHECK(rel_dev(machine_energy({0.8, 0.6}), -0.039412810062863367) < 1e-13);
  CHECK(rel_dev(machine_force({0.8, 0.6}), -0.15440674720326494) < 1e-13);
  CHECK(rel_dev(machine_torque({0.8, 0.6}), 0.085734719231334008) < 1e-13);
}

TEST_CASE("characteristic heights") {
  const double h_tf = machine_torsion_free_height();
  CHECK(std::abs(h_tf - std::sqrt((123.0 - std::sqrt(10969.0)) / 80.0)) < 1e-14);
  const double h_eq = machine_force_equilibrium_height();
  CHECK(std::abs(h_eq - std::sqrt(2.0 / 9.0)) < 1e-12);
  // the perpendicular-atom force changes sign at the equilibrium height
  CHECK(machine_force({h_eq * 0.99, std::numbers::pi / 2.0}) > 0.0);
  CHECK(machine_force({h_eq * 1.01, std::numbers::pi / 2.0}) < 0.0);
  // no torque anywhere at the torsion-free height
  for (double th : {0.2, 0.9, 1.4})
    CHECK(std::abs(machine_torque({h_tf, th})) < 1e-12);
}

TEST_CASE("force and torque are derivatives of the energy") {
  for (double h : {0.2, 0.6, 1.1}) {
    for (double th : {0.3, 1.2}) {
      const double f = force_numeric([&](double hh) { return machine_energy({hh, th}); }, h);
      CHECK(rel_dev(machine_force({h, th}), f, 1e-10) < 1e-8);
      const double t = torque_numeric([&](double tt) { return machine_energy({h, tt}); }, th);
      CHECK(rel_dev(machine_torque({h, th}), t, 1e-10) < 1e-8);
    }
  }
}

TEST_CASE("cycle at the torsion-free engagement height") {
  const CycleReport cr = cycle_report(EngagementHeight::TorsionFree);
  CHECK(std::abs(cr.h_engage - machine_torsion_free_height()) < 1e-14);

  // work pattern (+, -, 0, -): rotation at the centre costs the binding
  // energy, both remaining strokes give energy back, the engaged rotation is free
  CHECK(std::abs(cr.w_ab - 1.0) < 1e-12);
  CHECK(cr.w_bc < 0.0);
  CHECK(std::abs(cr.w_cd) < 1e-12);
  CHECK(cr.w_da < 0.0);

  CHECK(rel_dev(cr.w_bc, -0.17852417360132533) < 1e-12);
  CHECK(rel_dev(cr.w_da, -0.82147582639867456) < 1e-12);

  // line integrals agree with the energy differences, and the loop closes
  CHECK(std::abs(cr.w_ab_line - cr.w_ab) < 1e-8);
  CHECK(std::abs(cr.w_bc_line - cr.w_bc) < 1e-8);
  CHECK(std::abs(cr.w_cd_line - cr.w_cd) < 1e-8);
  CHECK(std::abs(cr.w_da_line - cr.w_da) < 1e-8);
  CHECK(std::abs(cr.net_input) < 1e-12);
  CHECK(cr.closure_residual < 1e-8);
}

TEST_CASE("cycle at the force-equilibrium engagement height") {
  const CycleReport cr = cycle_report(EngagementHeight::ForceEquilibrium);
  CHECK(std::abs(cr.h_engage - std::sqrt(2.0 / 9.0)) < 1e-12);
  // engaging slightly off the torsion-free height makes the third stroke cost work
  CHECK(std::abs(cr.w_cd) > 1e-3);
  CHECK(rel_dev(cr.w_cd, -0.0081887763576949935) < 1e-10);
  CHECK(std::abs(cr.net_input) < 1e-12);
  CHECK(cr.closure_residual < 1e-8);
}

}  // TEST_SUITE
