#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "polder/geometry.hpp"
#include "polder/tensors.hpp"

using namespace polder;

namespace {

double dist(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

}  // namespace

TEST_SUITE("tensors") {

TEST_CASE("spherical frame matches the standard convention") {
  const auto f = spherical_frame(0.7, 1.9);
  CHECK(dist(f.rhat, {std::sin(0.7) * std::cos(1.9), std::sin(0.7) * std::sin(1.9),
                      std::cos(0.7)}) < 1e-15);
  CHECK(dist(f.thetahat, {std::cos(0.7) * std::cos(1.9), std::cos(0.7) * std::sin(1.9),
                          -std::sin(0.7)}) < 1e-15);
  CHECK(dist(f.phihat, {-std::sin(1.9), std::cos(1.9), 0.0}) < 1e-15);
  // right-handed: rhat x thetahat = phihat
  CHECK(dist(cross(f.rhat, f.thetahat), f.phihat) < 1e-15);
}

TEST_CASE("atom eigenbasis is right-handed and orthonormal for random angles") {
  std::mt19937 gen(12345);
  std::uniform_real_distribution<double> ang(-8.0, 8.0);
  for (int i = 0; i < 200; ++i) {
    const Triad t = atom_eigenbasis(ang(gen), ang(gen), ang(gen));
    CHECK(std::abs(t.e1.norm() - 1.0) < 1e-14);
    CHECK(std::abs(t.e2.norm() - 1.0) < 1e-14);
    CHECK(std::abs(t.e3.norm() - 1.0) < 1e-14);
    CHECK(std::abs(dot(t.e1, t.e2)) < 1e-14);
    CHECK(std::abs(dot(t.e1, t.e3)) < 1e-14);
    CHECK(std::abs(dot(t.e2, t.e3)) < 1e-14);
    CHECK(dot(cross(t.e1, t.e2), t.e3) == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("eigenbasis anchors: theta = 0 aligns e1 with z") {
  const Triad t = atom_eigenbasis(0.0, 0.0, 0.0);
  CHECK(dist(t.e1, {0.0, 0.0, 1.0}) < 1e-15);
  // beta = 0 puts e2 along phihat
  CHECK(std::abs(std::abs(t.e2.z)) < 1e-15);
}

TEST_CASE("advancing beta by a quarter turn swaps the e2 axis onto e3") {
  const double th = 1.1, be = 0.4, ph = 2.2;
  const Triad t = atom_eigenbasis(th, be, ph);
  const Triad q = atom_eigenbasis(th, be + std::numbers::pi / 2.0, ph);
  // same axis up to sign, so the dyads (all that enters an energy) agree
  CHECK(std::abs(std::abs(dot(q.e2, t.e3)) - 1.0) < 1e-14);
  CHECK(std::abs(std::abs(dot(q.e3, t.e2)) - 1.0) < 1e-14);
}

TEST_CASE("atom tensor reproduces its principal values") {
  std::mt19937 gen(777);
  std::uniform_real_distribution<double> amp(0.1, 3.0);
  std::uniform_real_distribution<double> ang(-4.0, 4.0);
  for (int i = 0; i < 50; ++i) {
    AtomPolarizability atom{amp(gen), amp(gen), amp(gen), ang(gen), ang(gen), ang(gen)};
    const SymTensor3 a = atom_tensor(atom);
    const auto ev = eigenvalues_sym3(a);
    double want[3] = {atom.alpha1, atom.alpha2, atom.alpha3};
    std::sort(want, want + 3);
    for (int k = 0; k < 3; ++k) CHECK(ev[k] == doctest::Approx(want[k]).epsilon(1e-12));
    // principal directions: alpha e1 maps to alpha1 e1
    const Triad t = atom_eigenbasis(atom.theta, atom.beta, atom.phi_s);
    CHECK(dist(a.apply(t.e1), atom.alpha1 * t.e1) < 1e-12);
    CHECK(dist(a.apply(t.e3), atom.alpha3 * t.e3) < 1e-12);
  }
}

TEST_CASE("eigenvalues of simple tensors") {
  SymTensor3 d{3.0, 0.0, 0.0, 1.0, 0.0, 2.0};  // diag(3, 1, 2)
  const auto ev = eigenvalues_sym3(d);
  CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ev[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(ev[2] == doctest::Approx(3.0).epsilon(1e-14));
  const auto id = eigenvalues_sym3(SymTensor3::identity());
  for (int k = 0; k < 3; ++k) CHECK(id[k] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("annulus tensor in the co-rotating frame") {
  const AnnularPolarizability pol{0.5, 1.5, 2.5};
  for (double phi : {0.0, 0.9, 4.0}) {
    const SymTensor3 chi = annulus_frame_tensor(pol, phi);
    const Vec3 rho{std::cos(phi), std::sin(phi), 0.0};
    const Vec3 tan{-std::sin(phi), std::cos(phi), 0.0};
    CHECK(dist(chi.apply({0.0, 0.0, 1.0}), {0.0, 0.0, pol.comp_z}) < 1e-14);
    CHECK(dist(chi.apply(rho), pol.comp_rho * rho) < 1e-14);
    CHECK(dist(chi.apply(tan), pol.comp_phi * tan) < 1e-14);
    CHECK(chi.trace() == doctest::Approx(pol.comp_z + pol.comp_rho + pol.comp_phi).epsilon(1e-14));
  }
}

TEST_CASE("tensor contractions") {
  const SymTensor3 a{2.0, 0.3, -0.1, 1.0, 0.4, 3.0};
  const SymTensor3 b{0.5, -0.2, 0.7, 2.0, 0.1, 1.5};
  // tr(AB) via explicit matrix application on basis vectors
  double tr = 0.0;
  const Vec3 e[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (const auto& v : e) tr += dot(v, a.apply(b.apply(v)));
  CHECK(trace_product(a, b) == doctest::Approx(tr).epsilon(1e-14));

  const Vec3 v{0.3, -0.8, 0.5};
  CHECK(quad_form(v, SymTensor3::identity()) == doctest::Approx(dot(v, v)).epsilon(1e-15));
  CHECK(SymTensor3::dyad(v).trace() == doctest::Approx(dot(v, v)).epsilon(1e-15));
}

TEST_CASE("separation vector between the on-axis atom and a body point") {
  const auto s = rhat_on_axis(1.5, 0.8, 0.6);
  CHECK(s.r == doctest::Approx(std::sqrt(1.5 * 1.5 + 0.8 * 0.8)).epsilon(1e-15));
  CHECK(std::abs(s.rhat.norm() - 1.0) < 1e-15);
  CHECK(s.rhat.z == doctest::Approx(-0.8 / s.r).epsilon(1e-15));
  // in-plane part points along rhohat(phi)
  CHECK(s.rhat.x * std::sin(0.6) == doctest::Approx(s.rhat.y * std::cos(0.6)).epsilon(1e-14));

  CHECK_THROWS_AS(rhat_on_axis(0.0, 0.0), std::invalid_argument);
}

TEST_CASE("geometry validation") {
  CHECK_NOTHROW(validate(Geometry{Ring{1.0}}));
  CHECK_NOTHROW(validate(Geometry{AnnularDisc{1.0, 2.0}}));
  CHECK_THROWS_AS(validate(Geometry{Ring{0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(Geometry{AnnularDisc{1.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(Geometry{AperturedPlate{-2.0}}), std::invalid_argument);
}

}  // TEST_SUITE
