#include "polder/tensors.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace polder {

std::array<double, 3> eigenvalues_sym3(const SymTensor3& t) {
  // Trigonometric solution of the characteristic cubic (Smith's method).
  const double q = t.trace() / 3.0;
  const double axx = t.xx - q, ayy = t.yy - q, azz = t.zz - q;
  const double p2 = axx * axx + ayy * ayy + azz * azz +
                    2.0 * (t.xy * t.xy + t.xz * t.xz + t.yz * t.yz);
  if (p2 <= 0.0) return {q, q, q};
  const double p = std::sqrt(p2 / 6.0);
  // det(A - q I) / p^3, clamped against roundoff
  const double detb =
      axx * (ayy * azz - t.yz * t.yz) - t.xy * (t.xy * azz - t.yz * t.xz) +
      t.xz * (t.xy * t.yz - ayy * t.xz);
  double r = detb / (2.0 * p * p * p);
  r = std::clamp(r, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double e1 = q + 2.0 * p * std::cos(phi);
  const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  const double e2 = 3.0 * q - e1 - e3;
  std::array<double, 3> ev{e1, e2, e3};
  std::sort(ev.begin(), ev.end());
  return ev;
}

SphericalFrame spherical_frame(double theta, double phi) {
  const double st = std::sin(theta), ct = std::cos(theta);
  const double sp = std::sin(phi), cp = std::cos(phi);
  SphericalFrame f;
  f.rhat = {st * cp, st * sp, ct};
  f.thetahat = {ct * cp, ct * sp, -st};
  f.phihat = {-sp, cp, 0.0};
  return f;
}

Triad atom_eigenbasis(double theta, double beta, double phi_s) {
  const SphericalFrame f = spherical_frame(theta, phi_s);
  const double sb = std::sin(beta), cb = std::cos(beta);
  Triad t;
  t.e1 = f.rhat;
  t.e2 = cb * f.phihat + sb * f.thetahat;
  t.e3 = cross(t.e1, t.e2);
  return t;
}

SymTensor3 atom_tensor(const AtomPolarizability& atom) {
  const Triad t = atom_eigenbasis(atom.theta, atom.beta, atom.phi_s);
  return atom.alpha1 * SymTensor3::dyad(t.e1) + atom.alpha2 * SymTensor3::dyad(t.e2) +
         atom.alpha3 * SymTensor3::dyad(t.e3);
}

SymTensor3 annulus_frame_tensor(const AnnularPolarizability& pol, double phi) {
  const double sp = std::sin(phi), cp = std::cos(phi);
  const Vec3 rhohat{cp, sp, 0.0};
  const Vec3 phihat{-sp, cp, 0.0};
  const Vec3 zhat{0.0, 0.0, 1.0};
  return pol.comp_z * SymTensor3::dyad(zhat) + pol.comp_rho * SymTensor3::dyad(rhohat) +
         pol.comp_phi * SymTensor3::dyad(phihat);
}

Separation rhat_on_axis(double rho, double h, double phi) {
  if (rho == 0.0 && h == 0.0)
    throw std::invalid_argument("rhat_on_axis: atom coincides with source point (rho = h = 0)");
  const double r = std::hypot(rho, h);
  const Vec3 rhohat{std::cos(phi), std::sin(phi), 0.0};
  Separation s;
  s.r = r;
  s.rhat = (rho / r) * rhohat + Vec3{0.0, 0.0, -h / r};
  return s;
}

}  // namespace polder
