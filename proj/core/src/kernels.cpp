#include "polder/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polder {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

DyadicKernel cp_kernel() { return {13.0, -56.0, 63.0, 7, -1.0 / (32.0 * kPi * kPi)}; }

DyadicKernel london_kernel() { return {1.0, -6.0, 9.0, 6, -1.0 / (16.0 * kPi * kPi)}; }

double kernel_bracket(const SymTensor3& alpha, const SymTensor3& chi, const Vec3& rhat,
                      const DyadicKernel& kernel) {
  const Vec3 ar = alpha.apply(rhat);
  const Vec3 cr = chi.apply(rhat);
  return kernel.c_tr * trace_product(alpha, chi) + kernel.c_cross * dot(ar, cr) +
         kernel.c_dd * dot(rhat, ar) * dot(rhat, cr);
}

namespace {

// Magnitude bound for the kernel bracket over all directions. Convergence
// thresholds get an absolute floor tied to this scale: orientations whose
// integrand cancels analytically still evaluate to rounding noise, and a
// purely relative criterion would chase that noise through endless
// refinement.
double bracket_scale(const SymTensor3& alpha, const AnnularPolarizability& sig,
                     const DyadicKernel& kernel) {
  const double tr_chi = sig.comp_z + sig.comp_rho + sig.comp_phi;
  return (3.0 * std::abs(kernel.c_tr) + std::abs(kernel.c_cross) + std::abs(kernel.c_dd)) *
         alpha.trace() * tr_chi;
}

}  // namespace

double ring_energy_quadrature(const AtomPolarizability& atom, const AnnularPolarizability& sig,
                              double a, double h, const DyadicKernel& kernel,
                              const QuadratureSettings& settings) {
  if (!(a > 0.0)) throw std::invalid_argument("ring_energy_quadrature: radius must be positive");
  const SymTensor3 alpha = atom_tensor(atom);
  const double r = std::hypot(a, h);
  auto integrand = [&](double phi) {
    const Separation sep = rhat_on_axis(a, h, phi);
    return kernel_bracket(alpha, annulus_frame_tensor(sig, phi), sep.rhat, kernel);
  };
  QuadratureSettings s = settings;
  s.abs_tol = std::max(s.abs_tol,
                       1e-2 * settings.rel_tol * kTwoPi * bracket_scale(alpha, sig, kernel));
  const double ring_sum = periodic_trapezoid(integrand, kTwoPi, s);
  return kernel.prefactor * a * ring_sum / std::pow(r, kernel.p);
}

namespace {

// Azimuthal average of the kernel bracket at source radius rho, times the
// radial line element rho / r^p. Shared by the disc and plate evaluators.
double annulus_shell(const SymTensor3& alpha, const AnnularPolarizability& lam, double rho,
                     double h, const DyadicKernel& kernel, const QuadratureSettings& inner) {
  auto integrand = [&](double phi) {
    const Separation sep = rhat_on_axis(rho, h, phi);
    return kernel_bracket(alpha, annulus_frame_tensor(lam, phi), sep.rhat, kernel);
  };
  const double ring_sum = periodic_trapezoid(integrand, kTwoPi, inner);
  const double r = std::hypot(rho, h);
  return rho * ring_sum / std::pow(r, kernel.p);
}

QuadratureSettings tighten(const QuadratureSettings& s, double scale) {
  QuadratureSettings inner = s;
  inner.rel_tol = std::max(1e-15, 0.01 * s.rel_tol);
  inner.abs_tol = std::max(inner.abs_tol, 1e-2 * inner.rel_tol * kTwoPi * scale);
  return inner;
}

// Bound on the radial integral of rho * 2 pi * bracket / r^p from a outward,
// used as the scale for the outer absolute floor.
double radial_mass_bound(double scale, double a, double h, int p) {
  return kTwoPi * scale / ((p - 2) * std::pow(a * a + h * h, 0.5 * (p - 2)));
}

// Geometric split hints for wide radial ranges; the integrand varies on the
// scale of rho itself once rho dominates h.
std::vector<double> radial_hints(double a, double b) {
  std::vector<double> hints;
  for (double x = 2.0 * a; x < b; x *= 2.0) hints.push_back(x);
  return hints;
}

}  // namespace

double disc_energy_quadrature(const AtomPolarizability& atom, const AnnularPolarizability& lam,
                              double a, double b, double h, const DyadicKernel& kernel,
                              const QuadratureSettings& settings) {
  if (!(a > 0.0) || !(b > a))
    throw std::invalid_argument("disc_energy_quadrature: need 0 < a < b");
  const SymTensor3 alpha = atom_tensor(atom);
  const double scale = bracket_scale(alpha, lam, kernel);
  const QuadratureSettings inner = tighten(settings, scale);
  auto radial = [&](double rho) { return annulus_shell(alpha, lam, rho, h, kernel, inner); };
  QuadratureSettings outer = settings;
  outer.abs_tol = std::max(outer.abs_tol,
                           1e-2 * settings.rel_tol * radial_mass_bound(scale, a, h, kernel.p));
  const double integral = adaptive_gauss(radial, a, b, outer, radial_hints(a, b));
  return kernel.prefactor * integral;
}

double plate_energy_quadrature(const AtomPolarizability& atom, const AnnularPolarizability& lam,
                               double a, double h, const DyadicKernel& kernel,
                               const QuadratureSettings& settings) {
  if (!(a > 0.0)) throw std::invalid_argument("plate_energy_quadrature: radius must be positive");
  const SymTensor3 alpha = atom_tensor(atom);
  const double scale = bracket_scale(alpha, lam, kernel);
  const QuadratureSettings inner = tighten(settings, scale);
  auto radial = [&](double rho) { return annulus_shell(alpha, lam, rho, h, kernel, inner); };
  QuadratureSettings outer = settings;
  outer.abs_tol = std::max(outer.abs_tol,
                           1e-2 * settings.rel_tol * radial_mass_bound(scale, a, h, kernel.p));
  const double integral = adaptive_gauss_semi_infinite(radial, a, std::abs(h), outer);
  return kernel.prefactor * integral;
}

double atom_atom_cp(double alpha1, double alpha2, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("atom_atom_cp: separation must be positive");
  // A point polarizability enters the pair integral with one factor of
  // 4 pi relative to the continuum density convention used above.
  const DyadicKernel kernel = cp_kernel();
  const SymTensor3 a1 = alpha1 * SymTensor3::identity();
  const SymTensor3 a2 = alpha2 * SymTensor3::identity();
  const Vec3 zhat{0.0, 0.0, 1.0};
  const double bracket = kernel_bracket(a1, a2, zhat, kernel);
  return kernel.prefactor * 4.0 * kPi * bracket / std::pow(r, kernel.p);
}

}  // namespace polder
