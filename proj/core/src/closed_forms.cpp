#include "polder/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polder {

namespace {

constexpr double kPi = std::numbers::pi;

void check_radius(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("closed form: radius must be positive");
}

// Orientation weights of the three principal axes for each ring component.
// For the tangential component a single weight P multiplies the whole
// expression; the radial and axial components carry two weights each
// (named Q, R and S, T below). All satisfy the isotropy sum rules
//   sum P = 2, sum Q = 1, sum R = 2, sum S = 2, sum T = 1,
// which collapse the superposition to the isotropic-atom result.
struct AxisWeights {
  double first;
  double second;
};

double tangential_weight(int axis, double theta, double beta) {
  const double s2t = std::sin(theta) * std::sin(theta);
  const double c2t = std::cos(theta) * std::cos(theta);
  const double s2b = std::sin(beta) * std::sin(beta);
  const double c2b = std::cos(beta) * std::cos(beta);
  switch (axis) {
    case 1: return s2t;
    case 2: return c2b + c2t * s2b;
    case 3: return s2b + c2t * c2b;
    default: throw std::invalid_argument("atom axis must be 1, 2 or 3");
  }
}

AxisWeights radial_weights(int axis, double theta, double beta) {
  const double s2t = std::sin(theta) * std::sin(theta);
  const double c2t = std::cos(theta) * std::cos(theta);
  const double s2b = std::sin(beta) * std::sin(beta);
  const double c2b = std::cos(beta) * std::cos(beta);
  switch (axis) {
    case 1: return {c2t, s2t};
    case 2: return {s2b * s2t, c2b + s2b * c2t};
    case 3: return {c2b * s2t, s2b + c2b * c2t};
    default: throw std::invalid_argument("atom axis must be 1, 2 or 3");
  }
}

AxisWeights axial_weights(int axis, double theta, double beta) {
  const double s2t = std::sin(theta) * std::sin(theta);
  const double c2t = std::cos(theta) * std::cos(theta);
  const double s2b = std::sin(beta) * std::sin(beta);
  const double c2b = std::cos(beta) * std::cos(beta);
  switch (axis) {
    case 1: return {s2t, c2t};
    case 2: return {c2b + s2b * c2t, s2b * s2t};
    case 3: return {s2b + c2b * c2t, c2b * s2t};
    default: throw std::invalid_argument("atom axis must be 1, 2 or 3");
  }
}

}  // namespace

double ring_energy_scale(double alpha, double sigma, double a) {
  check_radius(a);
  return alpha * sigma / (64.0 * kPi * std::pow(a, 6));
}

double plate_energy_scale(double alpha, double lambda, double a) {
  check_radius(a);
  return alpha * lambda / (64.0 * kPi * std::pow(a, 5));
}

double ring_energy_component(int axis, double alpha, AnnulusComponent comp, double sigma,
                             double a, double h, double theta, double beta) {
  check_radius(a);
  const double u = h / a;
  const double u2 = u * u;
  const double scale = alpha * sigma / (32.0 * kPi * std::pow(a, 6));
  switch (comp) {
    case AnnulusComponent::Tangential: {
      const double p = tangential_weight(axis, theta, beta);
      return -scale * 13.0 * p / std::pow(1.0 + u2, 3.5);
    }
    case AnnulusComponent::Radial: {
      const AxisWeights w = radial_weights(axis, theta, beta);
      const double bracket =
          126.0 * u2 * w.first + (20.0 + u2 * (-30.0 + 13.0 * u2)) * w.second;
      return -scale * bracket / std::pow(1.0 + u2, 5.5);
    }
    case AnnulusComponent::Axial: {
      const AxisWeights w = axial_weights(axis, theta, beta);
      const double bracket =
          63.0 * u2 * w.first + (26.0 + u2 * (-60.0 + 40.0 * u2)) * w.second;
      return -scale * bracket / std::pow(1.0 + u2, 5.5);
    }
  }
  throw std::invalid_argument("unknown ring component");
}

double ring_energy(const AtomPolarizability& atom, const AnnularPolarizability& sig, double a,
                   double h) {
  const double alphas[3] = {atom.alpha1, atom.alpha2, atom.alpha3};
  const struct {
    AnnulusComponent comp;
    double value;
  } comps[3] = {{AnnulusComponent::Axial, sig.comp_z},
                {AnnulusComponent::Radial, sig.comp_rho},
                {AnnulusComponent::Tangential, sig.comp_phi}};
  double total = 0.0;
  for (int axis = 1; axis <= 3; ++axis) {
    if (alphas[axis - 1] == 0.0) continue;
    for (const auto& c : comps) {
      if (c.value == 0.0) continue;
      total += ring_energy_component(axis, alphas[axis - 1], c.comp, c.value, a, h, atom.theta,
                                     atom.beta);
    }
  }
  return total;
}

double ring_energy_e1_radial(double alpha1, double sigma_rho, double a, double h, double theta) {
  check_radius(a);
  const double u2 = (h / a) * (h / a);
  const double c2 = std::cos(2.0 * theta);
  const double bracket = (20.0 + u2 * (96.0 + 13.0 * u2)) -
                         (20.0 + u2 * (-156.0 + 13.0 * u2)) * c2;
  return -ring_energy_scale(alpha1, sigma_rho, a) * bracket / std::pow(1.0 + u2, 5.5);
}

double ring_energy_e1_axial(double alpha1, double sigma_z, double a, double h, double theta) {
  check_radius(a);
  const double u2 = (h / a) * (h / a);
  const double c2 = std::cos(2.0 * theta);
  const double bracket = (26.0 + u2 * (3.0 + 40.0 * u2)) +
                         (26.0 + u2 * (-123.0 + 40.0 * u2)) * c2;
  return -ring_energy_scale(alpha1, sigma_z, a) * bracket / std::pow(1.0 + u2, 5.5);
}

double ring_energy_e1_inplane_iso(double alpha1, double sigma, double a, double h, double theta) {
  check_radius(a);
  const double u2 = (h / a) * (h / a);
  const double c2 = std::cos(2.0 * theta);
  const double bracket = (33.0 + u2 * (122.0 + 26.0 * u2)) -
                         (33.0 + u2 * (-130.0 + 26.0 * u2)) * c2;
  return -ring_energy_scale(alpha1, sigma, a) * bracket / std::pow(1.0 + u2, 5.5);
}

double ring_force_e1_radial(double alpha1, double sigma_rho, double a, double h, double theta) {
  check_radius(a);
  const double u = h / a;
  const double u2 = u * u;
  const double c2 = std::cos(2.0 * theta);
  const double bracket = (28.0 + u2 * (812.0 + 91.0 * u2)) -
                         (532.0 + u2 * (-1456.0 + 91.0 * u2)) * c2;
  return -(ring_energy_scale(alpha1, sigma_rho, a) / a) * u * bracket / std::pow(1.0 + u2, 6.5);
}

double ring_force_e1_axial(double alpha1, double sigma_z, double a, double h, double theta) {
  check_radius(a);
  const double u = h / a;
  const double u2 = u * u;
  const double c2 = std::cos(2.0 * theta);
  const double bracket = (40.0 + u2 * (-19.0 + 40.0 * u2)) +
                         (76.0 + u2 * (-181.0 + 40.0 * u2)) * c2;
  return -(ring_energy_scale(alpha1, sigma_z, a) / a) * 7.0 * u * bracket /
         std::pow(1.0 + u2, 6.5);
}

namespace {

// Radial antiderivative shared by the disc and plate: the disc energy is
//   pref * [g(b) - g(a)],   g(rho) = -bracket(rho) / (rho^2 + h^2)^{9/2},
// whose derivative in the outer radius reproduces the ring integrand.
struct LayerForm {
  double pref;  // in units of alpha1 lambda
  double c0[3];  // bracket theta-independent part, coefficients of rho^4, rho^2 h^2, h^4
  double c1[3];  // bracket cos(2 theta) part
};

LayerForm layer_form(LayerMode mode) {
  switch (mode) {
    case LayerMode::InPlaneIso:
      return {-1.0 / (320.0 * kPi), {33.0, 106.0, 38.0}, {-33.0, 74.0, 2.0}};
    case LayerMode::Radial:
      return {-1.0 / (64.0 * kPi), {4.0, 16.0, 5.0}, {-4.0, 20.0, 3.0}};
    case LayerMode::Axial:
      return {-1.0 / (320.0 * kPi), {26.0, 17.0, 26.0}, {26.0, -73.0, 6.0}};
  }
  throw std::invalid_argument("unknown layer mode");
}

double layer_g(const LayerForm& form, double rho, double h, double c2) {
  const double r2 = rho * rho, h2 = h * h;
  const double b0 = (form.c0[0] * r2 + form.c0[1] * h2) * r2 + form.c0[2] * h2 * h2;
  const double b1 = (form.c1[0] * r2 + form.c1[1] * h2) * r2 + form.c1[2] * h2 * h2;
  return -(b0 + b1 * c2) / std::pow(r2 + h2, 4.5);
}

}  // namespace

double disc_energy_e1(LayerMode mode, double alpha1, double lambda, double a, double b, double h,
                      double theta) {
  check_radius(a);
  if (!(b > a)) throw std::invalid_argument("disc: outer radius must exceed inner radius");
  const LayerForm form = layer_form(mode);
  const double c2 = std::cos(2.0 * theta);
  return alpha1 * lambda * form.pref * (layer_g(form, b, h, c2) - layer_g(form, a, h, c2));
}

double plate_energy_e1(LayerMode mode, double alpha1, double lambda, double a, double h,
                       double theta) {
  check_radius(a);
  const LayerForm form = layer_form(mode);
  const double c2 = std::cos(2.0 * theta);
  return alpha1 * lambda * form.pref * (0.0 - layer_g(form, a, h, c2));
}

}  // namespace polder
