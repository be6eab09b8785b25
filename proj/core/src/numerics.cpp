#include "polder/numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace polder {

DerivativeResult derivative_richardson(const std::function<double(double)>& f, double x,
                                       double step0) {
  if (!(step0 > 0.0)) throw std::invalid_argument("derivative_richardson: step must be positive");
  constexpr int kTab = 12;
  constexpr double kShrink = 1.4;
  constexpr double kShrink2 = kShrink * kShrink;
  constexpr double kSafe = 2.0;

  double tab[kTab][kTab];
  double hh = step0;
  tab[0][0] = (f(x + hh) - f(x - hh)) / (2.0 * hh);
  double best = tab[0][0];
  double err = std::numeric_limits<double>::max();

  for (int i = 1; i < kTab; ++i) {
    hh /= kShrink;
    tab[0][i] = (f(x + hh) - f(x - hh)) / (2.0 * hh);
    double fac = kShrink2;
    for (int j = 1; j <= i; ++j) {
      tab[j][i] = (tab[j - 1][i] * fac - tab[j - 1][i - 1]) / (fac - 1.0);
      fac *= kShrink2;
      const double errt = std::max(std::abs(tab[j][i] - tab[j - 1][i]),
                                   std::abs(tab[j][i] - tab[j - 1][i - 1]));
      if (errt <= err) {
        err = errt;
        best = tab[j][i];
      }
    }
    // Stop once higher orders only amplify roundoff.
    if (std::abs(tab[i][i] - tab[i - 1][i - 1]) >= kSafe * err) break;
  }
  return {best, err};
}

namespace {

// The curvature scale of the energy is not known a priori, and a too-coarse
// initial step can make the extrapolation give up early with a large error
// estimate. Retry with finer steps while the estimate looks poor and keep
// the best tableau.
double refined_derivative(const std::function<double(double)>& f, double x, double step) {
  DerivativeResult best = derivative_richardson(f, x, step);
  for (int k = 0; k < 2 && best.error > 1e-13 * std::max(1.0, std::abs(best.value)); ++k) {
    step *= 0.25;
    const DerivativeResult d = derivative_richardson(f, x, step);
    if (d.error < best.error) best = d;
  }
  return best.value;
}

}  // namespace

double force_numeric(const std::function<double(double)>& energy_of_h, double h) {
  return -refined_derivative(energy_of_h, h, 0.05 * std::max(1.0, std::abs(h)));
}

double torque_numeric(const std::function<double(double)>& energy_of_theta, double theta) {
  return -refined_derivative(energy_of_theta, theta, 0.05);
}

double brent_root(const std::function<double(double)>& f, double lo, double hi, double xtol) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) throw std::invalid_argument("brent_root: interval does not bracket a root");

  double c = a, fc = fa;
  double d = b - a, e = d;
  constexpr int kMaxIter = 200;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // Inverse quadratic interpolation, falling back to secant.
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
      const double min2 = std::abs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }
  return b;
}

std::vector<std::pair<double, double>> sign_change_brackets(
    const std::function<double(double)>& f, double lo, double hi, int n) {
  if (n < 2) throw std::invalid_argument("sign_change_brackets: need at least 2 points");
  std::vector<std::pair<double, double>> brackets;
  const double dx = (hi - lo) / (n - 1);
  double x_prev = lo;
  double f_prev = f(lo);
  for (int i = 1; i < n; ++i) {
    const double x = lo + i * dx;
    const double fx = f(x);
    if (f_prev == 0.0 || f_prev * fx < 0.0) brackets.emplace_back(x_prev, x);
    x_prev = x;
    f_prev = fx;
  }
  return brackets;
}

}  // namespace polder
