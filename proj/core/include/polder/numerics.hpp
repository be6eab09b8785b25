// Numerical differentiation and derivative-free root finding used by the
// analysis layer and by validation against the quadrature reference.

#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace polder {

struct DerivativeResult {
  double value;
  double error;  // estimated absolute error
};

// Central-difference derivative with Richardson extrapolation (Ridders'
// tableau). step0 is the initial full step; the tableau shrinks it
// geometrically and stops when the error estimate starts growing.
DerivativeResult derivative_richardson(const std::function<double(double)>& f, double x,
                                       double step0);

// Force along +h from an energy profile, F = -dE/dh; relative accuracy
// around 1e-10 for smooth profiles, target 1e-8.
double force_numeric(const std::function<double(double)>& energy_of_h, double h);

// Torque conjugate to an angle, tau = -dE/dtheta.
double torque_numeric(const std::function<double(double)>& energy_of_theta, double theta);

// Brent's method on a bracketing interval [lo, hi] with f(lo) f(hi) <= 0.
double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  double xtol = 1e-14);

// Scan [lo, hi] on n equally spaced points and return the consecutive pairs
// that bracket a sign change (zeros landing exactly on a grid point count
// toward the left pair).
std::vector<std::pair<double, double>> sign_change_brackets(
    const std::function<double(double)>& f, double lo, double hi, int n);

}  // namespace polder
