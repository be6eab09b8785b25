// Deterministic 1-D quadrature: periodic trapezoid sums with interval
// doubling, and adaptive Gauss-Legendre panels with interval halving.
// Panel evaluation order and summation order are fixed, so a given settings
// object always reproduces bitwise identical results.

#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polder {

struct QuadratureSettings {
  double rel_tol = 1e-12;
  double abs_tol = 1e-300;
  int max_subdivisions = 2000;
};

// Thrown when a quadrature fails to reach the requested tolerance; carries
// the best estimate so far and the associated error bound.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double best, double bound)
      : std::runtime_error(what), best_(best), bound_(bound) {}
  double best_estimate() const { return best_; }
  double error_bound() const { return bound_; }

 private:
  double best_;
  double bound_;
};

// Pairwise (cascade) sum of v in index order.
double pairwise_sum(const std::vector<double>& v);

// Integral of a periodic function over one period [0, period) by the
// trapezoid rule with doubling; spectrally accurate for smooth integrands.
double periodic_trapezoid(const std::function<double(double)>& f, double period,
                          const QuadratureSettings& settings = {});

// Adaptive Gauss-Legendre integration of f over [lo, hi]: 15-point panels,
// bisect while a panel's halving correction exceeds its share of the error
// budget. An optional hint pre-splits the range at the given interior points
// (useful for very wide ranges where a geometric seeding is cheaper than
// letting the adaptation discover the scale).
double adaptive_gauss(const std::function<double(double)>& f, double lo, double hi,
                      const QuadratureSettings& settings = {},
                      const std::vector<double>& split_hints = {});

// Integral of f over [lo, infinity) for integrands decaying at least as fast
// as x^-2: the tail beyond L = 4 max(lo, scale_hint) is mapped to a finite
// interval with x = 1/s.
double adaptive_gauss_semi_infinite(const std::function<double(double)>& f, double lo,
                                    double scale_hint, const QuadratureSettings& settings = {});

}  // namespace polder
