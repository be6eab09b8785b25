#include "polder/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polder/closed_forms.hpp"
#include "polder/numerics.hpp"

namespace polder {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

// Small-height repulsion criterion of the radial family: the force just off
// the plane is repulsive iff cos(2 theta) > 1/19, independently of the
// outer radius (ring, disc and plate share the coefficient ratio).
constexpr double kNearPlaneCos2 = 1.0 / 19.0;
}  // namespace

Cos2Split cos2_split(const EnergyFamily& family, double u, double check_tol) {
  const double e0 = family(u, 0.0);
  const double e90 = family(u, kHalfPi);
  Cos2Split split{0.5 * (e0 + e90), 0.5 * (e0 - e90)};
  // At 45 degrees the cos(2 theta) term is absent, so any residual against
  // a_part measures departure from the assumed form.
  const double e45 = family(u, 0.25 * kPi);
  const double scale = std::max({std::abs(e0), std::abs(e90), 1e-300});
  if (std::abs(e45 - split.a_part) > check_tol * scale)
    throw std::domain_error("cos2_split: family is not of the form A(u) + B(u) cos(2 theta)");
  return split;
}

std::vector<double> torsion_free_heights(const EnergyFamily& family, double u_max,
                                         int scan_points) {
  if (!(u_max > 0.0)) throw std::invalid_argument("torsion_free_heights: u_max must be positive");
  auto b_part = [&family](double u) { return cos2_split(family, u).b_part; };
  const double u_lo = u_max / scan_points;
  std::vector<double> roots;
  for (const auto& [lo, hi] : sign_change_brackets(b_part, u_lo, u_max, scan_points)) {
    const double r = brent_root(b_part, lo, hi, 1e-13);
    if (roots.empty() || std::abs(r - roots.back()) > 1e-9) roots.push_back(r);
  }
  return roots;
}

std::vector<double> torsion_free_analytic(TorsionFamily family) {
  // Each cos(2 theta) coefficient is a quadratic in x = u^2; its positive
  // roots give the torsion-free heights.
  auto both = [](double a, double b, double c) {
    // a x^2 + b x + c with two positive roots
    const double disc = std::sqrt(b * b - 4.0 * a * c);
    return std::vector<double>{std::sqrt((-b - disc) / (2.0 * a)),
                               std::sqrt((-b + disc) / (2.0 * a))};
  };
  auto upper = [](double a, double b, double c) {
    // one positive root (the other lies at negative x)
    const double disc = std::sqrt(b * b - 4.0 * a * c);
    return std::vector<double>{std::sqrt((-b + disc) / (2.0 * a))};
  };
  switch (family) {
    case TorsionFamily::RingRadial: return both(13.0, -156.0, 20.0);
    case TorsionFamily::RingAxial: return both(40.0, -123.0, 26.0);
    case TorsionFamily::RingInPlaneIso: return both(26.0, -130.0, 33.0);
    case TorsionFamily::PlateInPlaneIso: return upper(2.0, 74.0, -33.0);
    case TorsionFamily::PlateRadial: return upper(3.0, 20.0, -4.0);
    case TorsionFamily::PlateAxial: return both(6.0, -73.0, 26.0);
  }
  throw std::invalid_argument("unknown torsion family");
}

namespace {

// Scan grid for interval extraction: dense where all known sign structure
// lives (one feature is a sliver of width a few 1e-2 shrinking to zero near
// its critical angle), coarser far out.
std::vector<double> scan_grid(double u_max) {
  std::vector<double> grid;
  const double dense_hi = std::min(4.0, u_max);
  const int n_dense = static_cast<int>(std::floor(dense_hi / 1e-4 + 0.5));
  grid.reserve(n_dense + 1601);
  for (int i = 1; i <= n_dense; ++i) grid.push_back(i * 1e-4);
  if (u_max > dense_hi) {
    const int n_coarse = 1600;
    const double du = (u_max - dense_hi) / n_coarse;
    for (int i = 1; i <= n_coarse; ++i) grid.push_back(dense_hi + i * du);
  }
  if (grid.empty() || grid.back() < u_max) grid.push_back(u_max);
  return grid;
}

// Existence-only test with a cascade of grids: each level refines the dense
// window tenfold down to finest_du and is consulted only when the previous
// one saw nothing, so calls far from a region boundary stay cheap while
// slivers near one are still caught.
bool any_repulsion(const std::function<double(double)>& f, double u_max, double finest_du) {
  const double dense_hi = std::min(4.0, u_max);
  for (double du = 1e-3; du > 0.5 * finest_du; du *= 0.1) {
    const int n = static_cast<int>(std::floor(dense_hi / du + 0.5));
    for (int i = 1; i <= n; ++i)
      if (f(i * du) > 0.0) return true;
  }
  if (u_max > dense_hi) {
    const int n_coarse = 1600;
    const double du = (u_max - dense_hi) / n_coarse;
    for (int i = 1; i <= n_coarse; ++i)
      if (f(dense_hi + i * du) > 0.0) return true;
  }
  return false;
}

}  // namespace

std::vector<Interval> repulsion_intervals(const ForceFamily& force, double theta, double u_max) {
  if (!(u_max > 0.0)) throw std::invalid_argument("repulsion_intervals: u_max must be positive");
  auto f = [&force, theta](double u) { return force(u, theta); };
  const std::vector<double> grid = scan_grid(u_max);

  std::vector<Interval> result;
  bool inside = false;
  double prev_u = 0.0;  // the force vanishes at the plane itself
  Interval current{0.0, 0.0};
  for (double u : grid) {
    const bool rep = f(u) > 0.0;
    if (rep && !inside) {
      current.lo = (prev_u == 0.0) ? 0.0 : brent_root(f, prev_u, u, 1e-11);
      inside = true;
    } else if (!rep && inside) {
      current.hi = brent_root(f, prev_u, u, 1e-11);
      result.push_back(current);
      inside = false;
    }
    prev_u = u;
  }
  if (inside) {
    current.hi = grid.back();
    result.push_back(current);
  }
  return result;
}

std::vector<double> repulsion_angle_boundaries(const ForceFamily& force, double u_max) {
  auto exists = [&](double theta, double finest_du) {
    auto f = [&force, theta](double u) { return force(u, theta); };
    return any_repulsion(f, u_max, finest_du);
  };

  // A quarter-degree sweep locates every parity change; the narrowest known
  // band of repulsive orientations is several degrees wide, so none can
  // slip between samples. Near a boundary the region narrows like the
  // square root of the angular distance, so the sweep level stays coarse
  // and only the bisection needs the fine levels.
  const double step = 0.25 * kPi / 180.0;
  const int n = static_cast<int>(std::round(kPi / step));
  std::vector<double> boundaries;
  bool prev = exists(0.0, 1e-3);
  for (int i = 1; i <= n; ++i) {
    const bool cur = exists(std::min(i * step, kPi), 1e-3);
    if (cur != prev) {
      // Bisect the predicate change down to 0.01 degrees.
      double lo = (i - 1) * step, hi = std::min(i * step, kPi);
      const double target = 0.005 * kPi / 180.0;
      while (hi - lo > target) {
        const double mid = 0.5 * (lo + hi);
        if (exists(mid, 1e-5) == prev)
          lo = mid;
        else
          hi = mid;
      }
      boundaries.push_back(0.5 * (lo + hi));
      prev = cur;
    }
  }
  return boundaries;
}

double detached_region_threshold(double theta, double xtol, double b_max) {
  // Only meaningful for orientations with no repulsion region attached to
  // the plane, where existence is equivalent to detachment.
  if (!(std::cos(2.0 * theta) < kNearPlaneCos2))
    throw std::invalid_argument(
        "detached_region_threshold: orientation admits a plane-attached region");
  if (!(xtol > 0.0) || !(b_max > 1.0))
    throw std::invalid_argument("detached_region_threshold: bad tolerance or search limit");

  // Radial annular disc with unit inner radius, atom polarizable along its
  // first axis only; force by numerical differentiation of the closed form.
  auto has_region = [theta](double b) {
    auto f = [b, theta](double u) {
      auto energy = [b, theta](double h) {
        return disc_energy_e1(LayerMode::Radial, 1.0, 1.0, 1.0, b, h, theta);
      };
      return force_numeric(energy, u);
    };
    return any_repulsion(f, 4.0, 1e-4);
  };

  double lo = 1.0 + 1e-4;
  double hi = b_max;
  if (!has_region(lo))
    throw std::domain_error("detached_region_threshold: no region near the ring limit");
  if (has_region(hi))
    throw std::domain_error("detached_region_threshold: region persists to b_max");
  while (hi - lo > xtol) {
    const double mid = 0.5 * (lo + hi);
    if (has_region(mid))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

RepulsionMap repulsion_map(const ForceFamily& force, const std::vector<double>& u_grid,
                           const std::vector<double>& theta_grid) {
  RepulsionMap map;
  map.u_grid = u_grid;
  map.theta_grid = theta_grid;
  map.repulsive.resize(u_grid.size() * theta_grid.size());
  map.intervals.reserve(theta_grid.size());
  const double u_max = u_grid.empty() ? 0.0 : *std::max_element(u_grid.begin(), u_grid.end());
  for (std::size_t it = 0; it < theta_grid.size(); ++it) {
    const double theta = theta_grid[it];
    for (std::size_t iu = 0; iu < u_grid.size(); ++iu)
      map.repulsive[it * u_grid.size() + iu] = force(u_grid[iu], theta) > 0.0 ? 1 : 0;
    map.intervals.push_back(u_max > 0.0 ? repulsion_intervals(force, theta, u_max)
                                        : std::vector<Interval>{});
  }
  return map;
}

}  // namespace polder
