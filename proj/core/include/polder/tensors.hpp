// Vectors, symmetric rank-2 tensors and the frames used throughout:
// the atom's polarizability eigenbasis anchored to spherical unit vectors,
// and the co-rotating cylindrical frame of an annular body in the z=0 plane
// with the atom on the symmetry axis at (0,0,h).

#pragma once

#include <array>
#include <cmath>

namespace polder {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline Vec3 operator*(const Vec3& v, double s) { return s * v; }
inline Vec3 operator/(const Vec3& v, double s) { return {v.x / s, v.y / s, v.z / s}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline Vec3 normalized(const Vec3& v) { return v / v.norm(); }

// Symmetric 3x3 tensor stored as its six independent components.
struct SymTensor3 {
  double xx = 0.0, xy = 0.0, xz = 0.0, yy = 0.0, yz = 0.0, zz = 0.0;

  static SymTensor3 identity() { return {1.0, 0.0, 0.0, 1.0, 0.0, 1.0}; }

  // Outer product v v^T.
  static SymTensor3 dyad(const Vec3& v) {
    return {v.x * v.x, v.x * v.y, v.x * v.z, v.y * v.y, v.y * v.z, v.z * v.z};
  }

  Vec3 apply(const Vec3& v) const {
    return {xx * v.x + xy * v.y + xz * v.z,
            xy * v.x + yy * v.y + yz * v.z,
            xz * v.x + yz * v.y + zz * v.z};
  }

  double trace() const { return xx + yy + zz; }
};

inline SymTensor3 operator+(const SymTensor3& a, const SymTensor3& b) {
  return {a.xx + b.xx, a.xy + b.xy, a.xz + b.xz, a.yy + b.yy, a.yz + b.yz, a.zz + b.zz};
}

inline SymTensor3 operator*(double s, const SymTensor3& t) {
  return {s * t.xx, s * t.xy, s * t.xz, s * t.yy, s * t.yz, s * t.zz};
}

// tr(A B) for symmetric A, B.
inline double trace_product(const SymTensor3& a, const SymTensor3& b) {
  return a.xx * b.xx + a.yy * b.yy + a.zz * b.zz +
         2.0 * (a.xy * b.xy + a.xz * b.xz + a.yz * b.yz);
}

// v . A v
inline double quad_form(const Vec3& v, const SymTensor3& a) { return dot(v, a.apply(v)); }

// Eigenvalues of a symmetric 3x3 tensor, ascending. Analytic (trigonometric)
// method; adequate for the well-conditioned tensors used here.
std::array<double, 3> eigenvalues_sym3(const SymTensor3& t);

// Spherical unit vectors at polar angle theta (from +z) and azimuth phi.
struct SphericalFrame {
  Vec3 rhat;
  Vec3 thetahat;
  Vec3 phihat;
};
SphericalFrame spherical_frame(double theta, double phi);

// Orthonormal eigenbasis of the atom's polarizability tensor.
//   e1 = rhat_s(theta, phi_s)
//   e2 = cos(beta) phihat_s + sin(beta) thetahat_s
//   e3 = e1 x e2
// e3 spans the same axis as (-sin(beta) phihat_s + cos(beta) thetahat_s);
// taking the cross product fixes the sign so the triad is right-handed,
// which leaves every dyadic (and hence every energy) unchanged.
struct Triad {
  Vec3 e1;
  Vec3 e2;
  Vec3 e3;
};
Triad atom_eigenbasis(double theta, double beta, double phi_s);

// Atom polarizability: principal values alpha1..alpha3 (static values,
// dimension length^3 in Gaussian-like natural units) on the eigenbasis
// determined by the orientation angles (radians).
struct AtomPolarizability {
  double alpha1 = 1.0;
  double alpha2 = 0.0;
  double alpha3 = 0.0;
  double theta = 0.0;
  double beta = 0.0;
  double phi_s = 0.0;
};

SymTensor3 atom_tensor(const AtomPolarizability& atom);

// Material polarizability of an annular body, diagonal in the co-rotating
// cylindrical frame: comp_z zz + comp_rho rr + comp_phi pp. For a ring the
// components are per unit length; for a disc or plate, per unit area.
struct AnnularPolarizability {
  double comp_z = 0.0;
  double comp_rho = 0.0;
  double comp_phi = 0.0;

  static AnnularPolarizability axial(double v) { return {v, 0.0, 0.0}; }
  static AnnularPolarizability radial(double v) { return {0.0, v, 0.0}; }
  static AnnularPolarizability tangential(double v) { return {0.0, 0.0, v}; }
  // Isotropic within the plane of the body (rho and phi directions equal).
  static AnnularPolarizability in_plane_iso(double v) { return {0.0, v, v}; }
  static AnnularPolarizability isotropic(double v) { return {v, v, v}; }
};

// The annulus tensor evaluated at azimuth phi on the body.
SymTensor3 annulus_frame_tensor(const AnnularPolarizability& pol, double phi);

// Unit separation vector between the atom at (0, 0, h) and a source point at
// cylindrical (rho, phi, 0), together with the separation distance:
//   r = sqrt(rho^2 + h^2),   rhat = (rho rhohat(phi) - h zhat) / r
// pointing from the atom toward the source; only dyads of rhat enter any
// energy, so the overall sign is immaterial. Throws std::invalid_argument
// when rho = h = 0 (coincident points).
struct Separation {
  double r;
  Vec3 rhat;
};
Separation rhat_on_axis(double rho, double h, double phi = 0.0);

}  // namespace polder
