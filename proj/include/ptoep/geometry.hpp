#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ptoep {

// Real tangent vector of C^n at `base`, with the real tangent space
// identified with C^n (multiplication by i is the complex structure).
struct TangentVector {
  std::vector<std::complex<double>> base;
  std::vector<std::complex<double>> direction;
};

// Fubini-Study Kaehler form in the affine chart,
//   omega = i [ (1+|z|^2) sum_k dz_k ^ dz_k~ - sum_{k,l} z_k~ z_l dz_k ^ dz_l~ ] / (1+|z|^2)^2,
// evaluated on X, Y via dz_k(X) = X_k. Both vectors must be based at z;
// the imaginary residue is checked (<= 1e-13 scale) and discarded.
double fubini_study_form(std::span<const std::complex<double>> z, const TangentVector& x,
                         const TangentVector& y);

// Riemannian metric g(X, Y) = omega(X, iY).
double fs_metric(std::span<const std::complex<double>> z, const TangentVector& x,
                 const TangentVector& y);

// Tangents of the diagonal-torus orbit through z: v_j = i z_j e_j.
// Requires every coordinate nonzero (the dense chart region).
std::vector<TangentVector> torus_orbit_tangents(std::span<const std::complex<double>> z);

// Tangents of the radial leaf through z: u_j = (z_j/|z_j|) e_j; spans the
// orthogonal complement i * (orbit tangent space).
std::vector<TangentVector> radial_leaf_tangents(std::span<const std::complex<double>> z);

// max_{j,k} |omega(v_j, v_k)| over the orbit tangents; zero means the orbit
// is Lagrangian at z.
double lagrangian_defect(std::span<const std::complex<double>> z);

// max_{j,k} |g(v_j, u_k)| between orbit and radial-leaf tangents; zero means
// the two foliations meet orthogonally at z.
double frame_orthogonality_defect(std::span<const std::complex<double>> z);

// Torus orbit in homogeneous coordinates: n+1 strictly positive radii with
// sum of squares 1 (a point of S^n in the positive orthant).
struct OrbitSpec {
  std::vector<double> radii;
};

void validate(const OrbitSpec& spec);

// Chart image of the orbit: the k^n-point grid
// { ((r_1/r_0) e^{i theta_1}, ..., (r_n/r_0) e^{i theta_n}) } over uniform
// angles theta = 2 pi a / k, odometer order (last coordinate fastest).
std::vector<std::vector<std::complex<double>>> sample_orbit(const OrbitSpec& spec, int grid);

}  // namespace ptoep
