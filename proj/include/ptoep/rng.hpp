#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace ptoep {

// Deterministic random source shared by the invariance checker, the geometry
// sampling harness and the tests. The engine is std::mt19937_64 (fully
// pinned by the standard) and doubles are produced by the explicit 53-bit
// mapping below, so streams are reproducible bit-for-bit across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  double angle() { return 6.283185307179586476925286766559 * uniform01(); }

  // Nonzero complex draw from the closed disk of the given radius: the
  // modulus radius*(1-u) lies in (0, radius], the phase is uniform.
  std::complex<double> nonzero_disk(double radius) {
    const double rho = radius * (1.0 - uniform01());
    const double phi = angle();
    return {rho * std::cos(phi), rho * std::sin(phi)};
  }

  // Point of (C*)^n drawn coordinate by coordinate from nonzero_disk.
  std::vector<std::complex<double>> nonzero_point(int n, double radius) {
    std::vector<std::complex<double>> z(static_cast<size_t>(n));
    for (auto& zj : z) zj = nonzero_disk(radius);
    return z;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ptoep
