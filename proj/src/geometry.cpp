#include "ptoep/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "ptoep/quadrature.hpp"  // kTwoPi

namespace ptoep {

namespace {

using Complex = std::complex<double>;

void require_base(std::span<const Complex> z, const TangentVector& v) {
  if (v.base.size() != z.size() || v.direction.size() != z.size()) {
    throw std::invalid_argument("tangent vector dimension mismatch");
  }
  for (size_t j = 0; j < z.size(); ++j) {
    if (v.base[j] != z[j]) {
      throw std::invalid_argument("tangent vectors must share the base point");
    }
  }
}

void require_chart_region(std::span<const Complex> z) {
  if (z.empty()) throw std::invalid_argument("empty point");
  for (const Complex& zj : z) {
    if (zj == Complex(0.0, 0.0)) {
      throw std::invalid_argument("point has a zero coordinate (outside the dense chart region)");
    }
  }
}

}  // namespace

double fubini_study_form(std::span<const Complex> z, const TangentVector& x,
                         const TangentVector& y) {
  require_base(z, x);
  require_base(z, y);
  double q = 1.0;
  for (const Complex& zj : z) q += std::norm(zj);
  const double q2 = q * q;

  Complex sum(0.0, 0.0);
  const size_t n = z.size();
  for (size_t k = 0; k < n; ++k) {
    for (size_t l = 0; l < n; ++l) {
      const Complex h = ((k == l ? Complex(q, 0.0) : Complex(0.0, 0.0)) -
                         std::conj(z[k]) * z[l]) / q2;
      sum += h * (x.direction[k] * std::conj(y.direction[l]) -
                  y.direction[k] * std::conj(x.direction[l]));
    }
  }
  const Complex value = Complex(0.0, 1.0) * sum;
  double magnitude = 0.0;
  for (size_t k = 0; k < n; ++k) {
    magnitude += std::abs(x.direction[k]) + std::abs(y.direction[k]);
  }
  if (std::abs(value.imag()) > 1e-13 * (1.0 + magnitude * magnitude)) {
    throw std::runtime_error("non-real value of the Kaehler form");
  }
  return value.real();
}

double fs_metric(std::span<const Complex> z, const TangentVector& x, const TangentVector& y) {
  TangentVector jy = y;
  for (Complex& d : jy.direction) d *= Complex(0.0, 1.0);
  return fubini_study_form(z, x, jy);
}

std::vector<TangentVector> torus_orbit_tangents(std::span<const Complex> z) {
  require_chart_region(z);
  std::vector<TangentVector> out(z.size());
  for (size_t j = 0; j < z.size(); ++j) {
    out[j].base.assign(z.begin(), z.end());
    out[j].direction.assign(z.size(), Complex(0.0, 0.0));
    out[j].direction[j] = Complex(0.0, 1.0) * z[j];
  }
  return out;
}

std::vector<TangentVector> radial_leaf_tangents(std::span<const Complex> z) {
  require_chart_region(z);
  std::vector<TangentVector> out(z.size());
  for (size_t j = 0; j < z.size(); ++j) {
    out[j].base.assign(z.begin(), z.end());
    out[j].direction.assign(z.size(), Complex(0.0, 0.0));
    out[j].direction[j] = z[j] / std::abs(z[j]);
  }
  return out;
}

double lagrangian_defect(std::span<const Complex> z) {
  const auto v = torus_orbit_tangents(z);
  double defect = 0.0;
  for (size_t j = 0; j < v.size(); ++j) {
    for (size_t k = 0; k < v.size(); ++k) {
      defect = std::max(defect, std::abs(fubini_study_form(z, v[j], v[k])));
    }
  }
  return defect;
}

double frame_orthogonality_defect(std::span<const Complex> z) {
  const auto v = torus_orbit_tangents(z);
  const auto u = radial_leaf_tangents(z);
  double defect = 0.0;
  for (size_t j = 0; j < v.size(); ++j) {
    for (size_t k = 0; k < u.size(); ++k) {
      defect = std::max(defect, std::abs(fs_metric(z, v[j], u[k])));
    }
  }
  return defect;
}

void validate(const OrbitSpec& spec) {
  if (spec.radii.size() < 2) {
    throw std::invalid_argument("orbit spec needs n+1 >= 2 radii");
  }
  double norm_sq = 0.0;
  for (double r : spec.radii) {
    if (!(r > 0.0)) throw std::invalid_argument("orbit radii must be strictly positive");
    norm_sq += r * r;
  }
  if (std::abs(norm_sq - 1.0) > 1e-12) {
    throw std::invalid_argument("orbit radii must have unit norm (within 1e-12)");
  }
}

std::vector<std::vector<Complex>> sample_orbit(const OrbitSpec& spec, int grid) {
  validate(spec);
  if (grid < 1) throw std::invalid_argument("grid must be >= 1");
  const int n = static_cast<int>(spec.radii.size()) - 1;
  std::vector<double> moduli(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    moduli[static_cast<size_t>(j)] = spec.radii[static_cast<size_t>(j + 1)] / spec.radii[0];
  }

  std::vector<std::vector<Complex>> points;
  std::int64_t total = 1;
  for (int j = 0; j < n; ++j) total *= grid;
  points.reserve(static_cast<size_t>(total));

  std::vector<int> idx(static_cast<size_t>(n), 0);
  for (;;) {
    std::vector<Complex> z(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      const double theta = kTwoPi * static_cast<double>(idx[static_cast<size_t>(j)]) /
                           static_cast<double>(grid);
      z[static_cast<size_t>(j)] = std::polar(moduli[static_cast<size_t>(j)], theta);
    }
    points.push_back(std::move(z));
    int axis = n - 1;
    while (axis >= 0) {
      if (++idx[static_cast<size_t>(axis)] < grid) break;
      idx[static_cast<size_t>(axis)] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  return points;
}

}  // namespace ptoep
