#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace ptoep {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

enum class QuadDomain { kUnitInterval, kHalfLineS, kAngle };

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  QuadDomain domain = QuadDomain::kUnitInterval;

  int points() const { return static_cast<int>(nodes.size()); }
};

// Gauss-Legendre on (0,1), exact for polynomials of degree <= 2k-1.
// Nodes from Newton iteration on P_k to 1e-15. 2 <= k <= 512.
QuadRule gauss_legendre(int k);

// Rule for integrals over (0, inf) in the variable s = r^2, obtained from
// gauss_legendre(k) by the compactification s = u/(1-u): nodes u/(1-u),
// weights w/(1-u)^2. Exact whenever the pullback f(u/(1-u))/(1-u)^2 is a
// polynomial, e.g. for f = s^a (1+s)^-b with integers 0 <= a <= b-2.
QuadRule half_line_rule(int k);

// Uniform rule on [0, 2pi): nodes 2*pi*j/k, weights 2*pi/k. Integrates
// e^{il theta} exactly (to rounding) for |l| < k.
QuadRule angular_rule(int k);

struct QuadConfig {
  int radial_points = 64;
  int angular_points = 8;

  // Library-wide defaults for a weight-m space. The angular count covers the
  // frequencies of e_q conj(e_p) plus modest symbol content; callers with
  // higher-degree z-monomial symbols should raise angular_points.
  static QuadConfig defaults_for_weight(int m) {
    return {64, std::max(4 * m + 4, 8)};
  }
};

namespace detail {

// Visits the grid over R_+^n in s-coordinates in a fixed odometer order
// (last axis fastest). The grid is the image of the tensor Gauss-Legendre
// grid on (0,1)^n under the simplex substitution
//
//   s_j = t_j / ((1-t_j)(1-t_{j+1})...(1-t_n)),   weight factor
//   prod_j (1-t_j)^-(j+1),
//
// which maps the cube onto R_+^n and pulls the Dirichlet kernels
// s^p (1+s_1+...+s_n)^-b back to polynomials (note 1+sum s = prod 1/(1-t_j)).
// For n = 1 this is exactly half_line_rule. Plain per-coordinate tensoring
// of the half-line rule is not used for n >= 2: the pullback of the
// coupled kernel acquires a corner singularity at t = (1,..,1) that caps
// tensor Gauss-Legendre at algebraic accuracy.
template <class Fn>
void for_each_radial_node(int n, const QuadRule& base, Fn&& fn) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (base.domain != QuadDomain::kUnitInterval) {
    throw std::invalid_argument("radial driver requires a unit-interval base rule");
  }
  const int k = base.points();
  std::vector<int> idx(static_cast<size_t>(n), 0);
  std::vector<double> s(static_cast<size_t>(n));
  for (;;) {
    double weight = 1.0;
    double suffix = 1.0;  // prod_{i >= j} (1 - t_i), built from the right
    for (int j = n - 1; j >= 0; --j) {
      const double t = base.nodes[static_cast<size_t>(idx[static_cast<size_t>(j)])];
      const double w = base.weights[static_cast<size_t>(idx[static_cast<size_t>(j)])];
      const double om = 1.0 - t;
      suffix *= om;
      s[static_cast<size_t>(j)] = t / suffix;
      double jac = 1.0;
      for (int e = 0; e < j + 2; ++e) jac *= om;  // (1-t_j)^(j+2), 0-based j
      weight *= w / jac;
    }
    fn(std::span<const double>(s), weight);
    int axis = n - 1;
    while (axis >= 0) {
      if (++idx[static_cast<size_t>(axis)] < k) break;
      idx[static_cast<size_t>(axis)] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
}

// Angular x radial product grid: radial index slow, angular fast, both in
// odometer order. `fn(angles, radii, weight)` receives r_j = sqrt(s_j) and
// the combined weight for integration against prod dtheta_j r_j dr_j
// (the radial part carries the Lebesgue factor via ds_j/2).
template <class Fn>
void for_each_polar_node(int n, const QuadConfig& config, Fn&& fn) {
  const QuadRule base = gauss_legendre(config.radial_points);
  const QuadRule ang = angular_rule(config.angular_points);
  const int ka = ang.points();
  double half_pow = 1.0;
  for (int j = 0; j < n; ++j) half_pow *= 0.5;

  std::vector<double> r(static_cast<size_t>(n));
  std::vector<double> theta(static_cast<size_t>(n));
  std::vector<int> aidx(static_cast<size_t>(n));
  for_each_radial_node(n, base, [&](std::span<const double> s, double ws) {
    for (int j = 0; j < n; ++j) r[static_cast<size_t>(j)] = std::sqrt(s[static_cast<size_t>(j)]);
    const double wr = ws * half_pow;
    std::fill(aidx.begin(), aidx.end(), 0);
    for (;;) {
      double wa = wr;
      for (int j = 0; j < n; ++j) {
        theta[static_cast<size_t>(j)] = ang.nodes[static_cast<size_t>(aidx[static_cast<size_t>(j)])];
        wa *= ang.weights[static_cast<size_t>(aidx[static_cast<size_t>(j)])];
      }
      fn(std::span<const double>(theta), std::span<const double>(r), wa);
      int axis = n - 1;
      while (axis >= 0) {
        if (++aidx[static_cast<size_t>(axis)] < ka) break;
        aidx[static_cast<size_t>(axis)] = 0;
        --axis;
      }
      if (axis < 0) break;
    }
  });
}

}  // namespace detail

// Integral of f(s), s in R_+^n, summed in a fixed deterministic order.
// `base` must be a unit-interval rule; for n == 1 a half_line_s rule is
// also accepted and used verbatim.
template <class F>
std::complex<double> integrate_radial(F&& f, int n, const QuadRule& base) {
  std::complex<long double> acc(0.0, 0.0);
  const auto accumulate = [&acc](std::complex<double> term) {
    acc += std::complex<long double>(term.real(), term.imag());
  };
  if (base.domain == QuadDomain::kHalfLineS) {
    if (n != 1) {
      throw std::invalid_argument(
          "half-line rules drive one-dimensional integrals; pass the "
          "unit-interval base rule for n >= 2");
    }
    for (int i = 0; i < base.points(); ++i) {
      const double s = base.nodes[static_cast<size_t>(i)];
      accumulate(base.weights[static_cast<size_t>(i)] *
                 std::complex<double>(f(std::span<const double>(&s, 1))));
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  }
  detail::for_each_radial_node(n, base, [&](std::span<const double> s, double w) {
    accumulate(w * std::complex<double>(f(s)));
  });
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

template <class F>
std::complex<double> integrate_radial(F&& f, int n, int radial_points) {
  return integrate_radial(std::forward<F>(f), n, gauss_legendre(radial_points));
}

// Integral of f(theta, r) over T^n x R_+^n against prod dtheta_j r_j dr_j,
// i.e. the polar form of Lebesgue measure on C^n.
template <class F>
std::complex<double> integrate_polar(F&& f, int n, const QuadConfig& config) {
  std::complex<long double> acc(0.0, 0.0);
  detail::for_each_polar_node(
      n, config, [&](std::span<const double> theta, std::span<const double> r, double w) {
        const std::complex<double> term = w * std::complex<double>(f(theta, r));
        acc += std::complex<long double>(term.real(), term.imag());
      });
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

}  // namespace ptoep
