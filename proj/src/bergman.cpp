#include "ptoep/bergman.hpp"

#include <cmath>

namespace ptoep {

namespace {

using Complex = std::complex<double>;

double real_ipow(double base, int exponent) {
  double result = 1.0;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Complex complex_ipow(Complex base, int exponent) {
  Complex result(1.0, 0.0);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

double density_from_s_sum(double s_sum, const SpaceParams& params, double normalization) {
  return normalization * real_ipow(1.0 / (1.0 + s_sum), params.n + params.m + 1);
}

// Shared walk for the coefficient/matrix accumulators: visits every polar
// node with the assembled point z, the nu_m quadrature weight, and the
// normalized basis values at z (graded-lex order, phase-power tables).
template <class Fn>
void for_each_measure_node_with_basis(const SpaceParams& params, const QuadConfig& config,
                                      Fn&& fn) {
  validate(params);
  const int n = params.n;
  const int m = params.m;
  const auto indices = enumerate_indices(params);
  const int count = static_cast<int>(indices.size());

  std::vector<double> sqrt_c(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    sqrt_c[static_cast<size_t>(i)] = std::sqrt(normalization_constant(indices[static_cast<size_t>(i)], params));
  }

  const QuadRule ang = angular_rule(config.angular_points);
  const int ka = ang.points();
  // e^{i d theta_a} for every angular node and power d <= m
  std::vector<Complex> unit_phase(static_cast<size_t>(ka));
  std::vector<Complex> phase_pow(static_cast<size_t>(ka) * static_cast<size_t>(m + 1));
  for (int a = 0; a < ka; ++a) {
    const Complex unit = std::polar(1.0, ang.nodes[static_cast<size_t>(a)]);
    unit_phase[static_cast<size_t>(a)] = unit;
    Complex acc(1.0, 0.0);
    for (int d = 0; d <= m; ++d) {
      phase_pow[static_cast<size_t>(a) * static_cast<size_t>(m + 1) + static_cast<size_t>(d)] = acc;
      acc *= unit;
    }
  }
  double angular_weight = 1.0;
  for (int j = 0; j < n; ++j) angular_weight *= ang.weights[0];
  double half_pow = 1.0;
  for (int j = 0; j < n; ++j) half_pow *= 0.5;
  const double normalization = measure_normalization(params);

  const QuadRule base = gauss_legendre(config.radial_points);
  std::vector<double> r(static_cast<size_t>(n));
  std::vector<double> r_pow(static_cast<size_t>(n) * static_cast<size_t>(m + 1));
  std::vector<int> aidx(static_cast<size_t>(n));
  std::vector<Complex> z(static_cast<size_t>(n));
  std::vector<Complex> basis(static_cast<size_t>(count));

  detail::for_each_radial_node(n, base, [&](std::span<const double> s, double ws) {
    double s_sum = 0.0;
    for (int j = 0; j < n; ++j) {
      const double sj = s[static_cast<size_t>(j)];
      s_sum += sj;
      const double rj = std::sqrt(sj);
      r[static_cast<size_t>(j)] = rj;
      double acc = 1.0;
      for (int d = 0; d <= m; ++d) {
        r_pow[static_cast<size_t>(j) * static_cast<size_t>(m + 1) + static_cast<size_t>(d)] = acc;
        acc *= rj;
      }
    }
    const double node_weight =
        ws * half_pow * angular_weight * density_from_s_sum(s_sum, params, normalization);

    std::fill(aidx.begin(), aidx.end(), 0);
    for (;;) {
      for (int j = 0; j < n; ++j) {
        const int a = aidx[static_cast<size_t>(j)];
        z[static_cast<size_t>(j)] = r[static_cast<size_t>(j)] * unit_phase[static_cast<size_t>(a)];
      }
      for (int i = 0; i < count; ++i) {
        const MultiIndex& p = indices[static_cast<size_t>(i)];
        Complex value(sqrt_c[static_cast<size_t>(i)], 0.0);
        for (int j = 0; j < n; ++j) {
          const int d = p[j];
          const int a = aidx[static_cast<size_t>(j)];
          value *= r_pow[static_cast<size_t>(j) * static_cast<size_t>(m + 1) + static_cast<size_t>(d)] *
                   phase_pow[static_cast<size_t>(a) * static_cast<size_t>(m + 1) + static_cast<size_t>(d)];
        }
        basis[static_cast<size_t>(i)] = value;
      }
      fn(std::span<const Complex>(z), node_weight, std::span<const Complex>(basis));
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

}  // namespace

double measure_normalization(const SpaceParams& params) {
  double value = 1.0;
  for (int i = params.m + 1; i <= params.n + params.m; ++i) value *= static_cast<double>(i);
  for (int j = 0; j < params.n; ++j) value /= M_PI;
  return value;
}

double measure_density(std::span<const std::complex<double>> z, const SpaceParams& params) {
  validate(params);
  if (static_cast<int>(z.size()) != params.n) {
    throw std::invalid_argument("point dimension does not match n");
  }
  double s_sum = 0.0;
  for (const Complex& zj : z) s_sum += std::norm(zj);
  return density_from_s_sum(s_sum, params, measure_normalization(params));
}

std::complex<double> eval_basis(const MultiIndex& p, const SpaceParams& params,
                                std::span<const std::complex<double>> z) {
  const double c = normalization_constant(p, params);  // validates |p| <= m
  if (z.size() != static_cast<size_t>(params.n)) {
    throw std::invalid_argument("point dimension does not match n");
  }
  Complex value(std::sqrt(c), 0.0);
  for (int j = 0; j < params.n; ++j) {
    value *= complex_ipow(z[static_cast<size_t>(j)], p[j]);
  }
  return value;
}

std::complex<double> kernel(std::span<const std::complex<double>> z,
                            std::span<const std::complex<double>> w,
                            const SpaceParams& params) {
  validate(params);
  if (z.size() != static_cast<size_t>(params.n) || w.size() != static_cast<size_t>(params.n)) {
    throw std::invalid_argument("point dimension does not match n");
  }
  Complex pairing(1.0, 0.0);
  for (size_t j = 0; j < z.size(); ++j) pairing += z[j] * std::conj(w[j]);
  return complex_ipow(pairing, params.m);
}

std::complex<double> integrate_measure(const SampledFunction& f, const SpaceParams& params,
                                       const QuadConfig& config) {
  validate(params);
  const double normalization = measure_normalization(params);
  std::vector<Complex> z(static_cast<size_t>(params.n));
  std::complex<long double> acc(0.0, 0.0);
  detail::for_each_polar_node(
      params.n, config,
      [&](std::span<const double> theta, std::span<const double> r, double w) {
        double s_sum = 0.0;
        for (int j = 0; j < params.n; ++j) {
          z[static_cast<size_t>(j)] = std::polar(r[static_cast<size_t>(j)], theta[static_cast<size_t>(j)]);
          s_sum += r[static_cast<size_t>(j)] * r[static_cast<size_t>(j)];
        }
        const Complex term = w * density_from_s_sum(s_sum, params, normalization) *
                             f(std::span<const Complex>(z));
        acc += std::complex<long double>(term.real(), term.imag());
      });
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::complex<double> inner_product(const SampledFunction& f, const SampledFunction& g,
                                   const SpaceParams& params, const QuadConfig& config) {
  return integrate_measure(
      [&](std::span<const Complex> z) { return f(z) * std::conj(g(z)); }, params, config);
}

CoefficientVector analyze(const SampledFunction& f, const SpaceParams& params,
                          const QuadConfig& config) {
  CoefficientVector out;
  out.params = params;
  out.values.assign(static_cast<size_t>(dimension(params)), Complex(0.0, 0.0));
  std::vector<std::complex<long double>> acc(out.values.size(), std::complex<long double>(0, 0));
  for_each_measure_node_with_basis(
      params, config,
      [&](std::span<const Complex> z, double w, std::span<const Complex> basis) {
        const Complex fw = w * f(z);
        for (size_t i = 0; i < basis.size(); ++i) {
          const Complex term = fw * std::conj(basis[i]);
          acc[i] += std::complex<long double>(term.real(), term.imag());
        }
      });
  for (size_t i = 0; i < acc.size(); ++i) {
    out.values[i] = Complex(static_cast<double>(acc[i].real()), static_cast<double>(acc[i].imag()));
  }
  return out;
}

SampledFunction synthesize(const CoefficientVector& coefficients) {
  const SpaceParams params = coefficients.params;
  validate(params);
  if (coefficients.values.size() != static_cast<size_t>(dimension(params))) {
    throw std::invalid_argument("coefficient vector length does not match dimension");
  }
  const auto indices = enumerate_indices(params);
  std::vector<double> sqrt_c(indices.size());
  for (size_t i = 0; i < indices.size(); ++i) {
    sqrt_c[i] = std::sqrt(normalization_constant(indices[i], params));
  }
  const auto values = coefficients.values;
  return [params, indices, sqrt_c, values](std::span<const Complex> z) {
    if (z.size() != static_cast<size_t>(params.n)) {
      throw std::invalid_argument("point dimension does not match n");
    }
    // power table per coordinate, degree <= m
    std::vector<Complex> z_pow(static_cast<size_t>(params.n) * static_cast<size_t>(params.m + 1));
    for (int j = 0; j < params.n; ++j) {
      Complex acc(1.0, 0.0);
      for (int d = 0; d <= params.m; ++d) {
        z_pow[static_cast<size_t>(j) * static_cast<size_t>(params.m + 1) + static_cast<size_t>(d)] = acc;
        acc *= z[static_cast<size_t>(j)];
      }
    }
    Complex total(0.0, 0.0);
    for (size_t i = 0; i < indices.size(); ++i) {
      Complex term(sqrt_c[i], 0.0);
      for (int j = 0; j < params.n; ++j) {
        term *= z_pow[static_cast<size_t>(j) * static_cast<size_t>(params.m + 1) +
                      static_cast<size_t>(indices[i][j])];
      }
      total += values[i] * term;
    }
    return total;
  };
}

CoefficientVector project(const SampledFunction& f, const SpaceParams& params,
                          const QuadConfig& config) {
  return analyze(f, params, config);
}

ComplexMatrix weighted_moment_matrix(const SampledFunction& weight, const SpaceParams& params,
                                     const QuadConfig& config, std::string provenance) {
  ComplexMatrix out = ComplexMatrix::zeros(params, std::move(provenance));
  const int count = out.size;
  std::vector<Complex> scaled(static_cast<size_t>(count));
  // extended-precision accumulators keep the summation floor well below the
  // quadrature tolerances even on multi-million-node grids
  std::vector<std::complex<long double>> acc(
      static_cast<size_t>(count) * static_cast<size_t>(count), std::complex<long double>(0, 0));
  for_each_measure_node_with_basis(
      params, config,
      [&](std::span<const Complex> z, double w, std::span<const Complex> basis) {
        const Complex fw = w * weight(z);
        for (int q = 0; q < count; ++q) {
          scaled[static_cast<size_t>(q)] = fw * basis[static_cast<size_t>(q)];
        }
        for (int p = 0; p < count; ++p) {
          const Complex bp = std::conj(basis[static_cast<size_t>(p)]);
          std::complex<long double>* row =
              acc.data() + static_cast<size_t>(p) * static_cast<size_t>(count);
          for (int q = 0; q < count; ++q) {
            const Complex term = bp * scaled[static_cast<size_t>(q)];
            row[q] += std::complex<long double>(term.real(), term.imag());
          }
        }
      });
  for (size_t i = 0; i < acc.size(); ++i) {
    out.data[i] = Complex(static_cast<double>(acc[i].real()), static_cast<double>(acc[i].imag()));
  }
  return out;
}

ComplexMatrix gram_matrix(const SpaceParams& params, const QuadConfig& config) {
  return weighted_moment_matrix(
      [](std::span<const Complex>) { return Complex(1.0, 0.0); }, params, config,
      "gram n=" + std::to_string(params.n) + " m=" + std::to_string(params.m));
}

}  // namespace ptoep
