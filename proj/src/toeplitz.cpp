#include "ptoep/toeplitz.hpp"

#include <cmath>

namespace ptoep {

namespace {

using Complex = std::complex<double>;

constexpr std::uint64_t kRadialCheckSeed = 0x243F6A8885A308D3ull;
constexpr int kRadialCheckTrials = 200;
constexpr double kRadialCheckTol = 1e-8;

void require_radial(const SymbolExpr& a, bool assert_radial) {
  if (a.radiality() == Radiality::kSyntacticallyRadial) return;
  if (!assert_radial) {
    throw NotRadialError(
        "symbol '" + a.source() +
        "' references z variables (syntactic radiality check failed); pass "
        "assert_radial to run the numeric torus-invariance check instead");
  }
  const InvarianceReport report =
      check_torus_invariance(a, kRadialCheckTrials, kRadialCheckSeed, kRadialCheckTol);
  if (!report.invariant) {
    throw NotRadialError("symbol '" + a.source() +
                         "' failed the numeric torus-invariance check (max deviation " +
                         std::to_string(report.max_deviation) + ")");
  }
}

}  // namespace

ComplexMatrix toeplitz_matrix(const SymbolExpr& a, const SpaceParams& params,
                              const QuadConfig& config) {
  if (a.dim() != params.n) {
    throw std::invalid_argument("symbol dimension does not match n");
  }
  return weighted_moment_matrix(
      as_function(a), params, config,
      "toeplitz '" + a.source() + "' n=" + std::to_string(params.n) +
          " m=" + std::to_string(params.m) + " kr=" + std::to_string(config.radial_points) +
          " ka=" + std::to_string(config.angular_points));
}

GammaSequence gamma_sequence(const SymbolExpr& a, const SpaceParams& params,
                             const QuadConfig& config, bool assert_radial) {
  validate(params);
  if (a.dim() != params.n) {
    throw std::invalid_argument("symbol dimension does not match n");
  }
  require_radial(a, assert_radial);

  const int n = params.n;
  const int m = params.m;
  const auto indices = enumerate_indices(params);
  const int count = static_cast<int>(indices.size());

  GammaSequence out;
  out.params = params;
  out.values.assign(static_cast<size_t>(count), Complex(0.0, 0.0));
  std::vector<std::complex<long double>> acc(static_cast<size_t>(count),
                                             std::complex<long double>(0, 0));

  std::vector<double> c(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    c[static_cast<size_t>(i)] = normalization_constant(indices[static_cast<size_t>(i)], params);
  }
  double measure_factor = 1.0;  // (n+m)!/m!
  for (int i = m + 1; i <= n + m; ++i) measure_factor *= static_cast<double>(i);

  const QuadRule base = gauss_legendre(config.radial_points);
  std::vector<Complex> z(static_cast<size_t>(n));
  std::vector<double> s_pow(static_cast<size_t>(n) * static_cast<size_t>(m + 1));

  detail::for_each_radial_node(n, base, [&](std::span<const double> s, double w) {
    double s_sum = 0.0;
    for (int j = 0; j < n; ++j) {
      const double sj = s[static_cast<size_t>(j)];
      s_sum += sj;
      z[static_cast<size_t>(j)] = Complex(std::sqrt(sj), 0.0);
      double acc = 1.0;
      for (int d = 0; d <= m; ++d) {
        s_pow[static_cast<size_t>(j) * static_cast<size_t>(m + 1) + static_cast<size_t>(d)] = acc;
        acc *= sj;
      }
    }
    double kernel_pow = 1.0;
    const double inv = 1.0 / (1.0 + s_sum);
    for (int e = 0; e < n + m + 1; ++e) kernel_pow *= inv;
    const Complex av = a.eval(z);
    const Complex node = w * kernel_pow * av;
    for (int i = 0; i < count; ++i) {
      const MultiIndex& p = indices[static_cast<size_t>(i)];
      double mono = 1.0;
      for (int j = 0; j < n; ++j) {
        mono *= s_pow[static_cast<size_t>(j) * static_cast<size_t>(m + 1) + static_cast<size_t>(p[j])];
      }
      const Complex term = c[static_cast<size_t>(i)] * measure_factor * mono * node;
      acc[static_cast<size_t>(i)] += std::complex<long double>(term.real(), term.imag());
    }
  });
  for (int i = 0; i < count; ++i) {
    out.values[static_cast<size_t>(i)] =
        Complex(static_cast<double>(acc[static_cast<size_t>(i)].real()),
                static_cast<double>(acc[static_cast<size_t>(i)].imag()));
  }
  return out;
}

}  // namespace ptoep
