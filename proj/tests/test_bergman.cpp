#include "doctest.h"
#include "oracle.hpp"
#include "ptoep/bergman.hpp"
#include "ptoep/rng.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace ptoep;
using Complex = std::complex<double>;

namespace {

SampledFunction monomial(const MultiIndex& p) {
  return [p](std::span<const Complex> z) {
    Complex v(1.0, 0.0);
    for (int j = 0; j < p.size(); ++j) {
      for (int d = 0; d < p[j]; ++d) v *= z[static_cast<size_t>(j)];
    }
    return v;
  };
}

}  // namespace

TEST_CASE("measure density values") {
  const std::vector<Complex> origin1{Complex(0, 0)};
  CHECK(measure_density(origin1, {1, 0}) == doctest::Approx(1.0 / M_PI).epsilon(1e-15));

  const std::vector<Complex> origin2{Complex(0, 0), Complex(0, 0)};
  CHECK(measure_density(origin2, {2, 1}) ==
        doctest::Approx(6.0 / (M_PI * M_PI)).epsilon(1e-15));

  // decays monotonically in |z|
  double previous = measure_density(origin1, {1, 2});
  for (double radius : {0.5, 1.0, 2.0, 8.0, 64.0}) {
    const std::vector<Complex> z{Complex(radius, 0)};
    const double density = measure_density(z, {1, 2});
    CHECK(density < previous);
    previous = density;
  }
  CHECK(previous < 1e-12);
}

TEST_CASE("monomial orthogonality and norms") {
  const SpaceParams params{2, 2};
  const QuadConfig config = QuadConfig::defaults_for_weight(params.m);
  const auto indices = enumerate_indices(params);
  for (const auto& p : indices) {
    for (const auto& q : indices) {
      const Complex value = inner_product(monomial(p), monomial(q), params, config);
      if (p == q) {
        const double expected = oracle::monomial_norm_sq(p.entries(), params.m).value();
        CHECK(std::abs(value - expected) < 1e-10);
      } else {
        CHECK(std::abs(value) < 1e-12);
      }
    }
  }

  const SampledFunction one = [](std::span<const Complex>) { return Complex(1, 0); };
  CHECK(std::abs(inner_product(one, one, params, config) - 1.0) < 1e-12);
}

TEST_CASE("basis evaluation") {
  const std::vector<Complex> any{Complex(0.3, 0.7), Complex(-1, 2)};
  CHECK(eval_basis(MultiIndex({0, 0}), {2, 2}, any) == Complex(1, 0));

  const std::vector<Complex> ones{Complex(1, 0), Complex(1, 0)};
  CHECK(eval_basis(MultiIndex({1, 1}), {2, 2}, ones).real() ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  const std::vector<Complex> eye{Complex(0, 1)};
  CHECK(eval_basis(MultiIndex({2}), {1, 2}, eye).real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(std::abs(eval_basis(MultiIndex({2}), {1, 2}, eye).imag()) < 1e-15);

  CHECK_THROWS_AS(eval_basis(MultiIndex({3}), {1, 2}, eye), std::invalid_argument);
}

TEST_CASE("kernel") {
  const std::vector<Complex> z{Complex(0.4, -1.1)};
  const std::vector<Complex> origin{Complex(0, 0)};
  CHECK(kernel(z, origin, {1, 5}) == Complex(1, 0));

  const std::vector<Complex> one{Complex(1, 0)};
  CHECK(kernel(one, one, {1, 3}).real() == doctest::Approx(8.0).epsilon(1e-15));

  // Hermitian symmetry on a few random pairs
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = rng.nonzero_point(2, 2.0);
    const auto b = rng.nonzero_point(2, 2.0);
    const Complex kab = kernel(a, b, {2, 3});
    const Complex kba = kernel(b, a, {2, 3});
    CHECK(std::abs(kab - std::conj(kba)) < 1e-12 * std::abs(kab));
  }
}

TEST_CASE("analyze recovers coefficients") {
  const SpaceParams params{2, 1};
  const QuadConfig config = QuadConfig::defaults_for_weight(params.m);

  // a normalized basis vector maps to a unit coordinate vector
  const MultiIndex target({1, 0});
  const auto coefficients = analyze(
      [&](std::span<const Complex> z) { return eval_basis(target, params, z); }, params, config);
  const auto indices = enumerate_indices(params);
  for (size_t i = 0; i < indices.size(); ++i) {
    const double expected = indices[i] == target ? 1.0 : 0.0;
    CHECK(std::abs(coefficients.values[i] - expected) < 1e-10);
  }
}

TEST_CASE("analyze annihilates anti-holomorphic and picks radial averages") {
  const SpaceParams params{1, 2};
  const QuadConfig config = QuadConfig::defaults_for_weight(params.m);

  const auto conj_coeff = analyze(
      [](std::span<const Complex> z) { return std::conj(z[0]); }, params, config);
  for (const Complex& c : conj_coeff.values) CHECK(std::abs(c) < 1e-12);

  // |z|^2 has mean 1/m against nu_m and no higher coefficients
  const auto abs_sq = analyze(
      [](std::span<const Complex> z) { return Complex(std::norm(z[0]), 0.0); }, params, config);
  CHECK(std::abs(abs_sq.values[0] - 0.5) < 1e-10);
  CHECK(std::abs(abs_sq.values[1]) < 1e-12);
  CHECK(std::abs(abs_sq.values[2]) < 1e-12);
}

TEST_CASE("synthesize") {
  const SpaceParams params{2, 2};
  CoefficientVector unit;
  unit.params = params;
  unit.values.assign(static_cast<size_t>(dimension(params)), Complex(0, 0));
  unit.values[3] = Complex(1, 0);  // graded-lex index 3 = (2,0)

  const auto f = synthesize(unit);
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto z = rng.nonzero_point(2, 2.0);
    const Complex direct = eval_basis(enumerate_indices(params)[3], params, z);
    CHECK(std::abs(f(z) - direct) < 1e-13 * (1.0 + std::abs(direct)));
  }

  CoefficientVector zero;
  zero.params = params;
  zero.values.assign(static_cast<size_t>(dimension(params)), Complex(0, 0));
  const auto g = synthesize(zero);
  CHECK(g(rng.nonzero_point(2, 1.0)) == Complex(0, 0));
}

TEST_CASE("analyze-synthesize round trip") {
  const SpaceParams params{2, 2};
  const QuadConfig config = QuadConfig::defaults_for_weight(params.m);
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    CoefficientVector c;
    c.params = params;
    c.values.resize(static_cast<size_t>(dimension(params)));
    for (auto& v : c.values) v = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const auto back = analyze(synthesize(c), params, config);
    for (size_t i = 0; i < c.values.size(); ++i) {
      CHECK(std::abs(back.values[i] - c.values[i]) < 1e-8);
    }
  }
}

TEST_CASE("projection fixes holomorphic polynomials") {
  const SpaceParams params{1, 2};
  const QuadConfig config = QuadConfig::defaults_for_weight(params.m);

  const auto coeff = project([](std::span<const Complex> z) { return z[0]; }, params, config);
  // z = e_(1) exactly (c_(1) = 2 at m=2, so z = sqrt(1/2) e_1)
  CHECK(std::abs(coeff.values[1] - std::sqrt(0.5)) < 1e-10);
  CHECK(std::abs(coeff.values[0]) < 1e-12);
  CHECK(std::abs(coeff.values[2]) < 1e-12);

  // project(conj z) = 0, project(|z|^2) = 1/m
  const auto anti = project([](std::span<const Complex> z) { return std::conj(z[0]); }, params, config);
  for (const Complex& c : anti.values) CHECK(std::abs(c) < 1e-10);
}

TEST_CASE("gram matrix is the identity at defaults") {
  for (int n : {1, 2}) {
    for (int m = 0; m <= 3; ++m) {
      const SpaceParams params{n, m};
      const auto gram = gram_matrix(params, QuadConfig::defaults_for_weight(m));
      double deviation = 0.0;
      for (int i = 0; i < gram.size; ++i) {
        for (int j = 0; j < gram.size; ++j) {
          const Complex expected = i == j ? Complex(1, 0) : Complex(0, 0);
          deviation = std::max(deviation, std::abs(gram.at(i, j) - expected));
        }
      }
      CHECK(deviation <= 1e-8);
    }
  }
}

TEST_CASE("gram entries agree with the pairwise inner product") {
  const SpaceParams params{2, 2};
  const QuadConfig config = QuadConfig::defaults_for_weight(params.m);
  const auto gram = gram_matrix(params, config);
  const auto indices = enumerate_indices(params);
  for (int row : {0, 2, 5}) {
    for (int col : {0, 1, 5}) {
      const Complex direct = inner_product(
          [&](std::span<const Complex> z) { return eval_basis(indices[static_cast<size_t>(col)], params, z); },
          [&](std::span<const Complex> z) { return eval_basis(indices[static_cast<size_t>(row)], params, z); },
          params, config);
      CHECK(std::abs(gram.at(row, col) - direct) < 1e-13);
    }
  }
}

TEST_CASE("kernel reproduces the projection") {
  // B_m f(w) computed directly as integral f(u) K(w,u) dnu(u) must agree
  // with synthesize(analyze(f)) at w for a polynomial f
  const SpaceParams params{1, 3};
  const QuadConfig config = QuadConfig::defaults_for_weight(params.m);
  const SampledFunction f = [](std::span<const Complex> z) {
    return z[0] * z[0] - 0.5 * z[0] + Complex(0.0, 2.0);
  };
  const auto reconstructed = synthesize(analyze(f, params, config));

  const std::vector<Complex> w{Complex(0.4, -0.3)};
  const Complex via_kernel = integrate_measure(
      [&](std::span<const Complex> u) {
        return f(u) * kernel(w, u, params);
      },
      params, config);
  CHECK(std::abs(via_kernel - reconstructed(w)) < 1e-8);
  CHECK(std::abs(via_kernel - f(w)) < 1e-8);  // B_m fixes degree <= m
}

TEST_CASE("weight zero space reduces to scalar integration") {
  const SpaceParams params{2, 0};
  const QuadConfig config = QuadConfig::defaults_for_weight(0);
  const auto gram = gram_matrix(params, config);
  REQUIRE(gram.size == 1);
  CHECK(std::abs(gram.at(0, 0) - 1.0) < 1e-12);

  const auto coeff = analyze(
      [](std::span<const Complex> z) { return z[0] + Complex(2.0, 0.0); }, params, config);
  REQUIRE(coeff.values.size() == 1);
  CHECK(std::abs(coeff.values[0] - 2.0) < 1e-11);
}
