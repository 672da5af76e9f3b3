#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ptoep/matrix.hpp"
#include "ptoep/multiindex.hpp"
#include "ptoep/quadrature.hpp"

namespace ptoep {

// Elements of L2(C^n, nu_m) are represented by point evaluation only.
using SampledFunction =
    std::function<std::complex<double>(std::span<const std::complex<double>>)>;

// Density of nu_m with respect to Lebesgue measure:
// (n+m)!/(pi^n m!) * (1+|z|^2)^-(n+m+1). nu_m is a probability measure.
double measure_density(std::span<const std::complex<double>> z, const SpaceParams& params);

// (n+m)!/(pi^n m!).
double measure_normalization(const SpaceParams& params);

// Normalized monomial sqrt(c_p) z^p with c_p = m!/(p!(m-|p|)!).
std::complex<double> eval_basis(const MultiIndex& p, const SpaceParams& params,
                                std::span<const std::complex<double>> z);

// Reproducing kernel (1 + z_1 conj(w_1) + ... + z_n conj(w_n))^m.
std::complex<double> kernel(std::span<const std::complex<double>> z,
                            std::span<const std::complex<double>> w,
                            const SpaceParams& params);

// integral of f against nu_m.
std::complex<double> integrate_measure(const SampledFunction& f, const SpaceParams& params,
                                       const QuadConfig& config);

// <f, g>_m = integral of f conj(g) d nu_m.
std::complex<double> inner_product(const SampledFunction& f, const SampledFunction& g,
                                   const SpaceParams& params, const QuadConfig& config);

struct CoefficientVector {
  SpaceParams params{};
  std::vector<std::complex<double>> values;  // graded-lex order
};

// Coefficient analysis c_p = <f, e_p>; on the polynomial subspace this is
// the unitary onto l2(J_n(m)).
CoefficientVector analyze(const SampledFunction& f, const SpaceParams& params,
                          const QuadConfig& config);

// Synthesis {c_p} -> sum_p c_p e_p; the adjoint of analyze.
SampledFunction synthesize(const CoefficientVector& coefficients);

// Bergman projection in coefficients (equals analyze; synthesize(project(f))
// is the L2-closest polynomial of degree <= m).
CoefficientVector project(const SampledFunction& f, const SpaceParams& params,
                          const QuadConfig& config);

// Matrix of entries (p,q) -> <w e_q, e_p>_m, accumulated in one pass over
// the quadrature grid in the fixed odometer order.
ComplexMatrix weighted_moment_matrix(const SampledFunction& weight, const SpaceParams& params,
                                     const QuadConfig& config, std::string provenance);

// Gram matrix <e_q, e_p>; the identity up to quadrature rounding.
ComplexMatrix gram_matrix(const SpaceParams& params, const QuadConfig& config);

}  // namespace ptoep
