#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "ptoep/bergman.hpp"
#include "ptoep/matrix.hpp"
#include "ptoep/multiindex.hpp"
#include "ptoep/quadrature.hpp"
#include "ptoep/symbol.hpp"

namespace ptoep {

struct NotRadialError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Matrix of the Toeplitz operator T_a on the weight-m space in the
// normalized monomial basis: entries (p,q) = <a e_q, e_p>_m.
ComplexMatrix toeplitz_matrix(const SymbolExpr& a, const SpaceParams& params,
                              const QuadConfig& config);

// Multiplication-operator spectrum of a separately radial Toeplitz operator:
// gamma(p) is the eigenvalue of T_a on e_p.
struct GammaSequence {
  SpaceParams params{};
  std::vector<std::complex<double>> values;  // graded-lex order
};

// gamma(p) = c_p (n+m)!/m! * integral a(sqrt(s)) s^p (1+sum s)^-(n+m+1) ds
// over R_+^n, with c_p = m!/(p!(m-|p|)!). This is the radial-integral form
// of the diagonal values in the s = r^2 variables (the change of variables
// absorbs the 2^n and the odd powers r^{2p+1} of the r-variable form).
//
// The symbol must be syntactically radial; a general-looking symbol is
// accepted with assert_radial = true after a numeric torus-invariance check
// at tolerance 1e-8 (200 trials, fixed internal seed). Throws NotRadialError.
GammaSequence gamma_sequence(const SymbolExpr& a, const SpaceParams& params,
                             const QuadConfig& config, bool assert_radial = false);

}  // namespace ptoep
