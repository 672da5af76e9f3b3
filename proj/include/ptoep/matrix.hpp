#pragma once

#include <complex>
#include <string>
#include <vector>

#include "ptoep/multiindex.hpp"

namespace ptoep {

// Dense square complex matrix indexed by J_n(m) in graded-lex order.
// `provenance` records how the entries were produced (symbol text plus
// quadrature configuration, or the composing operation).
struct ComplexMatrix {
  SpaceParams params{};
  int size = 0;
  std::vector<std::complex<double>> data;  // row-major
  std::string provenance;

  static ComplexMatrix zeros(const SpaceParams& params, std::string provenance);
  static ComplexMatrix identity(const SpaceParams& params, std::string provenance);

  std::complex<double>& at(int row, int col) {
    return data[static_cast<size_t>(row) * static_cast<size_t>(size) + static_cast<size_t>(col)];
  }
  const std::complex<double>& at(int row, int col) const {
    return data[static_cast<size_t>(row) * static_cast<size_t>(size) + static_cast<size_t>(col)];
  }
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& m);

// AB - BA; rejects shape/parameter mismatch.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& m);

// Frobenius norm of the off-diagonal part divided by the Frobenius norm of
// the whole matrix; 0 for the zero matrix.
double diagonality_defect(const ComplexMatrix& m);

// max_{ij} |M_ij - conj(M_ji)|.
double hermiticity_defect(const ComplexMatrix& m);

struct HermitianEigen {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix vectors;            // unitary, columns matching eigenvalues
  int sweeps = 0;
};

// Cyclic Jacobi rotations for Hermitian matrices. Input must be Hermitian
// within 1e-10 (checked); off-diagonal mass is annihilated down to 1e-13
// relative to the Frobenius norm.
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

// Largest singular value, via hermitian_eigen of M* M.
double operator_norm(const ComplexMatrix& m);

}  // namespace ptoep
