#include "ptoep/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ptoep {

namespace {

using Complex = std::complex<double>;

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.size != b.size || !(a.params == b.params)) {
    throw std::invalid_argument("matrix shape/parameter mismatch");
  }
}

double offdiag_norm(const ComplexMatrix& m) {
  double acc = 0.0;
  for (int i = 0; i < m.size; ++i) {
    for (int j = 0; j < m.size; ++j) {
      if (i != j) acc += std::norm(m.at(i, j));
    }
  }
  return std::sqrt(acc);
}

}  // namespace

ComplexMatrix ComplexMatrix::zeros(const SpaceParams& params, std::string provenance) {
  ComplexMatrix m;
  m.params = params;
  m.size = static_cast<int>(dimension(params));
  m.data.assign(static_cast<size_t>(m.size) * static_cast<size_t>(m.size), Complex(0.0, 0.0));
  m.provenance = std::move(provenance);
  return m;
}

ComplexMatrix ComplexMatrix::identity(const SpaceParams& params, std::string provenance) {
  ComplexMatrix m = zeros(params, std::move(provenance));
  for (int i = 0; i < m.size; ++i) m.at(i, i) = Complex(1.0, 0.0);
  return m;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  ComplexMatrix out = ComplexMatrix::zeros(a.params, "(" + a.provenance + ")*(" + b.provenance + ")");
  for (int i = 0; i < a.size; ++i) {
    for (int k = 0; k < a.size; ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < a.size; ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out = ComplexMatrix::zeros(m.params, "adjoint(" + m.provenance + ")");
  for (int i = 0; i < m.size; ++i) {
    for (int j = 0; j < m.size; ++j) {
      out.at(i, j) = std::conj(m.at(j, i));
    }
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  ComplexMatrix out = multiply(a, b);
  const ComplexMatrix ba = multiply(b, a);
  for (size_t i = 0; i < out.data.size(); ++i) out.data[i] -= ba.data[i];
  out.provenance = "[" + a.provenance + "," + b.provenance + "]";
  return out;
}

double frobenius_norm(const ComplexMatrix& m) {
  double acc = 0.0;
  for (const Complex& v : m.data) acc += std::norm(v);
  return std::sqrt(acc);
}

double diagonality_defect(const ComplexMatrix& m) {
  const double total = frobenius_norm(m);
  if (total == 0.0) return 0.0;
  return offdiag_norm(m) / total;
}

double hermiticity_defect(const ComplexMatrix& m) {
  double defect = 0.0;
  for (int i = 0; i < m.size; ++i) {
    for (int j = 0; j <= i; ++j) {
      defect = std::max(defect, std::abs(m.at(i, j) - std::conj(m.at(j, i))));
    }
  }
  return defect;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  if (hermiticity_defect(m) > 1e-10) {
    throw std::invalid_argument("hermitian_eigen requires a Hermitian matrix (defect > 1e-10)");
  }
  const int n = m.size;

  // symmetrized working copy
  ComplexMatrix a = ComplexMatrix::zeros(m.params, "eigen_work");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(m.params, "eigen_vectors");

  const double scale = frobenius_norm(a);
  const double stop = 1e-13 * (scale > 0.0 ? scale : 1.0);

  int sweeps = 0;
  for (; sweeps < 100 && offdiag_norm(a) > stop; ++sweeps) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a.at(p, q);
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        const Complex w = std::conj(apq) / g;  // phase making the pivot real
        const double alpha = a.at(p, p).real();
        const double beta = a.at(q, q).real();
        const double tau = (beta - alpha) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // unitary U: U_pp = c, U_pq = s, U_qp = -s*w, U_qq = c*w
        const Complex sw = s * w;
        const Complex cw = c * w;
        for (int j = 0; j < n; ++j) {  // rows: A <- U* A
          const Complex rp = a.at(p, j);
          const Complex rq = a.at(q, j);
          a.at(p, j) = c * rp - std::conj(sw) * rq;
          a.at(q, j) = s * rp + std::conj(cw) * rq;
        }
        for (int i = 0; i < n; ++i) {  // columns: A <- A U, V <- V U
          const Complex cp = a.at(i, p);
          const Complex cq = a.at(i, q);
          a.at(i, p) = c * cp - sw * cq;
          a.at(i, q) = s * cp + cw * cq;
          const Complex vp = v.at(i, p);
          const Complex vq = v.at(i, q);
          v.at(i, p) = c * vp - sw * vq;
          v.at(i, q) = s * vp + cw * vq;
        }
        a.at(p, p) = Complex(a.at(p, p).real(), 0.0);
        a.at(q, q) = Complex(a.at(q, q).real(), 0.0);
        a.at(p, q) = Complex(0.0, 0.0);
        a.at(q, p) = Complex(0.0, 0.0);
      }
    }
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return a.at(i, i).real() < a.at(j, j).real();
  });

  HermitianEigen result;
  result.eigenvalues.resize(static_cast<size_t>(n));
  result.vectors = ComplexMatrix::zeros(m.params, "eigenvectors(" + m.provenance + ")");
  for (int j = 0; j < n; ++j) {
    result.eigenvalues[static_cast<size_t>(j)] = a.at(order[static_cast<size_t>(j)],
                                                      order[static_cast<size_t>(j)]).real();
    for (int i = 0; i < n; ++i) {
      result.vectors.at(i, j) = v.at(i, order[static_cast<size_t>(j)]);
    }
  }
  result.sweeps = sweeps;
  return result;
}

double operator_norm(const ComplexMatrix& m) {
  const ComplexMatrix gram = multiply(adjoint(m), m);
  const HermitianEigen eig = hermitian_eigen(gram);
  const double top = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back();
  return std::sqrt(std::max(top, 0.0));
}

}  // namespace ptoep
