#include "behmm/matrix_core.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

namespace behmm {

double max_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  return max_norm(a - b);
}

bool all_finite(const ComplexMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const Complex& v = a(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
  }
  return true;
}

void require_square_finite(const ComplexMatrix& a, const char* name) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    throw DimensionMismatch(std::string(name) + ": expected a nonempty square matrix, got " +
                            std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (!all_finite(a)) {
    throw ValidationError(std::string(name) + ": matrix contains NaN or Inf entries");
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* where) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(where) + ": dimension mismatch, " +
                            std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_norm(a - a.adjoint()) <= tol;
}

ComplexMatrix schur_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "schur_product");
  return a.cwiseProduct(b);
}

ComplexMatrix matrix_unit(MatrixUnitIndex idx, int d) { return matrix_unit(idx.row, idx.col, d); }

ComplexMatrix matrix_unit(int row, int col, int d) {
  if (d < 1) throw IndexOutOfRange("matrix_unit: dimension must be positive, got " + std::to_string(d));
  if (row < 0 || row >= d || col < 0 || col >= d) {
    throw IndexOutOfRange("matrix_unit: index (" + std::to_string(row) + "," + std::to_string(col) +
                          ") out of range for dimension " + std::to_string(d));
  }
  ComplexMatrix e = ComplexMatrix::Zero(d, d);
  e(row, col) = 1.0;
  return e;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double min_hermitian_eigenvalue(const ComplexMatrix& a) {
  ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool is_psd(const ComplexMatrix& a, double floor) {
  require_square_finite(a, "is_psd");
  if (!is_hermitian(a)) {
    throw NotHermitian("is_psd: matrix is not Hermitian within " + std::to_string(eq_tol));
  }
  return min_hermitian_eigenvalue(a) >= floor;
}

Projection Projection::make(ComplexMatrix m) {
  require_square_finite(m, "Projection");
  if (!is_hermitian(m)) {
    throw NotHermitian("Projection: matrix is not Hermitian within " + std::to_string(eq_tol));
  }
  const double idem = max_norm(m * m - m);
  if (idem > eq_tol) {
    throw ValidationError("Projection: matrix is not idempotent, |e*e - e| = " + std::to_string(idem));
  }
  return Projection(std::move(m));
}

ComplexMatrix Projection::complement() const {
  return ComplexMatrix::Identity(m_.rows(), m_.cols()) - m_;
}

}  // namespace behmm
