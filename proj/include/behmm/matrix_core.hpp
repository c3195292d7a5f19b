#pragma once

#include <Eigen/Dense>
#include <complex>

#include "behmm/errors.hpp"

namespace behmm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Max-norm tolerance for matrix equality checks.
inline constexpr double eq_tol = 1e-10;
// Eigenvalue floor for positive-semidefiniteness checks.
inline constexpr double psd_floor = -1e-9;
// Tolerance on row sums and distribution sums of stochastic data.
inline constexpr double stoch_tol = 1e-9;
// Soft cap on matrix dimension; everything here is dense desk-scale algebra.
inline constexpr int max_dim = 64;

struct MatrixUnitIndex {
  int row = 0;
  int col = 0;
};

// Largest entry magnitude.
double max_norm(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool all_finite(const ComplexMatrix& a);
void require_square_finite(const ComplexMatrix& a, const char* name);
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* where);

bool is_hermitian(const ComplexMatrix& a, double tol = eq_tol);

// Entrywise (Schur/Hadamard) product.
ComplexMatrix schur_product(const ComplexMatrix& a, const ComplexMatrix& b);

// e_{hk}: single 1 at (row h, col k). Units multiply as e_{hk} e_{lm} = delta_{kl} e_{hm}.
ComplexMatrix matrix_unit(MatrixUnitIndex idx, int d);
ComplexMatrix matrix_unit(int row, int col, int d);

// Kronecker product, (a (x) b)[(i1,i2),(j1,j2)] = a(i1,j1) b(i2,j2) with row i1*b.rows()+i2.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Minimum eigenvalue of the Hermitian symmetrization (a + a^dagger)/2.
double min_hermitian_eigenvalue(const ComplexMatrix& a);

// True iff a is Hermitian within eq_tol and its spectrum stays above `floor`.
// Throws NotHermitian when the symmetry check fails.
bool is_psd(const ComplexMatrix& a, double floor = psd_floor);

// Hermitian idempotent within eq_tol, validated at construction.
class Projection {
 public:
  static Projection make(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return m_; }
  // e^perp = id - e.
  ComplexMatrix complement() const;
  int dim() const { return static_cast<int>(m_.rows()); }

 private:
  explicit Projection(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

}  // namespace behmm
