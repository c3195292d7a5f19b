#include "behmm/model.hpp"

#include <cmath>
#include <sstream>

#include "behmm/errors.hpp"

namespace behmm {

StochasticMatrix StochasticMatrix::make(RealMatrix entries, const std::string& name,
                                        bool renormalize_rows) {
  if (entries.rows() != entries.cols())
    throw ValidationError(name + " must be square, got " + std::to_string(entries.rows()) + "x" +
                          std::to_string(entries.cols()));
  const int d = static_cast<int>(entries.rows());
  if (d < 1 || d > max_dim)
    throw ValidationError(name + " dimension " + std::to_string(d) + " outside [1, " +
                          std::to_string(max_dim) + "]");
  if (!entries.allFinite()) throw ValidationError(name + " has non-finite entries");

  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      double v = entries(i, j);
      if (v < -stoch_tol) {
        std::ostringstream os;
        os << name << " entry (" << i << "," << j << ") = " << v << " is negative";
        throw ValidationError(os.str());
      }
      if (v < 0.0) entries(i, j) = 0.0;
    }
  }
  for (int i = 0; i < d; ++i) {
    const double s = entries.row(i).sum();
    if (std::abs(s - 1.0) > stoch_tol) {
      if (renormalize_rows && s > stoch_tol) {
        entries.row(i) /= s;
      } else {
        std::ostringstream os;
        os << name << " row " << i << " sums to " << s << ", expected 1";
        throw ValidationError(os.str());
      }
    }
  }
  RealMatrix sqrt_p = entries.array().sqrt().matrix();
  return StochasticMatrix(std::move(entries), std::move(sqrt_p));
}

void require_density(const ComplexMatrix& w0, const char* name) {
  require_square_finite(w0, name);
  if (!is_hermitian(w0)) throw NotDensity(std::string(name) + " is not Hermitian");
  const double min_eig = min_hermitian_eigenvalue(w0);
  if (min_eig < psd_floor) {
    std::ostringstream os;
    os << name << " has eigenvalue " << min_eig << " below the positivity floor " << psd_floor;
    throw NotDensity(os.str());
  }
  const double tr = w0.trace().real();
  if (std::abs(tr - 1.0) > stoch_tol || std::abs(w0.trace().imag()) > stoch_tol) {
    std::ostringstream os;
    os << name << " has trace " << tr << ", expected 1";
    throw NotDensity(os.str());
  }
}

namespace {

void check_model_shapes(const RealVector& pi, const StochasticMatrix& transition,
                        const StochasticMatrix& emission) {
  const int d = static_cast<int>(pi.size());
  if (d < 1 || d > max_dim)
    throw ValidationError("initial distribution dimension " + std::to_string(d) + " outside [1, " +
                          std::to_string(max_dim) + "]");
  if (!pi.allFinite()) throw ValidationError("initial distribution has non-finite entries");
  for (int i = 0; i < d; ++i) {
    if (pi(i) < -stoch_tol) {
      std::ostringstream os;
      os << "initial distribution entry " << i << " = " << pi(i) << " is negative";
      throw ValidationError(os.str());
    }
  }
  const double s = pi.sum();
  if (std::abs(s - 1.0) > stoch_tol) {
    std::ostringstream os;
    os << "initial distribution sums to " << s << ", expected 1";
    throw ValidationError(os.str());
  }
  if (transition.dim() != d)
    throw DimensionMismatch("transition matrix is " + std::to_string(transition.dim()) + "x" +
                            std::to_string(transition.dim()) + " but the initial distribution has " +
                            std::to_string(d) + " states");
  if (emission.dim() != d)
    throw DimensionMismatch("emission matrix is " + std::to_string(emission.dim()) + "x" +
                            std::to_string(emission.dim()) + " but the initial distribution has " +
                            std::to_string(d) + " states");
}

RealVector clamp_pi(RealVector pi) {
  for (int i = 0; i < pi.size(); ++i)
    if (pi(i) < 0.0) pi(i) = 0.0;
  return pi;
}

}  // namespace

HiddenModel HiddenModel::make(RealVector pi, StochasticMatrix transition, StochasticMatrix emission) {
  check_model_shapes(pi, transition, emission);
  pi = clamp_pi(std::move(pi));
  const int d = static_cast<int>(pi.size());
  ComplexMatrix w0 = ComplexMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) w0(j, j) = Complex(pi(j), 0.0);
  return HiddenModel(std::move(pi), std::move(transition), std::move(emission), std::move(w0), false);
}

HiddenModel HiddenModel::make(RealVector pi, StochasticMatrix transition, StochasticMatrix emission,
                              ComplexMatrix initial_state) {
  check_model_shapes(pi, transition, emission);
  pi = clamp_pi(std::move(pi));
  require_density(initial_state, "initial state");
  if (initial_state.rows() != pi.size())
    throw DimensionMismatch("initial state is " + std::to_string(initial_state.rows()) + "x" +
                            std::to_string(initial_state.cols()) + " but the model has " +
                            std::to_string(pi.size()) + " states");
  return HiddenModel(std::move(pi), std::move(transition), std::move(emission),
                     std::move(initial_state), true);
}

}  // namespace behmm
