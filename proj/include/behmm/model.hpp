#pragma once

#include <string>

#include "behmm/matrix_core.hpp"

namespace behmm {

// Row-stochastic nonnegative real matrix. Entries in [-stoch_tol, 0) are clamped to
// zero at construction; anything more negative, or a row sum off 1 by more than
// stoch_tol, is rejected (optionally the rows can be renormalized instead).
class StochasticMatrix {
 public:
  static StochasticMatrix make(RealMatrix entries, const std::string& name = "stochastic matrix",
                               bool renormalize_rows = false);

  const RealMatrix& entries() const { return p_; }
  // Entrywise square root, used by the entangled operators.
  const RealMatrix& sqrt_entries() const { return sqrt_p_; }
  int dim() const { return static_cast<int>(p_.rows()); }

 private:
  StochasticMatrix(RealMatrix p, RealMatrix sqrt_p) : p_(std::move(p)), sqrt_p_(std::move(sqrt_p)) {}
  RealMatrix p_;
  RealMatrix sqrt_p_;
};

// The classical triple (pi, Pi, Q) together with the derived initial density
// W0 = sum_j pi_j e_{jj} (a custom density may override the diagonal default).
class HiddenModel {
 public:
  static HiddenModel make(RealVector pi, StochasticMatrix transition, StochasticMatrix emission);
  static HiddenModel make(RealVector pi, StochasticMatrix transition, StochasticMatrix emission,
                          ComplexMatrix initial_state);

  int dim() const { return static_cast<int>(pi_.size()); }
  const RealVector& pi() const { return pi_; }
  const StochasticMatrix& transition() const { return transition_; }  // Pi
  const StochasticMatrix& emission() const { return emission_; }      // Q
  const ComplexMatrix& initial_state() const { return w0_; }          // W0
  bool has_custom_initial_state() const { return custom_w0_; }

 private:
  HiddenModel(RealVector pi, StochasticMatrix transition, StochasticMatrix emission, ComplexMatrix w0,
              bool custom_w0)
      : pi_(std::move(pi)),
        transition_(std::move(transition)),
        emission_(std::move(emission)),
        w0_(std::move(w0)),
        custom_w0_(custom_w0) {}

  RealVector pi_;
  StochasticMatrix transition_;
  StochasticMatrix emission_;
  ComplexMatrix w0_;
  bool custom_w0_;
};

// Validates that `w0` is a density matrix: Hermitian, spectrum above psd_floor,
// trace within stoch_tol of one. Throws NotDensity otherwise.
void require_density(const ComplexMatrix& w0, const char* name);

}  // namespace behmm
