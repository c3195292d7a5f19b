#include "behmm/entangled.hpp"

#include <string>

namespace behmm {

ComplexMatrix apply_entangled(const StochasticMatrix& P, const ComplexMatrix& A) {
  require_square_finite(A, "apply_entangled");
  if (A.rows() != P.dim())
    throw DimensionMismatch("apply_entangled: matrix is " + std::to_string(A.rows()) + "x" +
                            std::to_string(A.cols()) + " but the stochastic matrix has dimension " +
                            std::to_string(P.dim()));
  const ComplexMatrix R = P.sqrt_entries().cast<Complex>();
  return R * A * R.transpose();
}

ComplexMatrix transition_expectation_H(const HiddenModel& model, const ComplexMatrix& a,
                                       const ComplexMatrix& b) {
  require_same_dim(a, b, "transition_expectation_H");
  return schur_product(a, apply_entangled(model.transition(), b));
}

ComplexMatrix emission_operator_HO(const HiddenModel& model, const ComplexMatrix& a,
                                   const ComplexMatrix& b) {
  require_same_dim(a, b, "emission_operator_HO");
  return schur_product(a, apply_entangled(model.emission(), b));
}

ComplexMatrix underlying_transition_expectation(const HiddenModel& model, const ComplexMatrix& a,
                                                const ComplexMatrix& b) {
  require_same_dim(a, b, "underlying_transition_expectation");
  const int d = model.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  return schur_product(schur_product(a, apply_entangled(model.emission(), id)),
                       apply_entangled(model.transition(), b));
}

QuantumChannelMap channel_from_pair_map(const HiddenModel& model, PairMapKind which) {
  switch (which) {
    case PairMapKind::H:
      return QuantumChannelMap::from_pair_function(
          model.dim(), [&model](const ComplexMatrix& a, const ComplexMatrix& b) {
            return transition_expectation_H(model, a, b);
          });
    case PairMapKind::HO:
      return QuantumChannelMap::from_pair_function(
          model.dim(), [&model](const ComplexMatrix& a, const ComplexMatrix& b) {
            return emission_operator_HO(model, a, b);
          });
    case PairMapKind::O_underlying:
      return QuantumChannelMap::from_pair_function(
          model.dim(), [&model](const ComplexMatrix& a, const ComplexMatrix& b) {
            return underlying_transition_expectation(model, a, b);
          });
  }
  throw ValidationError("channel_from_pair_map: unknown pair-map kind");
}

}  // namespace behmm
