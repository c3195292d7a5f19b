#pragma once

#include "behmm/channel.hpp"
#include "behmm/model.hpp"

namespace behmm {

// (P_A)_{ij} = sum_{k,l} sqrt(P_ik P_jl) A_kl, evaluated as R A R^T with R the
// entrywise square root of the stochastic matrix P. Not unital in general.
ComplexMatrix apply_entangled(const StochasticMatrix& P, const ComplexMatrix& A);

// Transition expectation of the hidden layer: a (schur) P_Pi(b). Unital and CP.
ComplexMatrix transition_expectation_H(const HiddenModel& model, const ComplexMatrix& a,
                                       const ComplexMatrix& b);

// Emission operator coupling hidden to observed layer: a (schur) P_Q(b). Unital and CP.
ComplexMatrix emission_operator_HO(const HiddenModel& model, const ComplexMatrix& a,
                                   const ComplexMatrix& b);

// Transition expectation of the underlying (hidden-only) process after the observation
// layer is traced over: a (schur) P_Q(id) (schur) P_Pi(b).
ComplexMatrix underlying_transition_expectation(const HiddenModel& model, const ComplexMatrix& a,
                                                const ComplexMatrix& b);

enum class PairMapKind {
  H,             // transition_expectation_H
  HO,            // emission_operator_HO
  O_underlying,  // underlying_transition_expectation
};

// Materializes the bilinear extension of the chosen pair map as a channel M_{d^2} -> M_d.
QuantumChannelMap channel_from_pair_map(const HiddenModel& model, PairMapKind which);

}  // namespace behmm
