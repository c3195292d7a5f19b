#pragma once

#include "behmm/channel.hpp"
#include "behmm/model.hpp"
#include "behmm/word.hpp"

namespace behmm {

// Cap on the number of summands the flattened-sum evaluators may expand.
inline constexpr double summand_budget_default = 1e8;

// Joint expectation of an operator word under the entangled pair maps, by the
// right-to-left recursion
//   Y_n = a_n (schur) P_Q(b_n) (schur) P_Pi(id),
//   Y_m = a_m (schur) P_Q(b_m) (schur) P_Pi(Y_{m+1}),
// returning trace(W0 Y_0). Cost O(n d^3).
Complex joint_expectation_bi(const HiddenModel& model, const OperatorWord& w);

// Same value as an explicit sum over all chain, emission, and terminal indices:
// no intermediate matrices are shared, every summand is a fresh product of
// sqrt(Pi), sqrt(Q), word entries, and an initial-state weight. d^(4n+5) summands.
Complex joint_expectation_oracle(const HiddenModel& model, const OperatorWord& w,
                                 double budget = summand_budget_default);

// Joint expectation for arbitrary transition expectation te and emission operator em
// (both M_{d^2} -> M_d): nested evaluation te(em(a_0 (x) b_0) (x) te(... te(em(a_n (x) b_n) (x) id)))
// traced against the initial density.
Complex joint_expectation_generic(const ComplexMatrix& init, const QuantumChannelMap& te,
                                  const QuantumChannelMap& em, const OperatorWord& w);

// Compression of a hidden-layer word to a single site:
// E0(a_0, ..., a_n) = te(a_0 (x) te(a_1 (x) ... te(a_n (x) id))).
ComplexMatrix E0_of_word(const QuantumChannelMap& te, const HiddenWord& hw);

// Expectation of a hidden-layer word: trace(init * E0_of_word(te, hw)).
Complex hidden_expectation(const ComplexMatrix& init, const QuantumChannelMap& te,
                           const HiddenWord& hw);

// The same compression for the entangled hidden transition expectation, written as one
// flattened sum over index chains with a terminal sum_j sqrt(Pi_{k_r j} Pi_{l_r j}) factor.
ComplexMatrix hidden_lemma_formula(const HiddenModel& model, const HiddenWord& hw,
                                   double budget = summand_budget_default);

}  // namespace behmm
