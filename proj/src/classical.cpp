#include "behmm/classical.hpp"

#include <cmath>
#include <string>

#include "behmm/entangled.hpp"
#include "behmm/joint_expectation.hpp"

namespace behmm {

double classical_markov_probability(const HiddenModel& model, const DiagonalWord& w) {
  const int d = model.dim();
  require_word(w, d, "classical_markov_probability");
  double p = model.pi()(w.indices[0]);
  const RealMatrix& pi_matrix = model.transition().entries();
  for (std::size_t m = 0; m + 1 < w.indices.size(); ++m)
    p *= pi_matrix(w.indices[m], w.indices[m + 1]);
  return p;
}

DiagonalRestriction diagonal_restriction_check(const HiddenModel& model, const DiagonalWord& w) {
  const int d = model.dim();
  require_word(w, d, "diagonal_restriction_check");
  HiddenWord units;
  units.factors.reserve(w.indices.size());
  for (int j : w.indices) units.factors.push_back(matrix_unit(j, j, d));
  const QuantumChannelMap ch = channel_from_pair_map(model, PairMapKind::O_underlying);
  const Complex quantum = hidden_expectation(model.initial_state(), ch, units);

  DiagonalRestriction out;
  out.quantum = quantum.real();
  out.classical = classical_markov_probability(model, w);
  out.defect = std::abs(quantum - Complex(out.classical, 0.0));
  return out;
}

DiagonalClosure diagonal_closure_check(const HiddenModel& model, const ComplexVector& x,
                                       const ComplexVector& y) {
  const int d = model.dim();
  if (x.size() != d || y.size() != d)
    throw DimensionMismatch("diagonal_closure_check: vectors have lengths " +
                            std::to_string(x.size()) + " and " + std::to_string(y.size()) +
                            ", expected " + std::to_string(d));
  if (!x.allFinite() || !y.allFinite())
    throw ValidationError("diagonal_closure_check: vectors contain non-finite entries");

  const ComplexMatrix image =
      underlying_transition_expectation(model, x.asDiagonal(), y.asDiagonal());

  DiagonalClosure out;
  out.image_diag = image.diagonal();
  double offdiag = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) offdiag = std::max(offdiag, std::abs(image(i, j)));
  out.image_offdiag_norm = offdiag;
  return out;
}

}  // namespace behmm
