#pragma once

#include "behmm/model.hpp"
#include "behmm/word.hpp"

namespace behmm {

// pi_{j_0} * prod_m Pi_{j_m j_{m+1}}: the law of the classical hidden trajectory.
double classical_markov_probability(const HiddenModel& model, const DiagonalWord& w);

struct DiagonalRestriction {
  double quantum = 0.0;
  double classical = 0.0;
  double defect = 0.0;
};

// Evaluates the diagonal matrix-unit word under the underlying process and compares
// it with the classical closed form; the two must agree.
DiagonalRestriction diagonal_restriction_check(const HiddenModel& model, const DiagonalWord& w);

struct DiagonalClosure {
  double image_offdiag_norm = 0.0;
  ComplexVector image_diag;
};

// Applies the underlying transition expectation to diag(x) (x) diag(y). The image is
// again diagonal, with entries x_i * (Pi y)_i.
DiagonalClosure diagonal_closure_check(const HiddenModel& model, const ComplexVector& x,
                                       const ComplexVector& y);

}  // namespace behmm
