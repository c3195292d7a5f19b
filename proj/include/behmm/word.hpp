#pragma once

#include <utility>
#include <vector>

#include "behmm/matrix_core.hpp"

namespace behmm {

// Finite cylinder word of hidden/observed operator pairs (a_0, b_0), ..., (a_n, b_n).
struct OperatorWord {
  std::vector<std::pair<ComplexMatrix, ComplexMatrix>> pairs;
};

// Word of hidden-layer operators a_0, ..., a_n only.
struct HiddenWord {
  std::vector<ComplexMatrix> factors;
};

// Word of diagonal matrix-unit indices j_0, ..., j_n (a classical trajectory).
struct DiagonalWord {
  std::vector<int> indices;
};

// Throw EmptyWord / DimensionMismatch unless every factor is d x d and the word is nonempty.
void require_word(const OperatorWord& w, int d, const char* where);
void require_word(const HiddenWord& w, int d, const char* where);
void require_word(const DiagonalWord& w, int d, const char* where);

}  // namespace behmm
