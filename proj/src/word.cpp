#include "behmm/word.hpp"

#include <string>

namespace behmm {

namespace {

void check_factor(const ComplexMatrix& m, int d, const char* where, std::size_t pos,
                  const char* slot) {
  require_square_finite(m, where);
  if (m.rows() != d)
    throw DimensionMismatch(std::string(where) + ": factor " + slot + "_" + std::to_string(pos) +
                            " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                            ", expected " + std::to_string(d) + "x" + std::to_string(d));
}

}  // namespace

void require_word(const OperatorWord& w, int d, const char* where) {
  if (w.pairs.empty()) throw EmptyWord(std::string(where) + ": word has no factors");
  for (std::size_t m = 0; m < w.pairs.size(); ++m) {
    check_factor(w.pairs[m].first, d, where, m, "a");
    check_factor(w.pairs[m].second, d, where, m, "b");
  }
}

void require_word(const HiddenWord& w, int d, const char* where) {
  if (w.factors.empty()) throw EmptyWord(std::string(where) + ": word has no factors");
  for (std::size_t m = 0; m < w.factors.size(); ++m) check_factor(w.factors[m], d, where, m, "a");
}

void require_word(const DiagonalWord& w, int d, const char* where) {
  if (w.indices.empty()) throw EmptyWord(std::string(where) + ": word has no indices");
  for (std::size_t m = 0; m < w.indices.size(); ++m) {
    const int j = w.indices[m];
    if (j < 0 || j >= d)
      throw IndexOutOfRange(std::string(where) + ": index j_" + std::to_string(m) + " = " +
                            std::to_string(j) + " out of range for dimension " + std::to_string(d));
  }
}

}  // namespace behmm
