#include <doctest.h>

#include <cmath>

#include "support.hpp"

using namespace behmm;

namespace {

HiddenModel example_model() {
  RealVector pi(2);
  pi << 0.5, 0.5;
  RealMatrix tr(2, 2);
  tr << 0.7, 0.3, 0.4, 0.6;
  RealMatrix em(2, 2);
  em << 0.6, 0.4, 0.3, 0.7;
  return HiddenModel::make(pi, StochasticMatrix::make(tr), StochasticMatrix::make(em));
}

// All diagonal words of a given length, in lexicographic order.
std::vector<DiagonalWord> all_words(int d, int length) {
  std::vector<DiagonalWord> words;
  DiagonalWord w;
  w.indices.assign(static_cast<std::size_t>(length), 0);
  while (true) {
    words.push_back(w);
    int pos = length - 1;
    while (pos >= 0 && ++w.indices[static_cast<std::size_t>(pos)] == d)
      w.indices[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  return words;
}

}  // namespace

TEST_CASE("trajectory probabilities") {
  const HiddenModel model = example_model();
  DiagonalWord start;
  start.indices = {1};
  CHECK(classical_markov_probability(model, start) == doctest::Approx(0.5));
  DiagonalWord path;
  path.indices = {0, 1};
  CHECK(classical_markov_probability(model, path) == doctest::Approx(0.15).epsilon(1e-12));
  DiagonalWord longer;
  longer.indices = {0, 1, 1, 0};
  CHECK(classical_markov_probability(model, longer) ==
        doctest::Approx(0.5 * 0.3 * 0.6 * 0.4).epsilon(1e-12));
}

TEST_CASE("trajectory probabilities sum to one") {
  auto rng = support::make_rng(80);
  for (int d = 2; d <= 3; ++d)
    for (int length = 1; length <= 4; ++length) {
      const HiddenModel model = support::random_model(d, rng);
      double total = 0.0;
      for (const DiagonalWord& w : all_words(d, length)) {
        const double p = classical_markov_probability(model, w);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        total += p;
      }
      CHECK(std::abs(total - 1.0) <= 1e-12);
    }
}

TEST_CASE("diagonal word validation") {
  const HiddenModel model = example_model();
  CHECK_THROWS_AS(classical_markov_probability(model, DiagonalWord{}), EmptyWord);
  DiagonalWord bad;
  bad.indices = {0, 2};
  CHECK_THROWS_WITH_AS(classical_markov_probability(model, bad), doctest::Contains("j_1"),
                       IndexOutOfRange);
}

TEST_CASE("the underlying process restricted to the diagonal is the hidden chain") {
  auto rng = support::make_rng(81);
  const HiddenModel ex = example_model();
  DiagonalWord path;
  path.indices = {0, 1};
  const DiagonalRestriction worked = diagonal_restriction_check(ex, path);
  CHECK(worked.classical == doctest::Approx(0.15).epsilon(1e-12));
  CHECK(worked.quantum == doctest::Approx(0.15).epsilon(1e-12));
  CHECK(worked.defect <= 1e-12);

  for (int rep = 0; rep < 12; ++rep) {
    const int d = 2 + rep % 2;
    const HiddenModel model = support::random_model(d, rng);
    for (int length = 1; length <= 4; ++length)
      for (const DiagonalWord& w : all_words(d, length)) {
        const DiagonalRestriction r = diagonal_restriction_check(model, w);
        CHECK(r.defect <= 1e-12);
      }
  }
}

TEST_CASE("length-one restrictions read off the initial distribution") {
  auto rng = support::make_rng(82);
  const HiddenModel model = support::random_model(3, rng);
  for (int j = 0; j < 3; ++j) {
    DiagonalWord w;
    w.indices = {j};
    const DiagonalRestriction r = diagonal_restriction_check(model, w);
    CHECK(r.quantum == doctest::Approx(model.pi()(j)).epsilon(1e-12));
  }
  const HiddenModel scalar = support::random_model(1, rng);
  DiagonalWord w;
  w.indices = {0};
  const DiagonalRestriction r = diagonal_restriction_check(scalar, w);
  CHECK(r.quantum == doctest::Approx(1.0));
  CHECK(r.classical == doctest::Approx(1.0));
}

TEST_CASE("diagonal inputs stay diagonal under the underlying map") {
  auto rng = support::make_rng(83);
  const int d = 3;
  const HiddenModel model = support::random_model(d, rng);

  const ComplexVector ones = ComplexVector::Ones(d);
  const DiagonalClosure unit = diagonal_closure_check(model, ones, ones);
  CHECK(unit.image_offdiag_norm <= 1e-12);
  for (int i = 0; i < d; ++i) CHECK(std::abs(unit.image_diag(i) - 1.0) <= 1e-12);

  for (int rep = 0; rep < 20; ++rep) {
    const ComplexVector x = support::random_complex_matrix(d, rng).col(0);
    const ComplexVector y = support::random_complex_matrix(d, rng).col(0);
    const DiagonalClosure c = diagonal_closure_check(model, x, y);
    CHECK(c.image_offdiag_norm <= 1e-12);
    const ComplexVector reached = model.transition().entries().cast<Complex>() * y;
    for (int i = 0; i < d; ++i) CHECK(std::abs(c.image_diag(i) - x(i) * reached(i)) <= 1e-12);
  }
}

TEST_CASE("off-diagonal operators carry weight the classical chain cannot see") {
  const HiddenModel model = example_model();
  OperatorWord w;
  w.pairs.emplace_back(matrix_unit(0, 0, 2), ComplexMatrix::Identity(2, 2));
  w.pairs.emplace_back(matrix_unit(0, 1, 2), ComplexMatrix::Identity(2, 2));
  const Complex base = joint_expectation_bi(model, w);
  CHECK(std::abs(base) > 1e-3);

  w.pairs[1].first = 2.0 * matrix_unit(0, 1, 2);
  const Complex doubled = joint_expectation_bi(model, w);
  CHECK(std::abs(doubled - base) > 1e-6);
  CHECK(std::abs(doubled - 2.0 * base) <= 1e-12);
}
