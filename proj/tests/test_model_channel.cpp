#include <doctest.h>

#include "support.hpp"

using namespace behmm;

TEST_CASE("stochastic matrix accepts valid rows and exposes entrywise sqrt") {
  RealMatrix p(2, 2);
  p << 0.7, 0.3, 0.4, 0.6;
  const StochasticMatrix s = StochasticMatrix::make(p);
  CHECK(s.dim() == 2);
  CHECK(s.sqrt_entries()(0, 0) == doctest::Approx(std::sqrt(0.7)).epsilon(1e-15));
}

TEST_CASE("stochastic matrix rejects a bad row sum naming the row") {
  RealMatrix p(2, 2);
  p << 0.7, 0.2, 0.4, 0.6;
  CHECK_THROWS_WITH_AS(StochasticMatrix::make(p, "Pi"), doctest::Contains("row 0"), ValidationError);
}

TEST_CASE("stochastic matrix rejects negative entries naming the position") {
  RealMatrix p(2, 2);
  p << 1.001, -0.001, 0.4, 0.6;
  CHECK_THROWS_WITH_AS(StochasticMatrix::make(p, "Pi"), doctest::Contains("(0,1)"), ValidationError);
}

TEST_CASE("negative-within-tolerance entries clamp to zero") {
  RealMatrix p(2, 2);
  p << 1.0 + 5e-10, -5e-10, 0.4, 0.6;
  const StochasticMatrix s = StochasticMatrix::make(p);
  CHECK(s.entries()(0, 1) == 0.0);
  CHECK(s.sqrt_entries()(0, 1) == 0.0);
}

TEST_CASE("row renormalization only behind the explicit flag") {
  RealMatrix p(2, 2);
  p << 0.6, 0.3, 0.4, 0.6;
  CHECK_THROWS_AS(StochasticMatrix::make(p), ValidationError);
  const StochasticMatrix s = StochasticMatrix::make(p, "Pi", true);
  CHECK(s.entries().row(0).sum() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.entries()(0, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("model validation") {
  RealVector pi(2);
  pi << 0.5, 0.5;
  RealMatrix t(2, 2), q(2, 2);
  t << 0.7, 0.3, 0.4, 0.6;
  q << 0.6, 0.4, 0.3, 0.7;
  const HiddenModel model =
      HiddenModel::make(pi, StochasticMatrix::make(t), StochasticMatrix::make(q));
  ComplexMatrix w0(2, 2);
  w0 << 0.5, 0, 0, 0.5;
  CHECK(max_abs_diff(model.initial_state(), w0) == 0.0);
  CHECK_FALSE(model.has_custom_initial_state());

  RealVector bad_pi(2);
  bad_pi << 0.5, 0.4;
  CHECK_THROWS_AS(HiddenModel::make(bad_pi, StochasticMatrix::make(t), StochasticMatrix::make(q)),
                  ValidationError);

  RealVector pi3 = RealVector::Constant(3, 1.0 / 3.0);
  CHECK_THROWS_AS(HiddenModel::make(pi3, StochasticMatrix::make(t), StochasticMatrix::make(q)),
                  DimensionMismatch);
}

TEST_CASE("custom initial state must be a density matrix") {
  RealVector pi(2);
  pi << 0.5, 0.5;
  RealMatrix t(2, 2);
  t << 0.7, 0.3, 0.4, 0.6;
  auto make_with = [&](const ComplexMatrix& w0) {
    return HiddenModel::make(pi, StochasticMatrix::make(t), StochasticMatrix::make(t), w0);
  };

  ComplexMatrix w0(2, 2);
  w0 << 0.75, 0.25, 0.25, 0.25;
  CHECK_NOTHROW(make_with(w0));  // PSD, trace 1

  CHECK_THROWS_AS(make_with(ComplexMatrix::Identity(2, 2)), NotDensity);  // trace 2
  ComplexMatrix indef(2, 2);
  indef << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(make_with(indef), NotDensity);
  CHECK_THROWS_AS(make_with(matrix_unit(0, 1, 2)), NotDensity);  // not Hermitian
}

TEST_CASE("channel constructor checks block dimensions") {
  CHECK_THROWS_AS(QuantumChannelMap(2, 4, ComplexMatrix::Identity(4, 4)), DimensionMismatch);
  const QuantumChannelMap ch(2, 4, ComplexMatrix::Identity(8, 8));
  CHECK_THROWS_AS(ch.apply(ComplexMatrix::Identity(2, 2)), DimensionMismatch);
}

TEST_CASE("pair-function extension is bilinear in both slots") {
  auto rng = support::make_rng(21);
  const int d = 3;
  // f(a, b) = a * tr(b): the extension must send kron(a, b) to exactly that.
  const QuantumChannelMap ch = QuantumChannelMap::from_pair_function(
      d, [](const ComplexMatrix& a, const ComplexMatrix& b) { return (a * b.trace()).eval(); });
  for (int rep = 0; rep < 10; ++rep) {
    const ComplexMatrix a = support::random_complex_matrix(d, rng);
    const ComplexMatrix b = support::random_complex_matrix(d, rng);
    CHECK(max_abs_diff(ch.apply(kron(a, b)), a * b.trace()) <= 1e-12);
  }
}

TEST_CASE("validate_channel flags sign flip as not completely positive") {
  const int d = 2;
  // L(x) = -x on M_2, packed directly.
  ComplexMatrix choi = ComplexMatrix::Zero(4, 4);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) choi(k * d + k, l * d + l) = -1.0;
  const ValidationReport r = validate_channel(QuantumChannelMap(d, d, choi));
  CHECK_FALSE(r.cp);
  CHECK(r.min_choi_eigenvalue < -0.5);
  CHECK_FALSE(r.unital);
}

TEST_CASE("validate_channel flags doubled trace map as non-unital") {
  const int d = 2;
  // L(x) = 2 (tr x / d) id: completely positive but sends id to 2 id.
  ComplexMatrix choi = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) choi(i * d + k, i * d + k) = 2.0 / d;
  const ValidationReport r = validate_channel(QuantumChannelMap(d, d, choi));
  CHECK(r.cp);
  CHECK_FALSE(r.unital);
  CHECK(r.unitality_defect == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("identity map validates as cp and unital") {
  const int d = 2;
  ComplexMatrix choi = ComplexMatrix::Zero(4, 4);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) choi(k * d + k, l * d + l) = 1.0;
  const ValidationReport r = validate_channel(QuantumChannelMap(d, d, choi));
  CHECK(r.cp);
  CHECK(r.unital);
  auto rng = support::make_rng(22);
  const ComplexMatrix x = support::random_complex_matrix(d, rng);
  CHECK(max_abs_diff(QuantumChannelMap(d, d, choi).apply(x), x) <= 1e-14);
}
