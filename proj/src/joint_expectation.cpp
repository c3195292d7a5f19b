#include "behmm/joint_expectation.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "behmm/entangled.hpp"

namespace behmm {

namespace {

void require_budget(int digit_count, int d, double budget, const char* where) {
  // d^digit_count summands, compared in log space to dodge overflow.
  if (digit_count * std::log(static_cast<double>(d)) > std::log(budget)) {
    std::ostringstream os;
    os << where << ": " << digit_count << " indices over dimension " << d
       << " exceed the summand budget " << budget;
    throw BudgetExceeded(os.str());
  }
}

// Advances a base-d odometer; returns false once all digits wrapped around.
bool next_index(std::vector<int>& idx, int d) {
  for (std::size_t p = 0; p < idx.size(); ++p) {
    if (++idx[p] < d) return true;
    idx[p] = 0;
  }
  return false;
}

void require_pair_channel(const QuantumChannelMap& ch, int d, const char* name) {
  if (ch.out_dim() != d || ch.in_dim() != d * d)
    throw DimensionMismatch(std::string(name) + " must map M_" + std::to_string(d * d) + " to M_" +
                            std::to_string(d) + ", got in " + std::to_string(ch.in_dim()) +
                            ", out " + std::to_string(ch.out_dim()));
}

}  // namespace

Complex joint_expectation_bi(const HiddenModel& model, const OperatorWord& w) {
  const int d = model.dim();
  require_word(w, d, "joint_expectation_bi");
  const int n = static_cast<int>(w.pairs.size()) - 1;
  ComplexMatrix y = ComplexMatrix::Identity(d, d);
  for (int m = n; m >= 0; --m) {
    y = schur_product(schur_product(w.pairs[m].first, apply_entangled(model.emission(), w.pairs[m].second)),
                      apply_entangled(model.transition(), y));
  }
  return (model.initial_state() * y).trace();
}

Complex joint_expectation_oracle(const HiddenModel& model, const OperatorWord& w, double budget) {
  const int d = model.dim();
  require_word(w, d, "joint_expectation_oracle");
  const int n = static_cast<int>(w.pairs.size()) - 1;
  // Index chains k_0..k_n and l_0..l_n, emission pairs o_m, o'_m, and the terminal h.
  const int digit_count = 4 * (n + 1) + 1;
  require_budget(digit_count, d, budget, "joint_expectation_oracle");

  const RealMatrix& sq_pi = model.transition().sqrt_entries();
  const RealMatrix& sq_q = model.emission().sqrt_entries();
  const ComplexMatrix& w0 = model.initial_state();

  std::vector<int> idx(static_cast<std::size_t>(digit_count), 0);
  const int* k = idx.data();
  const int* l = k + (n + 1);
  const int* o = l + (n + 1);
  const int* op = o + (n + 1);
  const int* h = op + (n + 1);

  Complex total = 0.0;
  do {
    Complex term = w0(l[0], k[0]);
    for (int m = 0; m <= n; ++m) {
      term *= w.pairs[m].first(k[m], l[m]);
      term *= w.pairs[m].second(o[m], op[m]);
      term *= sq_q(k[m], o[m]) * sq_q(l[m], op[m]);
      if (m < n) term *= sq_pi(k[m], k[m + 1]) * sq_pi(l[m], l[m + 1]);
    }
    term *= sq_pi(k[n], *h) * sq_pi(l[n], *h);
    total += term;
  } while (next_index(idx, d));
  return total;
}

Complex joint_expectation_generic(const ComplexMatrix& init, const QuantumChannelMap& te,
                                  const QuantumChannelMap& em, const OperatorWord& w) {
  const int d = te.out_dim();
  require_pair_channel(te, d, "transition expectation");
  require_pair_channel(em, d, "emission operator");
  require_word(w, d, "joint_expectation_generic");
  require_density(init, "initial state");
  if (init.rows() != d)
    throw DimensionMismatch("initial state is " + std::to_string(init.rows()) + "x" +
                            std::to_string(init.cols()) + " but the channels act on M_" +
                            std::to_string(d));
  ComplexMatrix x = ComplexMatrix::Identity(d, d);
  for (int m = static_cast<int>(w.pairs.size()) - 1; m >= 0; --m)
    x = te.apply(kron(em.apply(kron(w.pairs[m].first, w.pairs[m].second)), x));
  return (init * x).trace();
}

ComplexMatrix E0_of_word(const QuantumChannelMap& te, const HiddenWord& hw) {
  const int d = te.out_dim();
  require_pair_channel(te, d, "transition expectation");
  require_word(hw, d, "E0_of_word");
  ComplexMatrix x = ComplexMatrix::Identity(d, d);
  for (int m = static_cast<int>(hw.factors.size()) - 1; m >= 0; --m)
    x = te.apply(kron(hw.factors[m], x));
  return x;
}

Complex hidden_expectation(const ComplexMatrix& init, const QuantumChannelMap& te,
                           const HiddenWord& hw) {
  require_density(init, "initial state");
  if (init.rows() != te.out_dim())
    throw DimensionMismatch("initial state is " + std::to_string(init.rows()) + "x" +
                            std::to_string(init.cols()) + " but the channel acts on M_" +
                            std::to_string(te.out_dim()));
  return (init * E0_of_word(te, hw)).trace();
}

ComplexMatrix hidden_lemma_formula(const HiddenModel& model, const HiddenWord& hw, double budget) {
  const int d = model.dim();
  require_word(hw, d, "hidden_lemma_formula");
  const int r = static_cast<int>(hw.factors.size()) - 1;
  // Chains k_0..k_r and l_0..l_r plus the terminal j inside each summand.
  require_budget(2 * (r + 1) + 1, d, budget, "hidden_lemma_formula");

  const RealMatrix& sq_pi = model.transition().sqrt_entries();
  std::vector<int> idx(static_cast<std::size_t>(2 * (r + 1)), 0);
  const int* k = idx.data();
  const int* l = k + (r + 1);

  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  do {
    Complex term = 1.0;
    for (int m = 0; m <= r; ++m) {
      term *= hw.factors[m](k[m], l[m]);
      if (m < r) term *= sq_pi(k[m], k[m + 1]) * sq_pi(l[m], l[m + 1]);
    }
    double tail = 0.0;
    for (int j = 0; j < d; ++j) tail += sq_pi(k[r], j) * sq_pi(l[r], j);
    out(k[0], l[0]) += term * tail;
  } while (next_index(idx, d));
  return out;
}

}  // namespace behmm
