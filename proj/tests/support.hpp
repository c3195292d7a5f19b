#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "behmm/classical.hpp"
#include "behmm/entangled.hpp"
#include "behmm/io.hpp"
#include "behmm/joint_expectation.hpp"
#include "behmm/model.hpp"
#include "behmm/recurrence.hpp"
#include "behmm/word.hpp"

namespace support {

using namespace behmm;

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

// Strictly positive rows keep the models away from degenerate supports.
inline RealMatrix random_stochastic_entries(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  RealMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m(i, j) = u(rng);
    m.row(i) /= m.row(i).sum();
  }
  return m;
}

inline StochasticMatrix random_stochastic(int d, std::mt19937_64& rng) {
  return StochasticMatrix::make(random_stochastic_entries(d, rng));
}

inline HiddenModel random_model(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  RealVector pi(d);
  for (int i = 0; i < d; ++i) pi(i) = u(rng);
  pi /= pi.sum();
  return HiddenModel::make(std::move(pi), random_stochastic(d, rng), random_stochastic(d, rng));
}

inline ComplexMatrix random_complex_matrix(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = Complex(u(rng), u(rng));
  return m;
}

inline ComplexMatrix random_hermitian(int d, std::mt19937_64& rng) {
  const ComplexMatrix a = random_complex_matrix(d, rng);
  return 0.5 * (a + a.adjoint());
}

inline ComplexMatrix random_psd(int d, std::mt19937_64& rng) {
  const ComplexMatrix a = random_complex_matrix(d, rng);
  return a * a.adjoint();
}

inline ComplexMatrix random_density(int d, std::mt19937_64& rng) {
  const ComplexMatrix p = random_psd(d, rng);
  return p / p.trace();
}

// Rank-r orthogonal projection from the Q factor of a random matrix; rank
// uniform in 1..d when unspecified.
inline Projection random_projection(int d, std::mt19937_64& rng, int rank = 0) {
  if (rank < 1) {
    std::uniform_int_distribution<int> pick(1, d);
    rank = pick(rng);
  }
  const ComplexMatrix g = random_complex_matrix(d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix v = q.leftCols(rank);
  return Projection::make(v * v.adjoint());
}

inline OperatorWord random_operator_word(int d, int length, std::mt19937_64& rng) {
  OperatorWord w;
  for (int m = 0; m < length; ++m)
    w.pairs.emplace_back(random_complex_matrix(d, rng), random_complex_matrix(d, rng));
  return w;
}

inline HiddenWord random_hidden_word(int d, int length, std::mt19937_64& rng) {
  HiddenWord w;
  for (int m = 0; m < length; ++m) w.factors.push_back(random_complex_matrix(d, rng));
  return w;
}

inline OperatorWord identity_word(int d, int length) {
  OperatorWord w;
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  for (int m = 0; m < length; ++m) w.pairs.emplace_back(id, id);
  return w;
}

// ---- Independent oracles, written directly from the defining sums. ----

// (P A)_{ij} = sum_{k,l} sqrt(P_ik P_jl) A_kl as a literal quadruple sum.
inline ComplexMatrix oracle_apply_entangled(const RealMatrix& p, const ComplexMatrix& a) {
  const int d = static_cast<int>(p.rows());
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) out(i, j) += std::sqrt(p(i, k) * p(j, l)) * a(k, l);
  return out;
}

// sum_{i,j,k,l} sqrt(P_ik P_jl) a_ij b_kl e_ij for P = Pi or Q.
inline ComplexMatrix oracle_pair_map(const RealMatrix& p, const ComplexMatrix& a,
                                     const ComplexMatrix& b) {
  const int d = static_cast<int>(p.rows());
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) out(i, j) += std::sqrt(p(i, k) * p(j, l)) * a(i, j) * b(k, l);
  return out;
}

// sum_{i,j,k,m,l} a_ij b_ml sqrt(Q_ik Q_jk) sqrt(Pi_im Pi_jl) e_ij.
inline ComplexMatrix oracle_underlying(const HiddenModel& model, const ComplexMatrix& a,
                                       const ComplexMatrix& b) {
  const int d = model.dim();
  const RealMatrix& q = model.emission().entries();
  const RealMatrix& pi = model.transition().entries();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int m = 0; m < d; ++m)
          for (int l = 0; l < d; ++l)
            out(i, j) += a(i, j) * b(m, l) * std::sqrt(q(i, k) * q(j, k)) *
                         std::sqrt(pi(i, m) * pi(j, l));
  return out;
}

// Flat-sum compression of a word under the underlying pair map: chains (k_m, l_m)
// contribute prod_m a_m(k_m, l_m) c(k_m, l_m) with sqrt(Pi) links and a terminal
// sum_j sqrt(Pi_{k_r j} Pi_{l_r j}), where c(i, j) = sum_o sqrt(Q_io Q_jo).
inline ComplexMatrix oracle_e0_underlying(const HiddenModel& model,
                                          const std::vector<ComplexMatrix>& factors) {
  const int d = model.dim();
  const RealMatrix& q = model.emission().entries();
  const RealMatrix& pi = model.transition().entries();
  const int r = static_cast<int>(factors.size()) - 1;
  RealMatrix c = RealMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int o = 0; o < d; ++o) c(i, j) += std::sqrt(q(i, o) * q(j, o));

  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  std::vector<int> idx(2 * (r + 1), 0);  // k_0..k_r then l_0..l_r
  const int* k = idx.data();
  const int* l = k + (r + 1);
  while (true) {
    Complex term = 1.0;
    for (int m = 0; m <= r; ++m) {
      term *= factors[m](k[m], l[m]) * c(k[m], l[m]);
      if (m < r) term *= std::sqrt(pi(k[m], k[m + 1]) * pi(l[m], l[m + 1]));
    }
    double tail = 0.0;
    for (int j = 0; j < d; ++j) tail += std::sqrt(pi(k[r], j) * pi(l[r], j));
    out(k[0], l[0]) += term * tail;

    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == d) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return out;
}

// Materializes a hidden word as an operator on the (length)-fold tensor power.
inline ComplexMatrix materialize_word(const std::vector<ComplexMatrix>& factors, int total_sites) {
  const int d = static_cast<int>(factors.front().rows());
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int site = 0; site < total_sites; ++site)
    out = kron(out, site < static_cast<int>(factors.size()) ? factors[static_cast<std::size_t>(site)] : id);
  return out;
}

}  // namespace support
