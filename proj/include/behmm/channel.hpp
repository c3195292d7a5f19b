#pragma once

#include <functional>

#include "behmm/matrix_core.hpp"

namespace behmm {

// Linear map L : M_{in_dim} -> M_{out_dim} stored through its Choi-style block matrix
//   choi[(i, k), (j, l)] = L(e_{kl})_{ij},  row = i*in_dim + k, col = j*in_dim + l.
// This packing is a simultaneous row/column permutation of the standard Choi matrix,
// so L is completely positive iff choi is PSD.
class QuantumChannelMap {
 public:
  QuantumChannelMap(int out_dim, int in_dim, ComplexMatrix choi);

  int out_dim() const { return out_dim_; }
  int in_dim() const { return in_dim_; }
  const ComplexMatrix& choi() const { return choi_; }

  // L(x)_{ij} = sum_{kl} choi[(i,k),(j,l)] x_{kl}.
  ComplexMatrix apply(const ComplexMatrix& x) const;

  // Bilinear extension of f on matrix-unit pairs to a map M_d (x) M_d -> M_{out}:
  // the returned channel sends kron(a, b) to sum_{units} a_{k1 l1} b_{k2 l2} f(e_{k1 l1}, e_{k2 l2}).
  static QuantumChannelMap from_pair_function(
      int d, const std::function<ComplexMatrix(const ComplexMatrix&, const ComplexMatrix&)>& f);

 private:
  int out_dim_;
  int in_dim_;
  ComplexMatrix choi_;
};

struct ValidationReport {
  bool cp = false;
  bool unital = false;
  double min_choi_eigenvalue = 0.0;
  double unitality_defect = 0.0;
};

// Complete positivity via the Choi spectrum, unitality via L(id_in) against id_out.
// Never throws; failures are carried in the report.
ValidationReport validate_channel(const QuantumChannelMap& ch);

}  // namespace behmm
