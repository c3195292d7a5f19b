#include "behmm/channel.hpp"

#include <string>

namespace behmm {

QuantumChannelMap::QuantumChannelMap(int out_dim, int in_dim, ComplexMatrix choi)
    : out_dim_(out_dim), in_dim_(in_dim), choi_(std::move(choi)) {
  if (out_dim_ < 1 || in_dim_ < 1)
    throw ValidationError("channel dimensions must be positive, got out " + std::to_string(out_dim_) +
                          ", in " + std::to_string(in_dim_));
  const Eigen::Index expected = static_cast<Eigen::Index>(out_dim_) * in_dim_;
  if (choi_.rows() != expected || choi_.cols() != expected)
    throw DimensionMismatch("channel block matrix must be " + std::to_string(expected) + "x" +
                            std::to_string(expected) + ", got " + std::to_string(choi_.rows()) + "x" +
                            std::to_string(choi_.cols()));
  if (!all_finite(choi_)) throw ValidationError("channel block matrix has non-finite entries");
}

ComplexMatrix QuantumChannelMap::apply(const ComplexMatrix& x) const {
  if (x.rows() != in_dim_ || x.cols() != in_dim_)
    throw DimensionMismatch("channel input must be " + std::to_string(in_dim_) + "x" +
                            std::to_string(in_dim_) + ", got " + std::to_string(x.rows()) + "x" +
                            std::to_string(x.cols()));
  ComplexMatrix out(out_dim_, out_dim_);
  for (int i = 0; i < out_dim_; ++i)
    for (int j = 0; j < out_dim_; ++j)
      out(i, j) = choi_.block(static_cast<Eigen::Index>(i) * in_dim_,
                              static_cast<Eigen::Index>(j) * in_dim_, in_dim_, in_dim_)
                      .cwiseProduct(x)
                      .sum();
  return out;
}

QuantumChannelMap QuantumChannelMap::from_pair_function(
    int d, const std::function<ComplexMatrix(const ComplexMatrix&, const ComplexMatrix&)>& f) {
  if (d < 1) throw ValidationError("pair-map dimension must be positive, got " + std::to_string(d));
  // The block matrix is (d*d^2)^2 entries; keep materialization at desk scale.
  if (d > 16)
    throw ValidationError("pair-map materialization capped at dimension 16, got " + std::to_string(d));
  const int in_dim = d * d;
  ComplexMatrix choi = ComplexMatrix::Zero(static_cast<Eigen::Index>(d) * in_dim,
                                           static_cast<Eigen::Index>(d) * in_dim);
  for (int k1 = 0; k1 < d; ++k1)
    for (int l1 = 0; l1 < d; ++l1)
      for (int k2 = 0; k2 < d; ++k2)
        for (int l2 = 0; l2 < d; ++l2) {
          const ComplexMatrix img = f(matrix_unit(k1, l1, d), matrix_unit(k2, l2, d));
          if (img.rows() != d || img.cols() != d)
            throw DimensionMismatch("pair function must return " + std::to_string(d) + "x" +
                                    std::to_string(d) + " matrices");
          const int K = k1 * d + k2;
          const int L = l1 * d + l2;
          for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
              choi(static_cast<Eigen::Index>(i) * in_dim + K,
                   static_cast<Eigen::Index>(j) * in_dim + L) = img(i, j);
        }
  return QuantumChannelMap(d, in_dim, std::move(choi));
}

ValidationReport validate_channel(const QuantumChannelMap& ch) {
  ValidationReport report;
  report.min_choi_eigenvalue = min_hermitian_eigenvalue(ch.choi());
  report.cp = is_hermitian(ch.choi()) && report.min_choi_eigenvalue >= psd_floor;
  const ComplexMatrix id_in = ComplexMatrix::Identity(ch.in_dim(), ch.in_dim());
  const ComplexMatrix id_out = ComplexMatrix::Identity(ch.out_dim(), ch.out_dim());
  report.unitality_defect = max_norm(ch.apply(id_in) - id_out);
  report.unital = report.unitality_defect <= eq_tol;
  return report;
}

}  // namespace behmm
