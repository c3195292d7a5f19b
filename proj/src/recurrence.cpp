#include "behmm/recurrence.hpp"

#include <cmath>
#include <string>

#include "behmm/entangled.hpp"

namespace behmm {

namespace {

void require_projection_dim(const Projection& e, int d, const char* where) {
  if (e.dim() != d)
    throw DimensionMismatch(std::string(where) + ": projection is " + std::to_string(e.dim()) + "x" +
                            std::to_string(e.dim()) + " but the channel acts on M_" +
                            std::to_string(d));
}

}  // namespace

HiddenWord stopping_time_word(const Projection& e, int k) {
  if (k < 0) throw ValidationError("stopping_time_word: step count must be >= 0, got " + std::to_string(k));
  HiddenWord w;
  w.factors.reserve(static_cast<std::size_t>(k) + 1);
  const ComplexMatrix perp = e.complement();
  for (int m = 0; m < k; ++m) w.factors.push_back(perp);
  w.factors.push_back(e.matrix());
  return w;
}

HiddenWord tail_word(const Projection& e, int n) {
  if (n < 0) throw ValidationError("tail_word: step count must be >= 0, got " + std::to_string(n));
  HiddenWord w;
  w.factors.assign(static_cast<std::size_t>(n) + 1, e.complement());
  return w;
}

AccessibilityScan complete_accessibility(const QuantumChannelMap& te, const Projection& e, int N,
                                         double tol) {
  const int d = te.out_dim();
  require_projection_dim(e, d, "complete_accessibility");
  if (N < 1) throw ValidationError("complete_accessibility: horizon must be >= 1, got " + std::to_string(N));
  const ValidationReport v = validate_channel(te);
  if (!v.cp)
    throw NotCP("complete_accessibility: channel is not completely positive (min eigenvalue " +
                std::to_string(v.min_choi_eigenvalue) + ")");
  if (!v.unital)
    throw NotUnital("complete_accessibility: channel is not unital (defect " +
                    std::to_string(v.unitality_defect) + ")");

  AccessibilityScan scan;
  scan.residual_norms.reserve(static_cast<std::size_t>(N) + 1);
  const ComplexMatrix perp = e.complement();
  ComplexMatrix tail = ComplexMatrix::Identity(d, d);
  for (int n = 0; n <= N; ++n) {
    tail = te.apply(kron(perp, tail));  // E0 of n+1 complement factors
    scan.residual_norms.push_back(max_norm(tail));
  }
  bool monotone = true;
  const int window = (N + 1) / 2;
  for (int n = N - window; n < N; ++n)
    if (scan.residual_norms[static_cast<std::size_t>(n) + 1] >
        scan.residual_norms[static_cast<std::size_t>(n)] + eq_tol)
      monotone = false;
  scan.accessible = scan.residual_norms.back() <= tol && monotone;
  return scan;
}

const char* to_string(RecurrenceVerdict v) {
  switch (v) {
    case RecurrenceVerdict::recurrent_certified: return "recurrent_certified";
    case RecurrenceVerdict::recurrent_numerical: return "recurrent_numerical";
    case RecurrenceVerdict::inconclusive: return "inconclusive";
    case RecurrenceVerdict::undefined: return "undefined";
  }
  return "unknown";
}

RecurrenceReport phi_recurrence_report(const HiddenModel& model, const Projection& e, int N) {
  const int d = model.dim();
  require_projection_dim(e, d, "phi_recurrence_report");
  if (N < 1) throw ValidationError("phi_recurrence_report: horizon must be >= 1, got " + std::to_string(N));
  const QuantumChannelMap ch = channel_from_pair_map(model, PairMapKind::O_underlying);
  const ComplexMatrix& w0 = model.initial_state();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const ComplexMatrix perp = e.complement();

  RecurrenceReport report;
  report.phi_e = (w0 * ch.apply(kron(e.matrix(), id))).trace().real();
  if (report.phi_e <= eq_tol)
    throw UndefinedRecurrence("phi_recurrence_report: phi(e at site 0) = " +
                              std::to_string(report.phi_e) + " vanishes; recurrence is undefined");

  report.q = perp.cwiseAbs().sum();
  report.q_threshold = 1.0 / d;
  report.bound_certified = report.q < report.q_threshold;

  // r_n = |trace(W0 te(e (x) E0(n complement factors)))|, built incrementally.
  report.residual_sequence.reserve(static_cast<std::size_t>(N));
  ComplexMatrix tail = ComplexMatrix::Identity(d, d);
  for (int n = 1; n <= N; ++n) {
    tail = ch.apply(kron(perp, tail));
    report.residual_sequence.push_back(std::abs((w0 * ch.apply(kron(e.matrix(), tail))).trace()));
  }
  // Here tail = E0 of N complement factors; one more step gives E0(tail_word(e, N)).
  const ComplexMatrix never = ch.apply(kron(perp, tail));

  ComplexMatrix partition = never;
  ComplexMatrix first_hit = ch.apply(kron(e.matrix(), id));
  partition += first_hit;
  for (int k = 1; k <= N; ++k) {
    first_hit = ch.apply(kron(perp, first_hit));
    partition += first_hit;
  }
  report.partition_defect = max_norm(partition - id);

  if (report.bound_certified) {
    const double dq = d * report.q;
    double worst = 0.0;
    for (int n = 1; n <= N; ++n) {
      const double bound = d * d * std::pow(dq, n - 1);
      worst = std::max(worst, report.residual_sequence[static_cast<std::size_t>(n) - 1] - bound);
    }
    report.bound_violation = std::max(worst, 0.0);
    report.tail_bound = d * d * std::pow(dq, N) / (1.0 - dq);
    report.verdict = RecurrenceVerdict::recurrent_certified;
    return report;
  }

  const double r_last = report.residual_sequence.back();
  bool decaying = r_last <= 1e-8;
  const int pairs = std::min(5, N - 1);
  for (int n = N - pairs; n < N && decaying; ++n) {
    const double prev = report.residual_sequence[static_cast<std::size_t>(n) - 1];
    const double next = report.residual_sequence[static_cast<std::size_t>(n)];
    if (next > 0.99 * prev + 1e-300) decaying = false;
  }
  report.verdict = decaying ? RecurrenceVerdict::recurrent_numerical : RecurrenceVerdict::inconclusive;
  return report;
}

ERecurrenceResult e_recurrence_check(const QuantumChannelMap& te, const Projection& e, int N,
                                     double tol) {
  const int d = te.out_dim();
  require_projection_dim(e, d, "e_recurrence_check");
  if (N < 1) throw ValidationError("e_recurrence_check: horizon must be >= 1, got " + std::to_string(N));
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const ComplexMatrix perp = e.complement();

  const double norm_trace = te.apply(kron(e.matrix(), id)).trace().real();
  if (norm_trace <= eq_tol)
    throw DegenerateTrace("e_recurrence_check: Tr(te(e (x) id)) = " + std::to_string(norm_trace) +
                          " is not positive");

  // Return words (e, e_perp, ..., e_perp, e): e at site 0, first re-occurrence at site n+1.
  // Their compressions are te(e (x) E0(stopping word n)), summed here through the inner chain.
  ComplexMatrix first_hit = te.apply(kron(e.matrix(), id));
  ComplexMatrix inner_sum = first_hit;
  for (int k = 1; k <= N; ++k) {
    first_hit = te.apply(kron(perp, first_hit));
    inner_sum += first_hit;
  }
  ComplexMatrix tail = ComplexMatrix::Identity(d, d);
  for (int n = 0; n <= N; ++n) tail = te.apply(kron(perp, tail));

  ERecurrenceResult result;
  result.lhs = te.apply(kron(e.matrix(), inner_sum)).trace().real() / norm_trace;
  result.residual = max_norm(te.apply(kron(e.matrix(), tail)));
  result.satisfied = std::abs(result.lhs - 1.0) <= tol && result.residual <= tol;
  return result;
}

AccessibilityResult accessibility(const QuantumChannelMap& te, const Projection& e,
                                  const Projection& f, int M) {
  const int d = te.out_dim();
  require_projection_dim(e, d, "accessibility");
  require_projection_dim(f, d, "accessibility");
  if (M < 1) throw ValidationError("accessibility: horizon must be >= 1, got " + std::to_string(M));
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);

  AccessibilityResult result;
  ComplexMatrix inner = te.apply(kron(f.matrix(), id));
  for (int m = 1; m <= M; ++m) {
    if (max_norm(te.apply(kron(e.matrix(), inner))) > eq_tol) {
      result.accessible = true;
      result.first_m = m;
      return result;
    }
    inner = te.apply(kron(id, inner));
  }
  return result;
}

bool communicates(const QuantumChannelMap& te, const Projection& e, const Projection& f, int M) {
  return accessibility(te, e, f, M).accessible && accessibility(te, f, e, M).accessible;
}

}  // namespace behmm
