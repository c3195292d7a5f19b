#pragma once

#include <optional>
#include <vector>

#include "behmm/channel.hpp"
#include "behmm/joint_expectation.hpp"
#include "behmm/model.hpp"
#include "behmm/word.hpp"

namespace behmm {

// A projection event together with the truncation horizon for its stopping-time sums.
struct StoppingTimeSpec {
  Projection e;
  int horizon = 20;
};

// First occurrence at step k: the word (e_perp, ..., e_perp, e) with k complement factors.
HiddenWord stopping_time_word(const Projection& e, int k);

// No occurrence through step n: the word of n+1 complement factors.
HiddenWord tail_word(const Projection& e, int n);

struct AccessibilityScan {
  bool accessible = false;
  // ||E0(tail_word(e, n))||_max for n = 0..N.
  std::vector<double> residual_norms;
};

// The event e almost surely occurs iff the tail norms vanish; certified here by the
// final norm falling below tol and the sequence being non-increasing over the last
// ceil(N/2) steps. Requires a unital CP channel.
AccessibilityScan complete_accessibility(const QuantumChannelMap& te, const Projection& e, int N,
                                         double tol);

enum class RecurrenceVerdict { recurrent_certified, recurrent_numerical, inconclusive, undefined };

const char* to_string(RecurrenceVerdict v);

struct RecurrenceReport {
  double q = 0.0;            // sum_{ij} |e_perp_{ij}|
  double q_threshold = 0.0;  // 1/d
  bool bound_certified = false;
  // r_n = |phi(e at site 0, then n complement factors)| for n = 1..N.
  std::vector<double> residual_sequence;
  // Largest excess of r_n over the certified bound d^2 (dq)^(n-1); 0 when not certified.
  double bound_violation = 0.0;
  // Geometric tail estimate d^2 (dq)^N / (1 - dq), present only when certified.
  std::optional<double> tail_bound;
  double partition_defect = 0.0;
  double phi_e = 0.0;
  RecurrenceVerdict verdict = RecurrenceVerdict::inconclusive;
};

// Recurrence diagnostics for the underlying (hidden-only) process of the model.
// Throws UndefinedRecurrence when phi(e at site 0) vanishes within eq_tol.
RecurrenceReport phi_recurrence_report(const HiddenModel& model, const Projection& e, int N);

struct ERecurrenceResult {
  // Tr of the summed compressions of the return words (e, e_perp^k, e), k = 0..N,
  // normalized by Tr(te(e (x) id)).
  double lhs = 0.0;
  double residual = 0.0;  // ||te(e (x) E0(tail_word(e, N)))||_max
  bool satisfied = false;
};

// Truncated normalized return sum; satisfied iff |lhs - 1| <= tol and the tail
// residual is below tol. Throws DegenerateTrace when Tr(te(e (x) id)) <= eq_tol.
ERecurrenceResult e_recurrence_check(const QuantumChannelMap& te, const Projection& e, int N,
                                     double tol = 1e-8);

struct AccessibilityResult {
  bool accessible = false;
  std::optional<int> first_m;
};

// Smallest m in 1..M with ||E0((e, id, ..., id, f))||_max > eq_tol, the word
// holding m-1 identity factors between e and f.
AccessibilityResult accessibility(const QuantumChannelMap& te, const Projection& e,
                                  const Projection& f, int M);

bool communicates(const QuantumChannelMap& te, const Projection& e, const Projection& f, int M);

}  // namespace behmm
