#pragma once

// Algebraic standardization: unimodular basis changes of the cut systems (the
// homological shadow of handle slides) and symplectic maps of the surface that
// bring a diagram to the normal form
//   gamma_i = -alpha_i - sum_j Qt_ji beta_j - d_i eta_i,   Qt = B + Q + 0^(k-l).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trisect/diagram.hpp"
#include "trisect/intlin.hpp"
#include "trisect/invariants.hpp"

namespace trisect {

/// alpha/beta/gamma: the system X becomes X * U.  surface: every class x
/// becomes Phi * x (arcs transform by the induced map on relative classes).
enum class RecordTarget { Alpha, Beta, Gamma, Surface };

std::string_view to_string(RecordTarget target);

struct RecordStep {
  RecordTarget target = RecordTarget::Gamma;
  IntMatrix matrix;
  std::string label;
};

struct TransformationRecord {
  std::vector<RecordStep> steps;

  /// Throws NotUnimodular unless |det m| = 1.
  void push(RecordTarget target, IntMatrix m, std::string label);
  bool empty() const { return steps.empty(); }

  /// Product in application order: U_1 U_2 ... for systems, Phi_k ... Phi_1
  /// for the surface.  Identity of size dim when the target never occurs.
  IntMatrix composite(RecordTarget target, std::size_t dim) const;

  /// alpha -> Phi alpha U_alpha and likewise for beta, gamma; arcs and eta are
  /// carried by Phi.  Throws DimensionMismatch if the record does not fit d.
  Diagram apply(const Diagram& d) const;
};

/// Action of a surface map Phi (on absolute classes) on relative classes: the
/// unique map preserving the pairing, P^{-T} Phi^{-T} P^T.
IntMatrix relative_action(const SurfaceModel& s, const IntMatrix& phi);

struct SplitResult {
  IntMatrix U;
  IntMatrix M1;
  IntMatrix M2;
};

/// U = [[I, -b], [0, I]] with b = M1^{-1} M[0..n1, n1..] so that
/// U^T M U = M1 + M2.  Needs M[i][j] = M[j][i] whenever i < n1 or j < n1.
SplitResult orthogonal_split(const IntMatrix& m, std::size_t n1);

struct StandardizationChecks {
  /// |det Q| != 1: the orthogonal split was skipped, Qtilde is alpha . gamma
  /// after the kernel split and B is its leading l x l block.
  bool partial = false;
  bool pairing_equals_qtilde = false;
  bool gamma_normal_form = false;
  bool kernel_split_symmetry = false;
  bool record_reproduces = false;
  bool all_unimodular = false;
  /// B * A_psi = I; unset for partial results.
  std::optional<bool> monodromy_inverse;
};

struct StandardizationResult {
  Diagram standardized;
  IntMatrix b_block;
  IntMatrix q;
  IntMatrix qtilde;
  TransformationRecord record;
  std::size_t b2 = 0;
  /// alpha . gamma right after the kernel split.
  IntMatrix kernel_split;
  std::optional<IntMatrix> a_psi;
  std::optional<FormInvariants> form;
  StandardizationChecks checks;
  std::vector<std::string> notes;
};

/// Errors: InvalidDiagram (validation fails), H1NotZero, NotNormalizable,
/// NotDirectSummand, SymmetryViolated.
StandardizationResult standardize(const Diagram& d);

enum class Verdict { Equivalent, NotEquivalent, Inconclusive };

std::string_view to_string(Verdict v);

struct ComparisonReport {
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
  bool params_equal = false;
  std::optional<bool> monodromy_equal;
  std::optional<FormInvariants> form_x;
  std::optional<FormInvariants> form_y;
  /// U with U^T Q_Y U = Q_X when one was found.
  std::optional<IntMatrix> congruence;
  /// Common standardized gamma class matrix.
  std::optional<IntMatrix> certificate;
  std::vector<std::string> notes;
};

/// "equivalent", "not equivalent: <reason>" or "inconclusive: <reason>".
std::string verdict_line(const ComparisonReport& r);

/// U with entries in [-bound, bound], |det U| = 1 and U^T b U = a, if any.
/// Intended for small forms; returns nullopt for rank > max_rank.
std::optional<IntMatrix> find_congruence(const IntMatrix& a, const IntMatrix& b, int bound = 3,
                                         std::size_t max_rank = 4);

ComparisonReport torelli_compare(const Diagram& x, const Diagram& y);

/// True iff the recorded surface map fixes every alpha, beta, eta and arc class
/// of d's standard configuration.  Throws DimensionMismatch if the record does
/// not fit d.
bool is_homologically_torelli(const TransformationRecord& record, const Diagram& d);

}  // namespace trisect
