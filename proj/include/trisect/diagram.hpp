#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trisect/intlin.hpp"
#include "trisect/surface.hpp"

namespace trisect {

struct TrisectionParams {
  int g = 0;  ///< genus of the central surface
  int b = 1;  ///< boundary components
  int p = 0;  ///< page genus
  std::array<int, 3> k{0, 0, 0};

  int l() const { return 2 * p + b - 1; }
  /// Number of curves in each cut system.
  int curves() const { return g - p; }
  /// d_i = 1 for i <= l, else 0, for i = 1..g-p.
  std::vector<int> d() const;
  /// Empty when g >= p >= 0, b >= 1 and g+p+b-1 >= k_i >= l; otherwise the first violation.
  std::string violation() const;

  friend bool operator==(const TrisectionParams&, const TrisectionParams&) = default;
};

struct Diagram {
  TrisectionParams params;
  SurfaceModel surface;
  CurveSystem alpha;
  CurveSystem beta;
  CurveSystem gamma;
  std::optional<ArcSystem> arcs;
  std::optional<CurveSystem> eta;

  /// Cut systems indexed cyclically: 1 = alpha, 2 = beta, 3 = gamma, 4 = alpha.
  const CurveSystem& system(int i) const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.params == b.params && a.surface == b.surface && a.alpha == b.alpha &&
           a.beta == b.beta && a.gamma == b.gamma && a.arcs == b.arcs && a.eta == b.eta;
  }
};

/// Assembles a diagram, checking shapes.  Parameter constraints involving k are
/// left to validate(); g, b, p must describe a surface and cut systems.
Diagram make_diagram(const TrisectionParams& params, IntMatrix alpha, IntMatrix beta,
                     IntMatrix gamma, std::optional<IntMatrix> arcs = std::nullopt,
                     std::optional<IntMatrix> eta = std::nullopt);

enum class CheckStatus { Pass, Fail, NotApplicable };
std::string_view to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::optional<IntMatrix> witness;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  /// Remarks that do not affect the verdict.
  std::vector<std::string> notes;

  /// No check failed.
  bool passed() const;
  const CheckResult* find(std::string_view name) const;
};

/// Homologically necessary conditions for a relative trisection diagram.  A
/// passing report means no obstruction was found, not that the curves bound a
/// trisection.
ValidationReport validate(const Diagram& d);

/// Zero exactly when the classes of the system pairwise intersect zero times
/// algebraically, as disjoint curves must.
IntMatrix self_intersections(const SurfaceModel& s, const CurveSystem& c);

/// Diagram in normal form: standard (alpha, beta, arcs, eta) and
/// gamma_i = -alpha_i - sum_j Qt_ji beta_j - d_i eta_i with Qt = B + Q + 0^(k-l).
Diagram synthesize_diagram(const IntMatrix& q, const IntMatrix& b_block, int k, int p,
                           int boundary);

/// Gamma system of the normal form for a given Qt on the standard configuration.
CurveSystem normal_form_gamma(const SurfaceModel& s, const StandardConfiguration& config,
                              const IntMatrix& qtilde, int l);

Diagram parse_diagram(std::string_view text);
std::string serialize_diagram(const Diagram& d);

}  // namespace trisect
