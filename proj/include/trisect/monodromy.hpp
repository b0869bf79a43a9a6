#pragma once

// Homological shadow of the arc-sliding monodromy algorithm.  Arcs are carried
// around the cycle alpha -> beta -> gamma -> alpha; at step i each arc moves by
// a combination of curves kappa^i chosen so it becomes disjoint (algebraically)
// from the next cut system.

#include <array>
#include <optional>

#include "trisect/diagram.hpp"
#include "trisect/intlin.hpp"

namespace trisect {

struct QuotientBases {
  CurveSystem kappa;   ///< lifts a basis of L_i / (L_i n L_j)
  CurveSystem lambda;  ///< lifts a basis of L_j / (L_i n L_j)
};

/// Throws NotDirectSummand when L_i n L_j is not a direct summand of L_i or L_j.
QuotientBases quotient_bases(const Lattice& li, const Lattice& lj);

struct ArcStep {
  IntMatrix r;     ///< R^i = -(a^i . lambda)(kappa . lambda)^{-1}
  ArcSystem next;  ///< a^{i+1}_j = a^i_j + sum_n R_jn kappa_n
};

/// Throws NotUnimodular when kappa . lambda has no inverse over Z.
ArcStep arc_step(const SurfaceModel& s, const ArcSystem& arcs, const QuotientBases& qb);

struct MonodromyResult {
  std::array<QuotientBases, 3> bases;
  std::array<IntMatrix, 3> r;
  std::array<ArcSystem, 4> arc_history;  ///< a^1 .. a^4
  IntMatrix displacement;                ///< column j: [a^4_j - a^1_j] in H_1(S)
  std::optional<IntMatrix> a_psi;        ///< only in standardized position
};

/// True when alpha, beta, arcs and eta are exactly the standard configuration.
bool in_standard_position(const Diagram& d);

/// Runs the three steps; in standardized position also writes each
/// displacement as sum_j c_ji (alpha_j + eta_j) and sets a_psi = c.
MonodromyResult monodromy_action(const Diagram& d);

}  // namespace trisect
