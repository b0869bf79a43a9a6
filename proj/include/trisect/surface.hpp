#pragma once

// Homological model of the compact oriented surface of genus g with b
// boundary components.
//
// Absolute basis of H_1:           A_1, B_1, ..., A_g, B_g, D_1, ..., D_{b-1}
// Relative basis of H_1(S, dS):    A'_1, B'_1, ..., A'_g, B'_g, T_1, ..., T_{b-1}
//
// D_j is the class of the j-th boundary-parallel curve and T_j an arc running
// from boundary j to boundary j+1.  The pairing between relative and absolute
// classes is
//   <A'_i, B_j> = -delta_ij,  <B'_i, A_j> = delta_ij,
//   <T_j, D_m>  = delta_jm - delta_{j+1,m},
// with every other basis pairing zero.  The map to relative classes sends
// A_i -> A'_i, B_i -> B'_i and D_j -> 0.

#include <cstddef>
#include <utility>

#include "trisect/intlin.hpp"

namespace trisect {

struct SurfaceModel {
  int genus = 0;
  int boundary = 1;
  std::size_t rank = 0;  ///< 2g + b - 1
  IntMatrix pairing;      ///< rows: relative basis, columns: absolute basis
  IntMatrix to_relative;  ///< H_1(S) -> H_1(S, dS)

  std::size_t index_a(int i) const { return 2 * static_cast<std::size_t>(i - 1); }
  std::size_t index_b(int i) const { return 2 * static_cast<std::size_t>(i - 1) + 1; }
  std::size_t index_boundary(int j) const {
    return 2 * static_cast<std::size_t>(genus) + static_cast<std::size_t>(j - 1);
  }

  /// Unit vector of the given basis index (absolute or relative, same indexing).
  IntMatrix unit(std::size_t index) const;

  friend bool operator==(const SurfaceModel& a, const SurfaceModel& b) {
    return a.genus == b.genus && a.boundary == b.boundary;
  }
};

/// Curve classes in H_1(S), one class per column.
struct CurveSystem {
  IntMatrix classes;
  std::size_t size() const { return classes.cols(); }
  friend bool operator==(const CurveSystem&, const CurveSystem&) = default;
};

/// Arc classes in H_1(S, dS), one class per column.
struct ArcSystem {
  IntMatrix classes;
  std::size_t size() const { return classes.cols(); }
  friend bool operator==(const ArcSystem&, const ArcSystem&) = default;
};

/// Arcs dual to eta, alpha/beta disjoint from both, together a basis of H_1(S).
struct StandardConfiguration {
  CurveSystem alpha;
  CurveSystem beta;
  ArcSystem arcs;
  CurveSystem eta;
};

SurfaceModel build_surface_model(int genus, int boundary);

StandardConfiguration standard_configuration(const SurfaceModel& surface, int page_genus);
StandardConfiguration standard_configuration(int genus, int page_genus, int boundary);

/// (i, j) entry <mu_i, nu_j>.
IntMatrix pairing_matrix(const SurfaceModel& surface, const ArcSystem& mu, const CurveSystem& nu);
/// Curves on the left are first pushed to relative classes.
IntMatrix pairing_matrix(const SurfaceModel& surface, const CurveSystem& mu, const CurveSystem& nu);
/// Curve against arc: <mu_i, nu_j> = -<nu_j, mu_i>.
IntMatrix pairing_matrix(const SurfaceModel& surface, const CurveSystem& mu, const ArcSystem& nu);

/// Homological shadow of the standard sutured diagram (delta^k, epsilon^k).
std::pair<CurveSystem, CurveSystem> standard_sutured_pattern(int genus, int page_genus,
                                                             int boundary, int k);

}  // namespace trisect
