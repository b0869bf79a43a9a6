#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "trisect/diagram.hpp"
#include "trisect/intlin.hpp"

namespace trisect {

/// The complex
///   0 -> (L1 n L3) + (L2 n L3) --pi--> L3 --rho--> Hom(L1rel n L2rel, Z) --0--> Z -> 0
/// with pi(x, y) = x + y and rho(x)(y) = <y, x>.  C_2 is expressed in the gamma
/// basis, C_1 in the basis dual to the computed basis of L1rel n L2rel.
struct ChainComplexData {
  Lattice l1, l2, l3;
  Lattice l1_rel, l2_rel;
  Lattice l13, l23;    ///< C_3 = l13 + l23
  Lattice arc_meet;    ///< L1rel n L2rel, relative classes
  IntMatrix pi;        ///< (g-p) x (rank l13 + rank l23)
  IntMatrix rho;       ///< rank arc_meet x (g-p)

  std::size_t c3() const { return pi.cols(); }
  std::size_t c2() const { return pi.rows(); }
  std::size_t c1() const { return rho.rows(); }
};

ChainComplexData build_chain_complex(const Diagram& d);

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  ///< invariant factors > 1

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2 + Z/3", ...
  std::string to_string() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyResult {
  std::array<HomologyGroup, 5> groups;
  /// Some cut system fails to be isotropic, so the diagram cannot be realized
  /// by curves; the groups are those of the formal complex.
  bool formal = false;

  std::size_t b2() const { return groups[2].free_rank; }
  friend bool operator==(const HomologyResult& a, const HomologyResult& b) {
    return a.groups == b.groups;
  }
};

HomologyResult homology(const Diagram& d);
HomologyResult homology(const ChainComplexData& complex);

/// Cokernel structure of a map between free modules.
HomologyGroup cokernel(const IntMatrix& m);

struct LinkingMatrix {
  IntMatrix matrix;
  bool symmetric = false;
  /// Entries (i, j) with i > l or j > l agree with (j, i).
  bool symmetric_outside_arc_block = false;
};

/// R^g_{p,b} for the arc ordering of the standard configuration: identity on
/// beta, a [[0,0],[1,0]] block per page handle, zero on boundary arcs.
IntMatrix linking_correction(const TrisectionParams& params);

/// (gamma . (beta, a)) R ((alpha, a) . gamma); requires alpha, beta, arcs in
/// the canonical standard configuration.
LinkingMatrix linking_matrix(const Diagram& d);

/// True when entries outside the leading n x n block are symmetric.
bool symmetric_outside_leading_block(const IntMatrix& m, std::size_t n);

struct FormInvariants {
  std::size_t rank = 0;
  long signature = 0;
  bool even = true;
  Integer determinant = 1;

  bool definite() const {
    return static_cast<std::size_t>(signature < 0 ? -signature : signature) == rank;
  }
  friend bool operator==(const FormInvariants&, const FormInvariants&) = default;
};

/// Rank, signature by exact rational diagonalization, parity, determinant.
FormInvariants form_invariants(const IntMatrix& q);

}  // namespace trisect
