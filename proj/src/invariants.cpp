#include "trisect/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "trisect/error.hpp"

namespace trisect {

namespace {

Lattice system_lattice(const CurveSystem& c, const char* name) {
  try {
    return Lattice(c.classes);
  } catch (const Error&) {
    throw Error(ErrorKind::InvalidDiagram, std::string(name) + " classes are linearly dependent");
  }
}

}  // namespace

ChainComplexData build_chain_complex(const Diagram& d) {
  const SurfaceModel& s = d.surface;
  const int l = d.params.l();
  if (l > 0 && !d.arcs) {
    throw Error(ErrorKind::MissingArcs, "arcs are required when l = " + std::to_string(l) + " > 0");
  }
  const IntMatrix arcs = d.arcs ? d.arcs->classes : IntMatrix(s.rank, 0);

  ChainComplexData cx;
  cx.l1 = system_lattice(d.alpha, "alpha");
  cx.l2 = system_lattice(d.beta, "beta");
  cx.l3 = system_lattice(d.gamma, "gamma");
  cx.l13 = lattice_intersection(cx.l1, cx.l3);
  cx.l23 = lattice_intersection(cx.l2, cx.l3);

  auto coords = cx.l3.coordinates(hcat(cx.l13.basis(), cx.l23.basis()));
  if (!coords) throw std::logic_error("intersection not inside L3");
  cx.pi = std::move(*coords);

  cx.l1_rel = Lattice::from_generators(hcat(s.to_relative * d.alpha.classes, arcs));
  cx.l2_rel = Lattice::from_generators(hcat(s.to_relative * d.beta.classes, arcs));
  cx.arc_meet = lattice_intersection(cx.l1_rel, cx.l2_rel);
  cx.rho = cx.arc_meet.basis().transpose() * s.pairing * d.gamma.classes;

  const IntMatrix composite = cx.rho * cx.pi;
  if (!composite.is_zero()) {
    throw Error(ErrorKind::ChainConditionViolated, "rho * pi = " + composite.to_string());
  }
  return cx;
}

std::string HomologyGroup::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.emplace_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const Integer& t : torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

HomologyGroup cokernel(const IntMatrix& m) {
  const SmithDecomposition snf = smith_normal_form(m);
  HomologyGroup h;
  const auto factors = snf.invariant_factors();
  h.free_rank = m.rows() - factors.size();
  for (const Integer& f : factors)
    if (f != 1) h.torsion.push_back(f);
  return h;
}

HomologyResult homology(const ChainComplexData& cx) {
  HomologyResult out;
  out.groups[0].free_rank = 1;

  // H_1 = C_1 / im rho
  out.groups[1] = cokernel(cx.rho);

  // H_2 = ker rho / im pi, computed in a saturated basis of ker rho.
  const Lattice ker_rho = kernel_basis(cx.rho);
  auto image = ker_rho.coordinates(cx.pi);
  if (!image) throw Error(ErrorKind::ChainConditionViolated, "im pi not inside ker rho");
  out.groups[2] = cokernel(*image);

  // H_3 = ker pi, free.
  out.groups[3].free_rank = cx.c3() - rank(cx.pi);
  return out;
}

HomologyResult homology(const Diagram& d) {
  HomologyResult out = homology(build_chain_complex(d));
  for (int i = 1; i <= 3; ++i)
    if (!self_intersections(d.surface, d.system(i)).is_zero()) out.formal = true;
  return out;
}

// ---------------------------------------------------------------------------
// Linking matrix

IntMatrix linking_correction(const TrisectionParams& tp) {
  const auto n = static_cast<std::size_t>(tp.curves());
  const auto l = static_cast<std::size_t>(tp.l());
  IntMatrix r(n + l, n + l);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = 1;
  for (int h = 1; h <= tp.p; ++h) {
    const std::size_t first = n + static_cast<std::size_t>(tp.b - 1 + 2 * h - 2);
    r(first + 1, first) = 1;
  }
  return r;
}

bool symmetric_outside_leading_block(const IntMatrix& m, std::size_t n) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if ((i >= n || j >= n) && m(i, j) != m(j, i)) return false;
  return true;
}

LinkingMatrix linking_matrix(const Diagram& d) {
  const SurfaceModel& s = d.surface;
  const int l = d.params.l();
  if (l > 0 && !d.arcs) throw Error(ErrorKind::MissingArcs, "linking matrix needs arcs");
  const StandardConfiguration config = standard_configuration(s, d.params.p);
  if (!(d.alpha == config.alpha) || !(d.beta == config.beta) ||
      (l > 0 && !(*d.arcs == config.arcs))) {
    throw Error(ErrorKind::NotStandardPosition,
                "alpha, beta and arcs must be the canonical standard configuration");
  }
  const IntMatrix left = hcat(pairing_matrix(s, d.gamma, d.beta), pairing_matrix(s, d.gamma, config.arcs));
  const IntMatrix right = vcat(pairing_matrix(s, d.alpha, d.gamma), pairing_matrix(s, config.arcs, d.gamma));

  LinkingMatrix out;
  out.matrix = left * linking_correction(d.params) * right;
  out.symmetric = out.matrix.is_symmetric();
  out.symmetric_outside_arc_block =
      symmetric_outside_leading_block(out.matrix, static_cast<std::size_t>(l));
  return out;
}

// ---------------------------------------------------------------------------
// Form invariants

FormInvariants form_invariants(const IntMatrix& q) {
  if (!q.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "form must be symmetric");
  const std::size_t n = q.rows();

  FormInvariants out;
  out.determinant = determinant(q);
  for (std::size_t i = 0; i < n; ++i)
    if (q(i, i) % 2 != 0) out.even = false;

  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = q(i, j);

  auto swap_index = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    std::swap(a[x], a[y]);
    for (auto& row : a) std::swap(row[x], row[y]);
  };

  long positive = 0, negative = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = k; i < n && !pivot; ++i)
      if (a[i][i] != 0) pivot = i;
    if (!pivot) {
      // Zero diagonal: x_i += x_j creates the diagonal entry 2 a_ij.
      for (std::size_t i = k; i < n && !pivot; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
            for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
            pivot = i;
            break;
          }
    }
    if (!pivot) break;
    swap_index(k, *pivot);
    const mpq_class d = a[k][k];
    (d > 0 ? positive : negative)++;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const mpq_class f = a[i][k] / d;
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (std::size_t i = k + 1; i < n; ++i) a[i][k] = a[k][i] = 0;
  }
  out.rank = static_cast<std::size_t>(positive + negative);
  out.signature = positive - negative;
  return out;
}

}  // namespace trisect
