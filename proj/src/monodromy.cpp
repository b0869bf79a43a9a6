#include "trisect/monodromy.hpp"

#include "trisect/error.hpp"

namespace trisect {

QuotientBases quotient_bases(const Lattice& li, const Lattice& lj) {
  const Lattice meet = lattice_intersection(li, lj);
  return {CurveSystem{direct_complement(meet, li)}, CurveSystem{direct_complement(meet, lj)}};
}

ArcStep arc_step(const SurfaceModel& s, const ArcSystem& arcs, const QuotientBases& qb) {
  const IntMatrix kl = pairing_matrix(s, qb.kappa, qb.lambda);
  if (!kl.is_square()) {
    throw Error(ErrorKind::NotUnimodular, "kappa . lambda is not square");
  }
  const IntMatrix al = pairing_matrix(s, arcs, qb.lambda);
  ArcStep out;
  out.r = -(al * unimodular_inverse(kl));
  out.next.classes = arcs.classes + s.to_relative * qb.kappa.classes * out.r.transpose();
  return out;
}

bool in_standard_position(const Diagram& d) {
  if (!d.arcs || !d.eta) return false;
  const StandardConfiguration c = standard_configuration(d.surface, d.params.p);
  return d.alpha == c.alpha && d.beta == c.beta && *d.arcs == c.arcs && *d.eta == c.eta;
}

MonodromyResult monodromy_action(const Diagram& d) {
  const SurfaceModel& s = d.surface;
  const int l = d.params.l();
  if (l > 0 && !d.arcs) throw Error(ErrorKind::MissingArcs, "monodromy needs arcs");

  MonodromyResult out;
  out.arc_history[0] = d.arcs ? *d.arcs : ArcSystem{IntMatrix(s.rank, 0)};
  out.displacement = IntMatrix(s.rank, out.arc_history[0].size());

  for (int i = 0; i < 3; ++i) {
    const Lattice li(d.system(i + 1).classes);
    const Lattice lj(d.system(i + 2).classes);
    out.bases[i] = quotient_bases(li, lj);
    ArcStep step = arc_step(s, out.arc_history[i], out.bases[i]);
    out.displacement = out.displacement + out.bases[i].kappa.classes * step.r.transpose();
    out.r[i] = std::move(step.r);
    out.arc_history[i + 1] = std::move(step.next);
  }

  if (in_standard_position(d)) {
    const auto n = static_cast<std::size_t>(d.params.curves());
    const auto ln = static_cast<std::size_t>(l);
    if (ln > n) throw Error(ErrorKind::DecompositionFailed, "fewer curves than arcs");
    const IntMatrix basis = d.alpha.classes.columns(0, ln) + d.eta->classes;
    auto coeffs = solve_exact(basis, out.displacement);
    if (!coeffs) {
      throw Error(ErrorKind::DecompositionFailed,
                  "displacement classes are not in the span of alpha_j + eta_j");
    }
    out.a_psi = std::move(*coeffs);
  }
  return out;
}

}  // namespace trisect
