#include "trisect/standardize.hpp"

#include <algorithm>
#include <functional>

#include "trisect/error.hpp"
#include "trisect/monodromy.hpp"

namespace trisect {

std::string_view to_string(RecordTarget target) {
  switch (target) {
    case RecordTarget::Alpha: return "alpha";
    case RecordTarget::Beta: return "beta";
    case RecordTarget::Gamma: return "gamma";
    case RecordTarget::Surface: return "surface";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "equivalent";
    case Verdict::NotEquivalent: return "not equivalent";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// TransformationRecord

void TransformationRecord::push(RecordTarget target, IntMatrix m, std::string label) {
  if (!m.is_square() || abs(determinant(m)) != 1) {
    throw Error(ErrorKind::NotUnimodular, std::string(to_string(target)) + " change " +
                                              m.to_string() + " is not unimodular");
  }
  steps.push_back({target, std::move(m), std::move(label)});
}

IntMatrix TransformationRecord::composite(RecordTarget target, std::size_t dim) const {
  IntMatrix out = IntMatrix::identity(dim);
  for (const RecordStep& step : steps) {
    if (step.target != target) continue;
    if (step.matrix.rows() != dim) {
      throw Error(ErrorKind::DimensionMismatch,
                  std::string(to_string(target)) + " change has size " +
                      std::to_string(step.matrix.rows()) + ", expected " + std::to_string(dim));
    }
    out = target == RecordTarget::Surface ? step.matrix * out : out * step.matrix;
  }
  return out;
}

IntMatrix relative_action(const SurfaceModel& s, const IntMatrix& phi) {
  const IntMatrix pt_inv = unimodular_inverse(s.pairing.transpose());
  return pt_inv * unimodular_inverse(phi).transpose() * s.pairing.transpose();
}

Diagram TransformationRecord::apply(const Diagram& d) const {
  const auto n = static_cast<std::size_t>(d.params.curves());
  const IntMatrix phi = composite(RecordTarget::Surface, d.surface.rank);
  Diagram out = d;
  out.alpha.classes = phi * d.alpha.classes * composite(RecordTarget::Alpha, n);
  out.beta.classes = phi * d.beta.classes * composite(RecordTarget::Beta, n);
  out.gamma.classes = phi * d.gamma.classes * composite(RecordTarget::Gamma, n);
  if (d.arcs) out.arcs->classes = relative_action(d.surface, phi) * d.arcs->classes;
  if (d.eta) out.eta->classes = phi * d.eta->classes;
  return out;
}

// ---------------------------------------------------------------------------
// Orthogonal splitting

SplitResult orthogonal_split(const IntMatrix& m, std::size_t n1) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "form must be square");
  const std::size_t n = m.rows();
  if (n1 > n) throw Error(ErrorKind::DimensionMismatch, "leading block larger than form");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((i < n1 || j < n1) && m(i, j) != m(j, i)) {
        throw Error(ErrorKind::SymmetryViolated, "entry (" + std::to_string(i) + ", " +
                                                     std::to_string(j) + ") differs from its transpose");
      }
  const std::size_t n2 = n - n1;

  SplitResult out;
  out.M1 = m.block(0, 0, n1, n1);
  const IntMatrix inv = unimodular_inverse(out.M1);
  const IntMatrix b = inv * m.block(0, n1, n1, n2);

  out.U = IntMatrix::identity(n);
  out.U.set_block(0, n1, -b);
  const IntMatrix split = out.U.transpose() * m * out.U;
  out.M2 = split.block(n1, n1, n2, n2);
  if (!(split == direct_sum(out.M1, out.M2))) {
    throw std::logic_error("orthogonal_split: congruence check failed");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Standardization

namespace {

bool lemma_symmetry(const IntMatrix& m, std::size_t l, std::size_t b2) {
  const std::size_t n = m.rows();
  for (std::size_t i = l; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (m(j, i) != m(i, j)) return false;
      if (i >= l + b2 && m(j, i) != 0) return false;
    }
  return true;
}

// Surface map acting on the block spanned by A_1, B_1, ..., A_n, B_n and as the
// identity elsewhere; column index_a(i) is the image of A_i.
IntMatrix handle_block_map(const SurfaceModel& s, std::size_t n, const IntMatrix& images_a,
                           const IntMatrix& images_b) {
  IntMatrix f = IntMatrix::identity(s.rank);
  for (std::size_t i = 1; i <= n; ++i) {
    f.set_block(0, s.index_a(static_cast<int>(i)), images_a.column(i - 1));
    f.set_block(0, s.index_b(static_cast<int>(i)), images_b.column(i - 1));
  }
  return f;
}

}  // namespace

StandardizationResult standardize(const Diagram& d) {
  const ValidationReport report = validate(d);
  if (!report.passed()) {
    std::string failed;
    for (const CheckResult& c : report.checks)
      if (c.status == CheckStatus::Fail) failed += (failed.empty() ? "" : ", ") + c.name;
    throw Error(ErrorKind::InvalidDiagram, "validation failed: " + failed);
  }
  const HomologyResult h = homology(d);
  if (!h.groups[1].is_zero()) {
    throw Error(ErrorKind::H1NotZero, "H_1 = " + h.groups[1].to_string());
  }

  const SurfaceModel& s = d.surface;
  const TrisectionParams& tp = d.params;
  const auto n = static_cast<std::size_t>(tp.curves());
  const auto l = static_cast<std::size_t>(tp.l());
  const StandardConfiguration cfg = standard_configuration(s, tp.p);

  StandardizationResult out;
  TransformationRecord& rec = out.record;

  // (0) alpha, beta to A, B by a surface map; then gamma . beta = I.
  for (std::size_t r = 2 * n; r < s.rank; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (d.alpha.classes(r, c) != 0 || d.beta.classes(r, c) != 0) {
        throw Error(ErrorKind::NotNormalizable,
                    "alpha and beta must avoid the page handles and boundary classes");
      }
  IntMatrix w;
  try {
    w = unimodular_inverse(pairing_matrix(s, d.beta, d.alpha));
  } catch (const Error&) {
    throw Error(ErrorKind::NotNormalizable, "beta . alpha is not unimodular");
  }
  const IntMatrix alpha_w = d.alpha.classes * w;
  IntMatrix phi0;
  try {
    phi0 = unimodular_inverse(handle_block_map(s, n, alpha_w, d.beta.classes));
  } catch (const Error&) {
    throw Error(ErrorKind::NotNormalizable, "alpha and beta do not form a basis of their handles");
  }
  if (!(relative_action(s, phi0) * s.to_relative == s.to_relative * phi0)) {
    throw Error(ErrorKind::NotNormalizable, "alpha and beta are not a symplectic pair");
  }
  if (!w.is_identity()) rec.push(RecordTarget::Alpha, w, "dualize alpha against beta");
  if (!phi0.is_identity()) rec.push(RecordTarget::Surface, phi0, "move alpha, beta to A, B");

  const CurveSystem gamma1{phi0 * d.gamma.classes};
  IntMatrix u0;
  try {
    u0 = unimodular_inverse(pairing_matrix(s, gamma1, cfg.beta)).transpose();
  } catch (const Error&) {
    throw Error(ErrorKind::NotNormalizable, "gamma . beta is not unimodular");
  }
  if (!u0.is_identity()) rec.push(RecordTarget::Gamma, u0, "normalize gamma . beta = I");
  const CurveSystem gamma2{gamma1.classes * u0};

  const IntMatrix m = pairing_matrix(s, cfg.alpha, gamma2);
  const IntMatrix sm = pairing_matrix(s, cfg.arcs, gamma2);
  if (!(gamma2.classes == -cfg.alpha.classes - cfg.beta.classes * m + cfg.eta.classes * sm)) {
    throw Error(ErrorKind::NotNormalizable, "gamma is not determined by its pairings");
  }

  // (1) rho sends the first l columns to minus the dual arc basis, the rest to 0.
  IntMatrix u1 = IntMatrix::identity(n);
  const IntMatrix target_s = hcat(-IntMatrix::identity(l), IntMatrix(l, n - l));
  if (!(sm == target_s)) {
    const HermiteDecomposition hd = hermite_columns(sm);
    if (hd.rank() != l || !(hd.H == hcat(IntMatrix::identity(l), IntMatrix(l, n - l)))) {
      throw Error(ErrorKind::H1NotZero, "rho is not onto");
    }
    u1 = hd.V * direct_sum(-IntMatrix::identity(l), IntMatrix::identity(n - l));
    rec.push(RecordTarget::Gamma, u1, "split off the arc duals");
  }

  // (2) kernel columns: lift of H_2 first, then a basis of L1 n L3.
  const IntMatrix mu1 = m * u1;
  const Lattice meet = kernel_basis(mu1.columns(l, n - l));
  const Lattice kernel_all = Lattice::full(n - l);
  const IntMatrix complement = direct_complement(meet, kernel_all);
  out.b2 = complement.cols();
  const IntMatrix kernel_change = hcat(complement, meet.basis());
  IntMatrix u2 = IntMatrix::identity(n);
  if (!kernel_change.is_identity()) {
    u2 = direct_sum(IntMatrix::identity(l), kernel_change);
    rec.push(RecordTarget::Gamma, u2, "separate H_2 from L1 n L3");
  }
  IntMatrix u = u1 * u2;
  out.kernel_split = u.transpose() * m * u;
  out.checks.kernel_split_symmetry = lemma_symmetry(out.kernel_split, l, out.b2);
  if (!out.checks.kernel_split_symmetry) {
    throw Error(ErrorKind::SymmetryViolated,
                "alpha . gamma after the kernel split is " + out.kernel_split.to_string());
  }

  // (3) orthogonal split of the H_2 block off the arc block.
  const std::size_t lead = l + out.b2;
  const IntMatrix qblock = out.kernel_split.block(l, l, out.b2, out.b2);
  out.checks.partial = abs(determinant(qblock)) != 1;
  if (out.checks.partial) {
    out.notes.push_back("Q = " + qblock.to_string() +
                        " is not unimodular; stopped before the orthogonal split");
    out.qtilde = out.kernel_split;
  } else {
    IntMatrix perm(lead, lead);  // new position i holds old index perm_of(i)
    for (std::size_t i = 0; i < out.b2; ++i) perm(l + i, i) = 1;
    for (std::size_t i = 0; i < l; ++i) perm(i, out.b2 + i) = 1;
    const IntMatrix leading = out.kernel_split.block(0, 0, lead, lead);
    const SplitResult split = orthogonal_split(perm.transpose() * leading * perm, out.b2);
    const IntMatrix u3_lead = perm * split.U * perm.transpose();
    if (!u3_lead.is_identity()) {
      const IntMatrix u3 = direct_sum(u3_lead, IntMatrix::identity(n - lead));
      rec.push(RecordTarget::Gamma, u3, "orthogonal split");
      u = u * u3;
    }
    out.qtilde = u.transpose() * m * u;
  }
  out.b_block = out.qtilde.block(0, 0, l, l);
  out.q = out.qtilde.block(l, l, out.b2, out.b2);
  if (out.q.is_symmetric()) out.form = form_invariants(out.q);

  // Compensate beta and alpha so they return to B and A.
  const IntMatrix u_inv = unimodular_inverse(u);
  if (!u.is_identity()) {
    rec.push(RecordTarget::Beta, u_inv.transpose(), "keep gamma . beta = I");
    rec.push(RecordTarget::Alpha, u, "keep beta . alpha = I");
    const IntMatrix phi1 = handle_block_map(s, n, cfg.alpha.classes * u_inv,
                                            cfg.beta.classes * u.transpose());
    rec.push(RecordTarget::Surface, phi1, "restore the standard alpha, beta");
  }

  Diagram& st = out.standardized;
  st = d;
  st.alpha = cfg.alpha;
  st.beta = cfg.beta;
  st.arcs = cfg.arcs;
  st.eta = cfg.eta;
  st.gamma.classes = rec.composite(RecordTarget::Surface, s.rank) * d.gamma.classes *
                     rec.composite(RecordTarget::Gamma, n);

  out.checks.all_unimodular = std::all_of(rec.steps.begin(), rec.steps.end(), [](const RecordStep& r) {
    return abs(determinant(r.matrix)) == 1;
  });
  out.checks.pairing_equals_qtilde = pairing_matrix(s, st.alpha, st.gamma) == out.qtilde;
  out.checks.gamma_normal_form =
      st.gamma == normal_form_gamma(s, cfg, out.qtilde, static_cast<int>(l));
  const Diagram replay = rec.apply(d);
  out.checks.record_reproduces =
      replay.alpha == st.alpha && replay.beta == st.beta && replay.gamma == st.gamma;

  if (!out.checks.partial) {
    try {
      const MonodromyResult mono = monodromy_action(st);
      out.a_psi = mono.a_psi;
      out.checks.monodromy_inverse =
          mono.a_psi && out.b_block * *mono.a_psi == IntMatrix::identity(l);
    } catch (const Error& e) {
      out.checks.monodromy_inverse = false;
      out.notes.push_back(std::string("monodromy: ") + e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Comparison

std::string verdict_line(const ComparisonReport& r) {
  std::string line(to_string(r.verdict));
  if (r.verdict != Verdict::Equivalent && !r.reason.empty()) line += ": " + r.reason;
  return line;
}

std::optional<IntMatrix> find_congruence(const IntMatrix& a, const IntMatrix& b, int bound,
                                         std::size_t max_rank) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) return std::nullopt;
  const std::size_t n = a.rows();
  if (n > max_rank) return std::nullopt;
  if (n == 0) return IntMatrix(0, 0);

  // All vectors in the box, with their b-norms.
  std::vector<IntMatrix> box;
  std::vector<long> digits(n, -bound);
  for (;;) {
    IntMatrix v(n, 1);
    for (std::size_t i = 0; i < n; ++i) v(i, 0) = digits[i];
    if (!v.is_zero()) box.push_back(std::move(v));
    std::size_t i = 0;
    while (i < n && digits[i] == bound) digits[i++] = -bound;
    if (i == n) break;
    ++digits[i];
  }
  std::vector<Integer> norms;
  norms.reserve(box.size());
  for (const IntMatrix& v : box) norms.push_back((v.transpose() * b * v)(0, 0));

  std::vector<std::size_t> chosen;
  std::optional<IntMatrix> found;
  std::function<void()> search = [&]() {
    if (found) return;
    const std::size_t c = chosen.size();
    if (c == n) {
      IntMatrix u(n, n);
      for (std::size_t j = 0; j < n; ++j) u.set_block(0, j, box[chosen[j]]);
      if (abs(determinant(u)) == 1) found = std::move(u);
      return;
    }
    for (std::size_t k = 0; k < box.size() && !found; ++k) {
      if (norms[k] != a(c, c)) continue;
      const IntMatrix bv = b * box[k];
      bool ok = true;
      for (std::size_t j = 0; j < c && ok; ++j)
        ok = (box[chosen[j]].transpose() * bv)(0, 0) == a(j, c);
      if (!ok) continue;
      chosen.push_back(k);
      search();
      chosen.pop_back();
    }
  };
  search();
  return found;
}

ComparisonReport torelli_compare(const Diagram& x, const Diagram& y) {
  ComparisonReport r;
  const StandardizationResult sx = standardize(x);
  const StandardizationResult sy = standardize(y);
  r.form_x = sx.form;
  r.form_y = sy.form;

  r.params_equal = x.params == y.params;
  if (!r.params_equal) {
    r.verdict = Verdict::NotEquivalent;
    r.reason = "parameters";
    return r;
  }
  if (sx.checks.partial || sy.checks.partial) {
    r.reason = "intersection form is not unimodular";
    return r;
  }
  r.notes.push_back("monodromy actions compared as matrices on the standard arc basis");
  r.monodromy_equal = sx.a_psi && sy.a_psi && *sx.a_psi == *sy.a_psi;
  if (!*r.monodromy_equal) {
    r.verdict = Verdict::NotEquivalent;
    r.reason = "monodromy";
    return r;
  }

  const FormInvariants& fx = *sx.form;
  const FormInvariants& fy = *sy.form;
  if (fx.rank != fy.rank) {
    r.verdict = Verdict::NotEquivalent;
    r.reason = "rank";
    return r;
  }
  if (fx.signature != fy.signature) {
    r.verdict = Verdict::NotEquivalent;
    r.reason = "signature";
    return r;
  }
  if (fx.even != fy.even) {
    r.verdict = Verdict::NotEquivalent;
    r.reason = "parity";
    return r;
  }

  if (sx.q == sy.q) {
    r.congruence = IntMatrix::identity(sx.q.rows());
  } else {
    r.congruence = find_congruence(sx.q, sy.q);
  }
  if (r.congruence) {
    // Re-presenting gamma_Y through the congruence gives Qtilde_X, so both
    // standardize to the same class matrix.
    r.verdict = Verdict::Equivalent;
    r.certificate = sx.standardized.gamma.classes;
    return r;
  }
  if (!fx.definite()) {
    r.verdict = Verdict::Equivalent;
    r.notes.push_back("indefinite unimodular forms with equal rank, signature and parity are isomorphic");
    r.certificate = sx.standardized.gamma.classes;
    return r;
  }
  r.reason = fx.rank > 4 ? "definite form of rank > 4" : "no congruence in the search box";
  return r;
}

bool is_homologically_torelli(const TransformationRecord& record, const Diagram& d) {
  const auto n = static_cast<std::size_t>(d.params.curves());
  for (RecordTarget t : {RecordTarget::Alpha, RecordTarget::Beta, RecordTarget::Gamma})
    (void)record.composite(t, n);
  const IntMatrix phi = record.composite(RecordTarget::Surface, d.surface.rank);
  const StandardConfiguration cfg = standard_configuration(d.surface, d.params.p);
  return phi * cfg.alpha.classes == cfg.alpha.classes &&
         phi * cfg.beta.classes == cfg.beta.classes && phi * cfg.eta.classes == cfg.eta.classes &&
         relative_action(d.surface, phi) * cfg.arcs.classes == cfg.arcs.classes;
}

}  // namespace trisect
