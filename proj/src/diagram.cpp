#include "trisect/diagram.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "trisect/error.hpp"
#include "trisect/invariants.hpp"

namespace trisect {

using nlohmann::json;

std::vector<int> TrisectionParams::d() const {
  std::vector<int> out(static_cast<std::size_t>(std::max(curves(), 0)), 0);
  for (int i = 0; i < static_cast<int>(out.size()) && i < l(); ++i) out[i] = 1;
  return out;
}

std::string TrisectionParams::violation() const {
  if (p < 0) return "p = " + std::to_string(p) + " < 0";
  if (g < p) return "g = " + std::to_string(g) + " < p = " + std::to_string(p);
  if (b < 1) return "b = " + std::to_string(b) + " < 1";
  for (int i = 0; i < 3; ++i) {
    const std::string name = "k_" + std::to_string(i + 1) + " = " + std::to_string(k[i]);
    if (k[i] < l()) return name + " < l = " + std::to_string(l());
    if (k[i] > g + p + b - 1) return name + " > g+p+b-1 = " + std::to_string(g + p + b - 1);
  }
  return {};
}

const CurveSystem& Diagram::system(int i) const {
  switch (((i - 1) % 3 + 3) % 3) {
    case 0: return alpha;
    case 1: return beta;
    default: return gamma;
  }
}

Diagram make_diagram(const TrisectionParams& params, IntMatrix alpha, IntMatrix beta,
                     IntMatrix gamma, std::optional<IntMatrix> arcs, std::optional<IntMatrix> eta) {
  if (params.g < 0 || params.b < 1 || params.p < 0 || params.p > params.g) {
    throw Error(ErrorKind::InvalidParams, "need g >= p >= 0 and b >= 1");
  }
  Diagram d;
  d.params = params;
  d.surface = build_surface_model(params.g, params.b);
  const auto n = static_cast<std::size_t>(params.curves());
  const auto l = static_cast<std::size_t>(params.l());

  auto check = [&](const IntMatrix& m, const char* name, std::size_t count) {
    if (m.rows() != d.surface.rank) {
      throw Error(ErrorKind::DimensionMismatch, std::string(name) + " vectors have length " +
                                                    std::to_string(m.rows()) + ", expected " +
                                                    std::to_string(d.surface.rank));
    }
    if (m.cols() != count) {
      throw Error(ErrorKind::DimensionMismatch, std::string(name) + " has " +
                                                    std::to_string(m.cols()) + " classes, expected " +
                                                    std::to_string(count));
    }
  };
  check(alpha, "alpha", n);
  check(beta, "beta", n);
  check(gamma, "gamma", n);
  d.alpha.classes = std::move(alpha);
  d.beta.classes = std::move(beta);
  d.gamma.classes = std::move(gamma);
  if (arcs) {
    check(*arcs, "arcs", l);
    d.arcs = ArcSystem{std::move(*arcs)};
  }
  if (eta) {
    check(*eta, "eta", l);
    d.eta = CurveSystem{std::move(*eta)};
  }
  return d;
}

// ---------------------------------------------------------------------------
// Validation

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "n/a";
  }
  return "?";
}

bool ValidationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const CheckResult* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

IntMatrix self_intersections(const SurfaceModel& s, const CurveSystem& c) {
  return pairing_matrix(s, c, c);
}

namespace {

const char* system_name(int i) {
  static const char* names[] = {"alpha", "beta", "gamma"};
  return names[((i - 1) % 3 + 3) % 3];
}

bool matches_sutured_pattern(const IntMatrix& pairing, long ones) {
  if (ones < 0) return false;
  const SmithDecomposition snf = smith_normal_form(pairing);
  const auto factors = snf.invariant_factors();
  return static_cast<long>(factors.size()) == ones &&
         std::all_of(factors.begin(), factors.end(), [](const Integer& f) { return f == 1; });
}

}  // namespace

ValidationReport validate(const Diagram& d) {
  ValidationReport report;
  const TrisectionParams& tp = d.params;
  const int l = tp.l();

  {
    CheckResult c{"params", CheckStatus::Pass, "g >= p >= 0, b >= 1, g+p+b-1 >= k_i >= l", {}};
    if (auto v = tp.violation(); !v.empty()) {
      c.status = CheckStatus::Fail;
      c.detail = v;
    }
    report.checks.push_back(std::move(c));
  }

  bool independent = true;
  for (int i = 1; i <= 3; ++i) {
    const CurveSystem& sys = d.system(i);
    CheckResult c{std::string("independent:") + system_name(i), CheckStatus::Pass, {}, {}};
    const std::size_t r = rank(sys.classes);
    c.detail = std::to_string(sys.size()) + " classes of rank " + std::to_string(r);
    if (sys.size() != static_cast<std::size_t>(tp.curves()) || r != sys.size()) {
      c.status = CheckStatus::Fail;
      independent = false;
    }
    report.checks.push_back(std::move(c));
  }

  for (int i = 1; i <= 3; ++i) {
    const CurveSystem& mu = d.system(i);
    const CurveSystem& nu = d.system(i + 1);
    const long ones = static_cast<long>(tp.curves()) - tp.k[i - 1] + l;
    IntMatrix pm = pairing_matrix(d.surface, mu, nu);
    CheckResult c{std::string("sutured_pair:") + system_name(i) + "," + system_name(i + 1),
                  CheckStatus::Pass,
                  "SNF of pairing equals I_" + std::to_string(ones) + " + 0",
                  pm};
    if (!matches_sutured_pattern(pm, ones)) c.status = CheckStatus::Fail;
    report.checks.push_back(std::move(c));
  }

  for (int i = 1; i <= 3; ++i) {
    CheckResult c{std::string("intersection_rank:") + system_name(i) + "," + system_name(i + 1),
                  CheckStatus::NotApplicable, "requires independent systems", {}};
    if (independent) {
      const Lattice meet = lattice_intersection(Lattice(d.system(i).classes),
                                                Lattice(d.system(i + 1).classes));
      const long need = static_cast<long>(tp.k[i - 1]) - l;
      c.detail = "rank " + std::to_string(meet.rank()) + " >= k_" + std::to_string(i) +
                 " - l = " + std::to_string(need);
      c.status = static_cast<long>(meet.rank()) >= need ? CheckStatus::Pass : CheckStatus::Fail;
      c.witness = meet.basis();
    }
    report.checks.push_back(std::move(c));
  }

  {
    CheckResult c{"arc_system", CheckStatus::NotApplicable, "no arcs given", {}};
    if (d.arcs) {
      const IntMatrix a_alpha = pairing_matrix(d.surface, *d.arcs, d.alpha);
      const IntMatrix a_beta = pairing_matrix(d.surface, *d.arcs, d.beta);
      c.status = CheckStatus::Pass;
      c.detail = "arcs pair to zero with alpha and beta";
      if (!a_alpha.is_zero() || !a_beta.is_zero()) {
        c.status = CheckStatus::Fail;
        c.witness = hcat(a_alpha, a_beta);
      } else if (d.eta) {
        c.detail += "; eta dual to arcs and orthogonal to alpha, beta";
        const IntMatrix dual = pairing_matrix(d.surface, *d.arcs, *d.eta);
        const IntMatrix ae = pairing_matrix(d.surface, d.alpha, *d.eta);
        const IntMatrix be = pairing_matrix(d.surface, d.beta, *d.eta);
        if (!dual.is_identity() || !ae.is_zero() || !be.is_zero()) {
          c.status = CheckStatus::Fail;
          c.witness = dual;
        }
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    CheckResult c{"chain_condition", CheckStatus::NotApplicable, {}, {}};
    if (!independent) {
      c.detail = "requires independent systems";
    } else if (l > 0 && !d.arcs) {
      c.detail = "arcs required when l > 0";
    } else {
      try {
        const ChainComplexData cx = build_chain_complex(d);
        c.status = CheckStatus::Pass;
        c.detail = "rho * pi = 0";
        c.witness = cx.rho * cx.pi;
      } catch (const Error& e) {
        c.status = CheckStatus::Fail;
        c.detail = e.what();
      }
    }
    report.checks.push_back(std::move(c));
  }

  report.notes.push_back(
      "checks are homologically necessary conditions only; passing does not certify a "
      "trisection diagram");
  if (independent) {
    for (int i = 1; i <= 3; ++i) {
      if (!self_intersections(d.surface, d.system(i)).is_zero()) {
        report.notes.push_back(std::string(system_name(i)) +
                               " classes have nonzero algebraic intersections; no disjoint curves "
                               "realize them");
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Synthesis

CurveSystem normal_form_gamma(const SurfaceModel& s, const StandardConfiguration& config,
                              const IntMatrix& qtilde, int l) {
  const std::size_t n = config.alpha.size();
  if (qtilde.rows() != n || qtilde.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "Qtilde must be (g-p) x (g-p)");
  }
  IntMatrix gamma = -config.alpha.classes - config.beta.classes * qtilde;
  for (std::size_t i = 0; i < n && static_cast<int>(i) < l; ++i)
    for (std::size_t r = 0; r < s.rank; ++r) gamma(r, i) -= config.eta.classes(r, i);
  return CurveSystem{std::move(gamma)};
}

Diagram synthesize_diagram(const IntMatrix& q, const IntMatrix& b_block, int k, int p,
                           int boundary) {
  if (p < 0 || boundary < 1) throw Error(ErrorKind::InvalidParams, "need p >= 0, b >= 1");
  if (!q.is_square() || !q.is_symmetric()) {
    throw Error(ErrorKind::NotSymmetric, "Q must be a symmetric square matrix");
  }
  const int l = 2 * p + boundary - 1;
  if (!b_block.is_square() || b_block.rows() != static_cast<std::size_t>(l)) {
    throw Error(ErrorKind::InvalidParams, "B must be l x l with l = 2p + b - 1 = " + std::to_string(l));
  }
  if (abs(determinant(b_block)) != 1) {
    throw Error(ErrorKind::NotUnimodular, "B = " + b_block.to_string());
  }
  if (k < l) throw Error(ErrorKind::InvalidParams, "k must be >= l");

  TrisectionParams tp;
  tp.p = p;
  tp.b = boundary;
  tp.g = p + l + static_cast<int>(q.rows()) + (k - l);
  tp.k = {l, l, k};

  const SurfaceModel s = build_surface_model(tp.g, tp.b);
  const StandardConfiguration config = standard_configuration(s, p);
  const IntMatrix qtilde =
      direct_sum(direct_sum(b_block, q), IntMatrix::zero(k - l, k - l));
  CurveSystem gamma = normal_form_gamma(s, config, qtilde, l);
  return make_diagram(tp, config.alpha.classes, config.beta.classes, std::move(gamma.classes),
                      config.arcs.classes, config.eta.classes);
}

// ---------------------------------------------------------------------------
// File format

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

int read_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) parse_fail("field '" + field + "' must be an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) parse_fail("field '" + field + "' out of range");
  return static_cast<int>(v);
}

IntMatrix read_classes(const json& j, const std::string& field, std::size_t rank) {
  if (!j.is_array()) parse_fail("field '" + field + "' must be an array of vectors");
  std::vector<std::vector<Integer>> columns;
  for (std::size_t c = 0; c < j.size(); ++c) {
    const json& vec = j[c];
    const std::string name = field + "[" + std::to_string(c) + "]";
    if (!vec.is_array()) parse_fail("'" + name + "' must be an array of integers");
    if (vec.size() != rank) {
      throw Error(ErrorKind::DimensionMismatch, "'" + name + "' has length " +
                                                    std::to_string(vec.size()) +
                                                    ", surface rank is " + std::to_string(rank));
    }
    std::vector<Integer> entries;
    entries.reserve(rank);
    for (const json& e : vec) {
      if (!e.is_number_integer()) parse_fail("'" + name + "' has a non-integer entry");
      if (e.is_number_unsigned())
        entries.emplace_back(e.get<unsigned long>());
      else
        entries.emplace_back(e.get<long>());
    }
    columns.push_back(std::move(entries));
  }
  return IntMatrix::from_columns(rank, columns);
}

json write_classes(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    json vec = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!m(r, c).fits_slong_p()) {
        throw Error(ErrorKind::DimensionMismatch, "entry exceeds the 64-bit range of the file format");
      }
      vec.push_back(m(r, c).get_si());
    }
    out.push_back(std::move(vec));
  }
  return out;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_fail("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!root.is_object()) parse_fail("top level must be an object");

  static const std::set<std::string> allowed = {"format_version", "params", "basis", "alpha",
                                                "beta", "gamma", "arcs", "eta"};
  for (const auto& item : root.items())
    if (!allowed.count(item.key())) parse_fail("unknown key '" + item.key() + "'");
  for (const char* key : {"format_version", "params", "basis", "alpha", "beta", "gamma"})
    if (!root.contains(key)) parse_fail("missing key '" + std::string(key) + "'");

  if (read_int(root["format_version"], "format_version") != 1) {
    parse_fail("field 'format_version' must be 1");
  }
  if (!root["basis"].is_string() || root["basis"].get<std::string>() != "canonical-v1") {
    parse_fail("field 'basis' must be \"canonical-v1\"");
  }

  const json& pj = root["params"];
  if (!pj.is_object()) parse_fail("field 'params' must be an object");
  for (const auto& item : pj.items())
    if (item.key() != "g" && item.key() != "b" && item.key() != "p" && item.key() != "k")
      parse_fail("unknown key 'params." + item.key() + "'");
  for (const char* key : {"g", "b", "p", "k"})
    if (!pj.contains(key)) parse_fail("missing key 'params." + std::string(key) + "'");

  TrisectionParams tp;
  tp.g = read_int(pj["g"], "params.g");
  tp.b = read_int(pj["b"], "params.b");
  tp.p = read_int(pj["p"], "params.p");
  if (!pj["k"].is_array() || pj["k"].size() != 3) parse_fail("field 'params.k' must hold 3 integers");
  for (int i = 0; i < 3; ++i) tp.k[i] = read_int(pj["k"][i], "params.k[" + std::to_string(i) + "]");
  if (tp.g < 0 || tp.b < 1 || tp.p < 0 || tp.p > tp.g) {
    throw Error(ErrorKind::InvalidParams, "need g >= p >= 0 and b >= 1");
  }

  const auto rank = static_cast<std::size_t>(2 * tp.g + tp.b - 1);
  IntMatrix alpha = read_classes(root["alpha"], "alpha", rank);
  IntMatrix beta = read_classes(root["beta"], "beta", rank);
  IntMatrix gamma = read_classes(root["gamma"], "gamma", rank);
  std::optional<IntMatrix> arcs, eta;
  if (root.contains("arcs")) arcs = read_classes(root["arcs"], "arcs", rank);
  if (root.contains("eta")) eta = read_classes(root["eta"], "eta", rank);
  return make_diagram(tp, std::move(alpha), std::move(beta), std::move(gamma), std::move(arcs),
                      std::move(eta));
}

std::string serialize_diagram(const Diagram& d) {
  const TrisectionParams& tp = d.params;
  json params = {{"g", tp.g}, {"b", tp.b}, {"p", tp.p}, {"k", {tp.k[0], tp.k[1], tp.k[2]}}};

  std::ostringstream out;
  auto emit_classes = [&](const char* key, const IntMatrix& m, bool last) {
    const json arr = write_classes(m);
    out << "  \"" << key << "\": [";
    for (std::size_t c = 0; c < arr.size(); ++c) out << (c ? ",\n    " : "\n    ") << arr[c].dump();
    out << (arr.empty() ? "]" : "\n  ]") << (last ? "\n" : ",\n");
  };
  out << "{\n";
  out << "  \"format_version\": 1,\n";
  out << "  \"params\": " << params.dump() << ",\n";
  out << "  \"basis\": \"canonical-v1\",\n";
  emit_classes("alpha", d.alpha.classes, false);
  emit_classes("beta", d.beta.classes, false);
  const bool has_arcs = d.arcs.has_value();
  const bool has_eta = d.eta.has_value();
  emit_classes("gamma", d.gamma.classes, !has_arcs && !has_eta);
  if (has_arcs) emit_classes("arcs", d.arcs->classes, !has_eta);
  if (has_eta) emit_classes("eta", d.eta->classes, true);
  out << "}\n";
  return out.str();
}

}  // namespace trisect
