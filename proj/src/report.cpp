#include "trisect/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "trisect/error.hpp"

namespace trisect {

Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j, std::string_view field) {
  const std::string name(field);
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "'" + name + "' must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw Error(ErrorKind::ParseError, "'" + name + "' rows must be arrays of equal length");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& v = j[i][c];
      if (v.is_number_integer()) {
        m(i, c) = Integer(std::to_string(v.get<long long>()));
      } else if (v.is_string()) {
        try {
          m(i, c) = Integer(v.get<std::string>());
        } catch (const std::invalid_argument&) {
          throw Error(ErrorKind::ParseError, "'" + name + "' has a non-integer entry");
        }
      } else {
        throw Error(ErrorKind::ParseError, "'" + name + "' has a non-integer entry");
      }
    }
  }
  return m;
}

Json to_json(const HomologyResult& h) {
  Json groups = Json::array();
  for (std::size_t k = 0; k < h.groups.size(); ++k) {
    Json torsion = Json::array();
    for (const Integer& t : h.groups[k].torsion) torsion.push_back(to_json(t));
    groups.push_back({{"degree", k},
                      {"rank", h.groups[k].free_rank},
                      {"torsion", torsion},
                      {"group", h.groups[k].to_string()}});
  }
  return {{"groups", groups}, {"formal", h.formal}};
}

Json to_json(const ValidationReport& r) {
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) {
    Json entry = {{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}};
    if (c.witness) entry["witness"] = to_json(*c.witness);
    checks.push_back(std::move(entry));
  }
  return {{"passed", r.passed()}, {"checks", checks}, {"notes", r.notes}};
}

Json to_json(const FormInvariants& f) {
  return {{"rank", f.rank},
          {"signature", f.signature},
          {"parity", f.even ? "even" : "odd"},
          {"determinant", to_json(f.determinant)},
          {"definite", f.definite()}};
}

Json to_json(const LinkingMatrix& lm) {
  return {{"matrix", to_json(lm.matrix)},
          {"symmetric", lm.symmetric},
          {"symmetric_outside_arc_block", lm.symmetric_outside_arc_block}};
}

Json to_json(const TransformationRecord& r) {
  Json steps = Json::array();
  for (const RecordStep& s : r.steps) {
    steps.push_back({{"target", std::string(to_string(s.target))},
                     {"matrix", to_json(s.matrix)},
                     {"label", s.label}});
  }
  return steps;
}

Json to_json(const StandardizationResult& r) {
  const auto n = static_cast<std::size_t>(r.standardized.params.curves());
  const std::size_t rank = r.standardized.surface.rank;
  Json composites = {
      {"alpha", to_json(r.record.composite(RecordTarget::Alpha, n))},
      {"beta", to_json(r.record.composite(RecordTarget::Beta, n))},
      {"gamma", to_json(r.record.composite(RecordTarget::Gamma, n))},
      {"surface", to_json(r.record.composite(RecordTarget::Surface, rank))},
  };
  Json checks = {{"partial", r.checks.partial},
                 {"pairing_equals_qtilde", r.checks.pairing_equals_qtilde},
                 {"gamma_normal_form", r.checks.gamma_normal_form},
                 {"kernel_split_symmetry", r.checks.kernel_split_symmetry},
                 {"record_reproduces", r.checks.record_reproduces},
                 {"all_unimodular", r.checks.all_unimodular}};
  checks["monodromy_inverse"] =
      r.checks.monodromy_inverse ? Json(*r.checks.monodromy_inverse) : Json(nullptr);
  Json out = {{"B", to_json(r.b_block)},
              {"Q", to_json(r.q)},
              {"Qtilde", to_json(r.qtilde)},
              {"b2", r.b2},
              {"kernel_split", to_json(r.kernel_split)},
              {"steps", to_json(r.record)},
              {"composites", composites},
              {"checks", checks},
              {"notes", r.notes}};
  out["A_psi"] = r.a_psi ? to_json(*r.a_psi) : Json(nullptr);
  out["form"] = r.form ? to_json(*r.form) : Json(nullptr);
  return out;
}

Json to_json(const ComparisonReport& r) {
  Json out = {{"verdict", verdict_line(r)},
              {"params_equal", r.params_equal},
              {"notes", r.notes}};
  out["monodromy_equal"] = r.monodromy_equal ? Json(*r.monodromy_equal) : Json(nullptr);
  out["form_x"] = r.form_x ? to_json(*r.form_x) : Json(nullptr);
  out["form_y"] = r.form_y ? to_json(*r.form_y) : Json(nullptr);
  out["congruence"] = r.congruence ? to_json(*r.congruence) : Json(nullptr);
  out["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  return out;
}

IntMatrix parse_form_spec(std::string_view spec_view) {
  const std::string spec(spec_view);
  auto fail = [&](const std::string& why) -> IntMatrix {
    throw Error(ErrorKind::ParseError, "form spec '" + spec + "': " + why);
  };
  auto parse_count = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const long v = std::stol(s, &used);
      if (used != s.size() || v < 0 || v > 10000) fail("bad size");
      return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
      fail("bad size");
    }
    return std::size_t{0};
  };

  if (spec.empty() || spec == "empty" || spec == "[]") return IntMatrix(0, 0);
  if (spec == "hyperbolic" || spec == "h") return {{0, 1}, {1, 0}};
  if (spec == "e8") {
    IntMatrix m(8, 8);
    for (std::size_t i = 0; i < 8; ++i) m(i, i) = 2;
    const std::size_t edges[][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}};
    for (const auto& e : edges) m(e[0], e[1]) = m(e[1], e[0]) = -1;
    return m;
  }
  if (spec.rfind("identity:", 0) == 0) return IntMatrix::identity(parse_count(spec.substr(9)));
  if (spec.rfind("diag:", 0) == 0) {
    std::vector<Integer> entries;
    std::stringstream in(spec.substr(5));
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        entries.emplace_back(item);
      } catch (const std::invalid_argument&) {
        fail("bad diagonal entry '" + item + "'");
      }
    }
    if (entries.empty()) fail("empty diagonal");
    IntMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }
  if (spec.front() == '[') {
    Json j;
    try {
      j = Json::parse(spec);
    } catch (const Json::parse_error&) {
      fail("not a JSON matrix");
    }
    IntMatrix m = matrix_from_json(j, "form");
    if (!m.is_square()) fail("matrix must be square");
    return m;
  }
  return fail("unknown form name");
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

namespace {

bool is_int_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  return std::all_of(j.begin(), j.end(), [&](const Json& row) {
    return row.is_array() && row.size() == cols &&
           std::all_of(row.begin(), row.end(), [](const Json& v) {
             return v.is_number_integer() || v.is_string();
           });
  });
}

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

void render(const Json& j, const std::string& indent, std::ostringstream& out);

void render_matrix(const Json& m, const std::string& indent, std::ostringstream& out) {
  std::size_t width = 1;
  for (const Json& row : m)
    for (const Json& v : row) width = std::max(width, scalar(v).size());
  for (const Json& row : m) {
    out << indent << '[';
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string s = scalar(row[c]);
      out << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    out << "]\n";
  }
}

void render_entry(const std::string& key, const Json& v, const std::string& indent,
                  std::ostringstream& out) {
  if (is_int_matrix(v)) {
    out << indent << key << ":\n";
    render_matrix(v, indent + "  ", out);
  } else if (v.is_object() || (v.is_array() && !v.empty())) {
    out << indent << key << ":\n";
    render(v, indent + "  ", out);
  } else if (v.is_array()) {
    out << indent << key << ": []\n";
  } else {
    out << indent << key << ": " << scalar(v) << '\n';
  }
}

void render(const Json& j, const std::string& indent, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) render_entry(it.key(), it.value(), indent, out);
  } else if (j.is_array()) {
    for (const Json& v : j) {
      if (v.is_object() || is_int_matrix(v)) {
        out << indent << "-\n";
        if (is_int_matrix(v)) render_matrix(v, indent + "  ", out);
        else render(v, indent + "  ", out);
      } else {
        out << indent << "- " << scalar(v) << '\n';
      }
    }
  } else {
    out << indent << scalar(j) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(report, "", out);
  return out.str();
}

}  // namespace trisect
