// trisect: command-line front end.
//
// Exit codes: 0 success, 1 domain failure (failed checks, unmet hypotheses),
// 2 I/O, usage or parse failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "trisect/error.hpp"
#include "trisect/invariants.hpp"
#include "trisect/monodromy.hpp"
#include "trisect/report.hpp"
#include "trisect/standardize.hpp"

namespace {

using namespace trisect;

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kInputFailure = 2;

// I/O and parse problems; mapped to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

struct Loaded {
  Diagram diagram;
  std::string digest;
};

Loaded load(const std::string& path) {
  const std::string text = read_source(path);
  try {
    return {parse_diagram(text), sha256_hex(text)};
  } catch (const Error& e) {
    throw InputError(std::string(path == "-" ? "<stdin>" : path) + ": " + e.what());
  }
}

struct Output {
  std::string format = "json";

  void emit(const Json& report) const {
    std::cout << (format == "text" ? render_text(report) : render_json(report));
  }
};

Json base_report(const std::string& command) {
  return {{"command", command}, {"warnings", Json::array()}};
}

int cmd_validate(const Output& out, const std::string& input) {
  const Loaded in = load(input);
  const ValidationReport v = validate(in.diagram);
  Json report = base_report("validate");
  report["input_sha256"] = in.digest;
  report["results"] = to_json(v);
  out.emit(report);
  return v.passed() ? kOk : kDomainFailure;
}

int cmd_invariants(const Output& out, const std::string& input, bool want_homology,
                   bool want_linking, bool want_form) {
  if (!want_homology && !want_linking && !want_form) want_homology = want_linking = want_form = true;
  const Loaded in = load(input);
  Json report = base_report("invariants");
  report["input_sha256"] = in.digest;
  Json results = Json::object();
  int code = kOk;

  if (want_homology) results["homology"] = to_json(homology(in.diagram));

  std::optional<StandardizationResult> std_result;
  std::optional<std::string> std_error;
  auto standardized = [&]() -> const StandardizationResult* {
    if (!std_result && !std_error) {
      try {
        std_result = standardize(in.diagram);
      } catch (const Error& e) {
        std_error = e.what();
      }
    }
    return std_result ? &*std_result : nullptr;
  };

  if (want_linking) {
    if (in_standard_position(in.diagram)) {
      results["linking"] = to_json(linking_matrix(in.diagram));
    } else if (const StandardizationResult* s = standardized()) {
      results["linking"] = to_json(linking_matrix(s->standardized));
      report["warnings"].push_back("linking matrix computed on the standardized diagram");
    } else {
      report["warnings"].push_back("linking matrix unavailable: " + *std_error);
      code = kDomainFailure;
    }
  }
  if (want_form) {
    if (const StandardizationResult* s = standardized()) {
      Json form = {{"Q", to_json(s->q)}, {"b2", s->b2}};
      form["invariants"] = s->form ? to_json(*s->form) : Json(nullptr);
      form["A_psi"] = s->a_psi ? to_json(*s->a_psi) : Json(nullptr);
      if (s->checks.partial) report["warnings"].push_back("Q is not unimodular");
      results["form"] = std::move(form);
    } else {
      report["warnings"].push_back("intersection form unavailable: " + *std_error);
      code = kDomainFailure;
    }
  }
  report["results"] = std::move(results);
  out.emit(report);
  return code;
}

int cmd_standardize(const Output& out, const std::string& input, const std::string& output,
                    std::string record_path) {
  const Loaded in = load(input);
  const StandardizationResult r = standardize(in.diagram);
  Json results = to_json(r);

  Json report = base_report("standardize");
  report["input_sha256"] = in.digest;
  if (!output.empty()) {
    write_file(output, serialize_diagram(r.standardized));
    if (record_path.empty() && output != "-") record_path = output + ".record.json";
  } else {
    results["diagram"] = Json::parse(serialize_diagram(r.standardized));
  }
  if (!record_path.empty()) {
    Json record = results;
    record["input_sha256"] = in.digest;
    record["format_version"] = 1;
    write_file(record_path, render_json(record));
    report["record_file"] = record_path;
  }
  for (const std::string& note : r.notes) report["warnings"].push_back(note);
  report["results"] = std::move(results);
  out.emit(report);
  return r.checks.partial ? kDomainFailure : kOk;
}

int cmd_compare(const Output& out, const std::string& x, const std::string& y) {
  const Loaded dx = load(x);
  const Loaded dy = load(y);
  const ComparisonReport c = torelli_compare(dx.diagram, dy.diagram);
  Json report = base_report("compare");
  report["input_sha256"] = {{"x", dx.digest}, {"y", dy.digest}};
  report["results"] = to_json(c);
  out.emit(report);
  return kOk;
}

int cmd_generate(const std::string& q_spec, const std::string& b_spec, std::optional<int> k,
                 int p, int boundary, const std::string& output) {
  IntMatrix q, b;
  try {
    q = parse_form_spec(q_spec);
    const int l = 2 * p + boundary - 1;
    b = b_spec == "identity" ? IntMatrix::identity(static_cast<std::size_t>(std::max(l, 0)))
                             : parse_form_spec(b_spec);
    if (!k) k = l;
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  write_file(output, serialize_diagram(synthesize_diagram(q, b, *k, p, boundary)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and standardization of relative trisection diagrams"};
  app.require_subcommand(1);

  Output out;
  if (const char* env = std::getenv("TRISECT_FORMAT")) out.format = env;
  std::string format_flag;
  app.add_option("--format", format_flag, "Report format (json or text)")
      ->check(CLI::IsMember({"json", "text"}));

  std::string input;
  auto* validate_cmd = app.add_subcommand("validate", "Check necessary conditions on a diagram");
  validate_cmd->add_option("--input", input, "Diagram file, or - for stdin")->required();

  bool want_homology = false, want_linking = false, want_form = false;
  auto* invariants_cmd = app.add_subcommand("invariants", "Homology, linking matrix, intersection form");
  invariants_cmd->add_option("--input", input, "Diagram file, or - for stdin")->required();
  invariants_cmd->add_flag("--homology", want_homology, "Homology groups");
  invariants_cmd->add_flag("--linking", want_linking, "Linking matrix");
  invariants_cmd->add_flag("--form", want_form, "Intersection form");

  std::string output, record;
  auto* standardize_cmd = app.add_subcommand("standardize", "Bring a diagram to normal form");
  standardize_cmd->add_option("--input", input, "Diagram file, or - for stdin")->required();
  standardize_cmd->add_option("--output", output, "Standardized diagram file");
  standardize_cmd->add_option("--record", record,
                              "Record file (default: <output>.record.json)");

  std::string x, y;
  auto* compare_cmd = app.add_subcommand("compare", "Compare two diagrams up to homological Torelli moves");
  compare_cmd->add_option("--x", x, "First diagram")->required();
  compare_cmd->add_option("--y", y, "Second diagram")->required();

  std::string q_spec = "empty", b_spec = "identity";
  std::optional<int> k;
  int p = 0, boundary = 1;
  std::string gen_output = "-";
  auto* generate_cmd = app.add_subcommand("generate", "Write a diagram in normal form");
  generate_cmd->add_option("--q", q_spec, "Intersection form: empty, e8, hyperbolic, diag:..., identity:N, [[...]]");
  generate_cmd->add_option("--b", b_spec, "l x l block B (default identity)");
  generate_cmd->add_option("--k", k, "k >= l (default l)");
  generate_cmd->add_option("--p", p, "Page genus");
  generate_cmd->add_option("--boundary", boundary, "Boundary components");
  generate_cmd->add_option("--output", gen_output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputFailure;
  }
  if (!format_flag.empty()) out.format = format_flag;
  if (out.format != "json" && out.format != "text") {
    std::cerr << "error: unknown format '" << out.format << "'\n";
    return kInputFailure;
  }

  try {
    if (*validate_cmd) return cmd_validate(out, input);
    if (*invariants_cmd) return cmd_invariants(out, input, want_homology, want_linking, want_form);
    if (*standardize_cmd) return cmd_standardize(out, input, output, record);
    if (*compare_cmd) return cmd_compare(out, x, y);
    if (*generate_cmd) return cmd_generate(q_spec, b_spec, k, p, boundary, gen_output);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainFailure;
  }
  return kInputFailure;
}
