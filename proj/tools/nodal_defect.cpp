#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nodal/corpus.hpp"
#include "nodal/exit_codes.hpp"
#include "nodal/input.hpp"
#include "nodal/report.hpp"

namespace {

using namespace nodal;

struct Flags {
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> prime;
  std::string strategy = "auto";
  std::optional<std::string> method;
  std::optional<std::string> json_path;
  bool emit_input = false;
  bool skip_odp = false;
  std::optional<int> max_degree_cap;
};

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--seed", f.seed, "random seed")->capture_default_str();
  cmd->add_option("--prime", f.prime, "work over F_p for this prime");
  cmd->add_option("--strategy", f.strategy, "combination of the minor matrix")
      ->check(CLI::IsMember({"row", "column", "auto"}))
      ->capture_default_str();
  cmd->add_option("--method", f.method, "intersection dimension method")
      ->check(CLI::IsMember({"ideal", "points", "both"}));
  cmd->add_option("--json", f.json_path, "write the JSON report here");
  cmd->add_flag("--skip-odp", f.skip_odp, "do not verify that singular points are nodes");
  cmd->add_option("--max-degree-cap", f.max_degree_cap, "degree cap for Groebner basis computations")
      ->check(CLI::PositiveNumber);
}

PipelineOptions pipeline_options(const Flags& f) {
  PipelineOptions o;
  o.seed = f.seed;
  if (f.strategy == "row") o.strategy = Strategy::Row;
  if (f.strategy == "column") o.strategy = Strategy::Column;
  if (f.method) {
    o.method = *f.method == "ideal" ? Method::Ideal : *f.method == "points" ? Method::Points : Method::Both;
  }
  o.skip_odp = f.skip_odp;
  return o;
}

void write_report(const AnalysisReport& rep, const Flags& f) {
  std::cout << render_text(rep);
  if (f.json_path) {
    std::ofstream out(*f.json_path);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + *f.json_path);
    out << nlohmann::json(rep).dump(2) << "\n";
  }
}

template <class F>
AnalysisReport run_document(const InputDocument& doc, const F& field, const PipelineOptions& opts) {
  const auto ci = system_of(doc, field);
  return analyze(ci, opts, nodes_of(doc, ci));
}

int cmd_analyze(const std::string& path, const Flags& f) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return kExitParse;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  InputDocument doc;
  try {
    doc = parse_input(buf.str());
    if (f.prime) doc.field = FieldSpec::prime(*f.prime);
    // Bad polynomials and off-surface nodes are input errors.
    std::visit([&](const auto& field) { nodes_of(doc, system_of(doc, field)); }, doc.field.variant());
  } catch (const Error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  const auto opts = pipeline_options(f);
  AnalysisReport rep;
  if (const auto* q = std::get_if<RationalField>(&doc.field.variant())) {
    rep = run_document(doc, *q, opts);
  } else if (const auto* fp = std::get_if<PrimeField>(&doc.field.variant())) {
    rep = run_document(doc, *fp, opts);
  } else {
    throw Error(ErrorKind::InvalidArgument, "input field must be Q or a prime field");
  }
  write_report(rep, f);
  return kExitOk;
}

int cmd_example(const std::string& name, const Flags& f) {
  const auto desc = describe_example(name);
  if (!desc) {
    std::cerr << "error: unknown example '" << name << "' (try vgn, wvg, schoen, cs-4-2-111)\n";
    return kExitParse;
  }
  const PrimeField field(f.prime.value_or(desc->recommended_prime));
  Rng build_rng(f.seed);
  const auto ci = build_example(name, field, build_rng);
  if (f.emit_input) {
    const std::filesystem::path dir =
        f.json_path ? std::filesystem::path(*f.json_path).parent_path() : std::filesystem::path();
    const auto out_path = dir / (name + ".ci");
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + out_path.string());
    out << emit_input(document_of(ci));
  }
  auto rep = analyze(ci, pipeline_options(f));
  if (desc->expected) {
    for (auto& line : compare_with_expected(rep, *desc->expected)) rep.notes.push_back(std::move(line));
  }
  write_report(rep, f);
  return kExitOk;
}

int cmd_smooth_hodge(const std::vector<int>& degrees) {
  for (int d : degrees) {
    if (d <= 0) {
      std::cerr << "error: degrees must be positive\n";
      return kExitParse;
    }
  }
  const long h12 = smooth_h12(degrees);
  std::cout << "r=" << degrees.size() << " degrees=(";
  for (std::size_t i = 0; i < degrees.size(); ++i) std::cout << (i ? "," : "") << degrees[i];
  std::cout << ") h11=1 h12=" << h12 << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Defect and Hodge numbers of nodal complete intersection threefolds"};
  app.require_subcommand(1);

  Flags flags;
  std::string path, name;
  std::vector<int> degrees;

  auto* analyze_cmd = app.add_subcommand("analyze", "analyze a system given in a .ci file");
  analyze_cmd->add_option("path", path, "input file")->required();
  add_flags(analyze_cmd, flags);

  auto* example_cmd = app.add_subcommand("example", "analyze a built-in example");
  example_cmd->add_option("name", name, "vgn, wvg, schoen or cs-D1-D2-E1E2E3")->required();
  add_flags(example_cmd, flags);
  example_cmd->add_flag("--emit-input", flags.emit_input, "also write the system as a .ci file");

  auto* hodge_cmd = app.add_subcommand("smooth-hodge", "h12 of a smooth complete intersection");
  hodge_cmd->add_option("degrees", degrees, "degrees of the equations")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (flags.max_degree_cap) default_max_degree() = *flags.max_degree_cap;
    if (*analyze_cmd) return cmd_analyze(path, flags);
    if (*example_cmd) return cmd_example(name, flags);
    return cmd_smooth_hodge(degrees);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
}
