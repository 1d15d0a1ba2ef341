// Command-line front end: compute descriptor diagrams, compare them, run
// pairwise discrimination over a corpus, and run the property suites.
//
// Exit codes: 0 success, 1 property violation, 2 input error, 3 numerical
// failure.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spectre/bench.hpp"
#include "spectre/common.hpp"
#include "spectre/descriptors.hpp"
#include "spectre/filtration.hpp"
#include "spectre/graph.hpp"
#include "spectre/metrics.hpp"
#include "spectre/verify.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw spectre::input_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw spectre::input_error("cannot open output file: " + out_path);
  out << text << "\n";
}

struct PolicyFlags {
  std::string spectrum;  // empty = not given = full
  double sched_fraction = 0.33;
  int partial_threshold = 9;
  double tol = 1e-9;
  std::uint64_t seed = 1;
};

void add_policy_flags(CLI::App* cmd, PolicyFlags& flags) {
  cmd->add_option("--spectrum", flags.spectrum,
                  "Spectrum policy: full, partial, or scheduled (default full)")
      ->check(CLI::IsMember({"full", "partial", "scheduled"}));
  cmd->add_option("--sched-fraction", flags.sched_fraction,
                  "Share of events evaluated under --spectrum scheduled")
      ->check(CLI::Range(1e-9, 1.0));
  cmd->add_option("--partial-threshold", flags.partial_threshold,
                  "Component size above which partial mode switches to the "
                  "power method")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol", flags.tol, "Numeric tolerance");
  cmd->add_option("--seed", flags.seed, "Random seed");
}

spectre::SpectrumPolicy build_policy(const PolicyFlags& flags) {
  spectre::SpectrumPolicy policy;
  if (flags.spectrum == "partial") {
    policy.mode = spectre::SpectrumMode::partial;
  } else if (flags.spectrum == "scheduled") {
    policy.mode = spectre::SpectrumMode::scheduled;
  } else {
    policy.mode = spectre::SpectrumMode::full;
  }
  policy.sched_fraction = flags.sched_fraction;
  policy.partial_threshold = flags.partial_threshold;
  policy.power_tol = flags.tol;
  policy.seed = flags.seed;
  return policy;
}

// "file:<path>" yields the parsed color spec; "degree-forman" yields nullopt
// (the structural filtration, induced per graph).
std::optional<spectre::ColorFiltrationSpec> filtration_source(
    const std::string& source) {
  if (source == "degree-forman") return std::nullopt;
  const std::string prefix = "file:";
  if (source.rfind(prefix, 0) == 0 && source.size() > prefix.size()) {
    return spectre::parse_filtration(read_file(source.substr(prefix.size())));
  }
  throw spectre::input_error(
      "invalid --filtration value '" + source +
      "' (expected file:<path> or degree-forman)");
}

int run_diagram(const std::string& graph_path, const std::string& filtration,
                const std::string& kind_name, const PolicyFlags& flags,
                const std::string& out_path) {
  const spectre::ColoredGraph g = spectre::parse_graph(read_file(graph_path));
  const spectre::DescriptorId id = spectre::descriptor_id_from_string(kind_name);
  const auto spec = filtration_source(filtration);
  const spectre::FiltrationValues values =
      spec ? spectre::induce(*spec, g) : spectre::degree_filtration(g);
  const spectre::Diagram diagram =
      spectre::compute_descriptor(g, values, id, build_policy(flags));
  write_output(out_path, spectre::serialize_diagram(diagram));
  return 0;
}

int run_distance(const std::string& path_a, const std::string& path_b,
                 const std::string& out_path) {
  const spectre::Diagram a = spectre::parse_diagram(read_file(path_a));
  const spectre::Diagram b = spectre::parse_diagram(read_file(path_b));
  spectre::DiagramDistance dist;
  if (a.kind == spectre::DiagramKind::rephine) {
    dist = spectre::d_B_R(a, b);
  } else if (a.kind == spectre::DiagramKind::spectre) {
    dist = spectre::d_B_SpecR(a, b);
  } else {
    throw spectre::input_error("distance is defined for RePHINE and SpectRe "
                               "diagrams, not " + spectre::to_string(a.kind));
  }
  // Flat matching over dim0 followed by dim1; dim1 indices are offset by the
  // dim0 cardinality of the respective diagram.
  json matching = json::array();
  for (const auto& [i, j] : dist.dim0.matching) matching.push_back({i, j});
  const int off_a = static_cast<int>(a.dim0.size());
  const int off_b = static_cast<int>(b.dim0.size());
  for (const auto& [i, j] : dist.dim1.matching)
    matching.push_back({i + off_a, j + off_b});
  json doc;
  if (std::isinf(dist.value)) {
    doc["value"] = "inf";
  } else {
    doc["value"] = dist.value;
  }
  doc["matching"] = matching;
  write_output(out_path, doc.dump());
  return 0;
}

int run_discriminate(const std::string& corpus_dir, const std::string& kind_name,
                     const std::string& filtration, const PolicyFlags& flags,
                     const std::string& format, const std::string& out_path) {
  const std::vector<spectre::CorpusEntry> corpus =
      spectre::load_corpus_dir(corpus_dir);
  const auto spec = filtration_source(filtration);
  std::vector<spectre::DescriptorId> kinds;
  if (kind_name.empty()) {
    kinds = {spectre::DescriptorId::ph0, spectre::DescriptorId::ph1,
             spectre::DescriptorId::rephine, spectre::DescriptorId::spectre,
             spectre::DescriptorId::ls};
  } else {
    kinds = {spectre::descriptor_id_from_string(kind_name)};
  }
  const spectre::SpectrumPolicy policy = build_policy(flags);
  std::vector<spectre::DiscriminationReport> reports;
  for (spectre::DescriptorId id : kinds) {
    reports.push_back(spectre::discriminate(corpus, id, spec, flags.tol, policy,
                                            corpus_dir));
  }
  const std::string text = format == "csv"
                               ? spectre::discrimination_csv(corpus, reports)
                               : spectre::discrimination_summary_json(reports);
  write_output(out_path, text);
  return 0;
}

int run_verify(const std::string& suite, int count, std::uint64_t seed) {
  const spectre::VerifyOutcome outcome =
      spectre::run_verify_suite(suite, count, seed);
  std::cout << "suite " << outcome.suite << ": " << outcome.count
            << " instances, " << outcome.failures << " failures: "
            << (outcome.passed() ? "PASS" : "FAIL") << "\n";
  if (outcome.passed()) return 0;
  const std::size_t shown = std::min<std::size_t>(outcome.messages.size(), 5);
  for (std::size_t i = 0; i < shown; ++i)
    std::cerr << "  " << outcome.messages[i] << "\n";
  if (outcome.messages.size() > shown)
    std::cerr << "  ... " << (outcome.messages.size() - shown) << " more\n";
  if (outcome.replay_json) {
    const std::string replay_path = "replay_" + outcome.suite + ".json";
    std::ofstream out(replay_path, std::ios::binary);
    out << *outcome.replay_json << "\n";
    std::cerr << "replay written to " << replay_path << "\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectrum-informed persistence descriptors on colored graphs"};
  app.require_subcommand(1);

  // diagram ------------------------------------------------------------------
  auto* diagram = app.add_subcommand(
      "diagram", "Compute a descriptor diagram for one graph");
  std::string graph_path, diagram_kind, diagram_filtration, diagram_out;
  PolicyFlags diagram_flags;
  diagram->add_option("graph", graph_path, "Graph JSON file")->required();
  diagram->add_option("--kind", diagram_kind,
                      "Descriptor: ph0, ph1, rephine, spectre, or ls")
      ->required()
      ->check(CLI::IsMember({"ph0", "ph1", "rephine", "spectre", "ls"}));
  diagram->add_option("--filtration", diagram_filtration,
                      "file:<path> (color filtration JSON) or degree-forman")
      ->required();
  add_policy_flags(diagram, diagram_flags);
  diagram->add_option("--out", diagram_out, "Output path (default stdout)");

  // distance -----------------------------------------------------------------
  auto* distance = app.add_subcommand(
      "distance", "Bottleneck-style distance between two diagram files");
  std::string dist_a, dist_b, dist_out;
  distance->add_option("a", dist_a, "First diagram JSON file")->required();
  distance->add_option("b", dist_b, "Second diagram JSON file")->required();
  distance->add_option("--out", dist_out, "Output path (default stdout)");

  // discriminate -------------------------------------------------------------
  auto* discriminate = app.add_subcommand(
      "discriminate", "Pairwise separation report over a corpus directory");
  std::string corpus_dir, disc_kind, disc_filtration = "degree-forman";
  std::string disc_format = "json", disc_out;
  PolicyFlags disc_flags;
  discriminate->add_option("corpus", corpus_dir, "Directory of graph JSON files")
      ->required();
  discriminate->add_option("--kind", disc_kind,
                           "Descriptor (default: all five)")
      ->check(CLI::IsMember({"ph0", "ph1", "rephine", "spectre", "ls"}));
  discriminate->add_option("--filtration", disc_filtration,
                           "file:<path> or degree-forman (default)");
  add_policy_flags(discriminate, disc_flags);
  discriminate->add_option("--format", disc_format, "json (summary) or csv (rows)")
      ->check(CLI::IsMember({"json", "csv"}));
  discriminate->add_option("--out", disc_out, "Output path (default stdout)");

  // verify -------------------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify", "Run a property suite on seeded random instances");
  std::string suite;
  int verify_count = 0;
  std::uint64_t verify_seed = 1;
  verify->add_option("suite", suite,
                     "lemma_b1, metric_axioms, stability, or isomorphism")
      ->required()
      ->check(CLI::IsMember(
          {"lemma_b1", "metric_axioms", "stability", "isomorphism"}));
  verify->add_option("--count", verify_count,
                     "Instance count (default: per-suite)");
  verify->add_option("--seed", verify_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (diagram->parsed()) {
      return run_diagram(graph_path, diagram_filtration, diagram_kind,
                         diagram_flags, diagram_out);
    }
    if (distance->parsed()) {
      return run_distance(dist_a, dist_b, dist_out);
    }
    if (discriminate->parsed()) {
      return run_discriminate(corpus_dir, disc_kind, disc_filtration,
                              disc_flags, disc_format, disc_out);
    }
    if (verify->parsed()) {
      return run_verify(suite, verify_count, verify_seed);
    }
  } catch (const spectre::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const spectre::numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const spectre::property_violation& e) {
    std::cerr << "property violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable with require_subcommand(1)
}
