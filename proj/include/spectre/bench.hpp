#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectre/descriptors.hpp"
#include "spectre/metrics.hpp"

namespace spectre {

// Descriptor selector shared by the harnesses and the CLI.  ph0 is the
// persistence diagram of the vertex filtration, ph1 of the edge filtration;
// the other three are the tuple descriptors.
enum class DescriptorId { ph0, ph1, rephine, spectre, ls };

std::string to_string(DescriptorId id);            // "ph0", "ph1", ...
DescriptorId descriptor_id_from_string(const std::string& name);

// Computes the selected descriptor's canonical diagram from filtration
// values.  The policy only matters for spectre/ls.
Diagram compute_descriptor(const ColoredGraph& g, const FiltrationValues& values,
                           DescriptorId id, const SpectrumPolicy& policy);

// Projections between descriptor kinds (canonical multiset level).
Diagram project_to_rephine(const Diagram& spectre_diagram);
Diagram project_to_ls(const Diagram& spectre_diagram);

struct CorpusEntry {
  std::string name;
  ColoredGraph graph;
};

// Built-in fixtures ----------------------------------------------------------

// 4-cycle A-B-C-D with A,B red and C,D blue (vertices 0..3), edges
// A-B, C-D, A-C, B-D.
ColoredGraph two_color_cycle();
// f_v: blue=1, red=2 (vertex-filtration walkthrough graph).
ColorFiltrationSpec two_color_cycle_vertex_spec();
// f_v: blue=1, red=2; f_e: red|red=1, blue|blue=2, blue|red=3.
ColorFiltrationSpec two_color_cycle_edge_spec();

// Monochromatic star K1,3 (center 0) and path P4, both all-red.
ColoredGraph mono_star();
ColoredGraph mono_path();
// Stars K1,3 with swapped colorings: red center / blue leaves, and blue
// center / red leaves.
ColoredGraph star_red_center();
ColoredGraph star_blue_center();
// A spec with f_v(red) != f_v(blue), total on {red, blue}.
ColorFiltrationSpec two_color_spec();
// A monochromatic spec, total on {red}.
ColorFiltrationSpec mono_spec();

// P4 colored red-blue-blue-red with f_e(blue|blue) = 1 - eps and g_e
// constant 1 (f_v = g_v); the local-instability witness pair.
struct InstabilityWitness {
  ColoredGraph graph;
  ColorFiltrationSpec f;
  ColorFiltrationSpec g;
};
InstabilityWitness instability_witness(double eps);

// Strongly regular pair on 16 vertices (rook's graph of the 4x4 grid and
// the Shrikhande graph), monochromatic: a negative control no descriptor
// here separates.
ColoredGraph rook_4x4();
ColoredGraph shrikhande();

// Random colored corpus, entries named <prefix>_<i>.
std::vector<CorpusEntry> random_corpus(int count, int n, double edge_prob,
                                       const std::vector<std::string>& colors,
                                       std::uint64_t seed,
                                       const std::string& prefix = "random");

// Loads every *.json file of a directory as a graph, sorted by filename;
// entry names are the file stems.
std::vector<CorpusEntry> load_corpus_dir(const std::string& dir);

// Harnesses ------------------------------------------------------------------

struct PairVerdict {
  int a = 0, b = 0;  // indices into the corpus
  bool separated = false;
};

struct DiscriminationReport {
  DescriptorId descriptor = DescriptorId::rephine;
  std::string corpus_name;
  int pair_count = 0;
  int separated_count = 0;
  double accuracy = 0.0;
  std::vector<PairVerdict> verdicts;  // ordered by (a, b)
};

// Pairwise discrimination over all C(|corpus|,2) pairs: a pair counts as
// separated when the canonical diagrams differ (multiset_equal false at
// tol).  spec == nullopt selects the structural degree + curvature
// filtration; otherwise the explicit color spec is induced on every graph.
DiscriminationReport discriminate(const std::vector<CorpusEntry>& corpus,
                                  DescriptorId descriptor,
                                  const std::optional<ColorFiltrationSpec>& spec,
                                  double tol, const SpectrumPolicy& policy = {},
                                  const std::string& corpus_name = "corpus");

// CSV rows `pair_id,graph_a,graph_b,descriptor,separated` (with header) for
// one or more reports over the same corpus.
std::string discrimination_csv(const std::vector<CorpusEntry>& corpus,
                               const std::vector<DiscriminationReport>& reports);

// `{"corpus":...,"pairs":N,"accuracy":{"rephine":0.5,...}}`.
std::string discrimination_summary_json(const std::vector<DiscriminationReport>& reports);

struct StabilitySample {
  ColoredGraph graph;
  ColorFiltrationSpec f;
  ColorFiltrationSpec g;
  double distance = 0.0;
  double bound = 0.0;   // 3 * ||f_e - g_e||_inf + ||f_v - g_v||_inf
  bool holds = false;   // distance <= bound + 1e-9
  bool locality = false;  // g stayed within the injectivity cell of f
};

// Draws g from f by uniform perturbation of every f_v / f_e value in
// [-perturb_scale, perturb_scale], clipping f_e at the 1e-6 positivity
// floor, then evaluates the descriptor distance (d_B_R for rephine,
// d_B_SpecR for spectre) against the stability bound.  The locality flag is
// true when both sup deviations stay below half the minimum gap between
// distinct f values of the respective function.  For spectre the spec must
// be injective per function; otherwise input_error.
StabilitySample stability_sample(const ColoredGraph& g, const ColorFiltrationSpec& f,
                                 double perturb_scale, DescriptorId descriptor,
                                 std::uint64_t seed);

// Evaluates a fully specified pair instead of sampling the perturbation.
StabilitySample stability_eval(const ColoredGraph& g, const ColorFiltrationSpec& f,
                               const ColorFiltrationSpec& gspec, DescriptorId descriptor,
                               bool require_injective = true);

struct ExpressivityResult {
  bool ok = true;
  std::string witness;  // empty when ok; otherwise the violating pair
};

// Checks the containments separated(rephine) subset-of separated(spectre)
// and separated(ls) subset-of separated(spectre) over the corpus.
ExpressivityResult expressivity_ordering_check(
    const std::vector<CorpusEntry>& corpus,
    const std::optional<ColorFiltrationSpec>& spec, double tol,
    const SpectrumPolicy& policy = {});

}  // namespace spectre
