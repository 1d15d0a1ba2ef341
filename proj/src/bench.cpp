#include "spectre/bench.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace spectre {

namespace {

using nlohmann::json;

ColoredGraph make_graph(int n, std::vector<std::string> color_set,
                        std::vector<int> color, std::vector<Edge> edges) {
  ColoredGraph g;
  g.n = n;
  g.color_set = std::move(color_set);
  g.color = std::move(color);
  g.edges = std::move(edges);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

// Minimum gap between distinct values of a map; +inf when fewer than two
// distinct values.
template <typename Map>
double min_gap(const Map& m) {
  std::vector<double> vals;
  for (const auto& [k, v] : m) vals.push_back(v);
  std::sort(vals.begin(), vals.end());
  double gap = kInf;
  for (std::size_t i = 1; i < vals.size(); ++i)
    if (vals[i] != vals[i - 1]) gap = std::min(gap, vals[i] - vals[i - 1]);
  return gap;
}

template <typename Map>
bool injective_values(const Map& m) {
  std::vector<double> vals;
  for (const auto& [k, v] : m) vals.push_back(v);
  std::sort(vals.begin(), vals.end());
  return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
}

}  // namespace

std::string to_string(DescriptorId id) {
  switch (id) {
    case DescriptorId::ph0: return "ph0";
    case DescriptorId::ph1: return "ph1";
    case DescriptorId::rephine: return "rephine";
    case DescriptorId::spectre: return "spectre";
    case DescriptorId::ls: return "ls";
  }
  throw input_error("descriptor: unknown id");
}

DescriptorId descriptor_id_from_string(const std::string& name) {
  if (name == "ph0") return DescriptorId::ph0;
  if (name == "ph1") return DescriptorId::ph1;
  if (name == "rephine") return DescriptorId::rephine;
  if (name == "spectre") return DescriptorId::spectre;
  if (name == "ls") return DescriptorId::ls;
  throw input_error("descriptor: unknown kind '" + name + "'");
}

Diagram compute_descriptor(const ColoredGraph& g, const FiltrationValues& values,
                           DescriptorId id, const SpectrumPolicy& policy) {
  switch (id) {
    case DescriptorId::ph0:
      return canonicalize(diagram_from_ph(compute_ph(g, values, FiltrationKind::vertex)));
    case DescriptorId::ph1:
      return canonicalize(diagram_from_ph(compute_ph(g, values, FiltrationKind::edge)));
    case DescriptorId::rephine:
      return canonicalize(rephine_from_values(g, values));
    case DescriptorId::spectre:
      return canonicalize(spectre_from_values(g, values, policy));
    case DescriptorId::ls:
      return canonicalize(ls_from_values(g, values, policy));
  }
  throw input_error("descriptor: unknown id");
}

Diagram project_to_rephine(const Diagram& spectre_diagram) {
  if (spectre_diagram.kind != DiagramKind::spectre)
    throw input_error("project_to_rephine: expects a SpectRe diagram");
  Diagram d = spectre_diagram;
  d.kind = DiagramKind::rephine;
  for (auto* dim : {&d.dim0, &d.dim1})
    for (auto& t : *dim) {
      t.rho.clear();
      t.rho_skipped = false;
    }
  return canonicalize(std::move(d));
}

Diagram project_to_ls(const Diagram& spectre_diagram) {
  if (spectre_diagram.kind != DiagramKind::spectre)
    throw input_error("project_to_ls: expects a SpectRe diagram");
  Diagram d = spectre_diagram;
  d.kind = DiagramKind::ls;
  for (auto* dim : {&d.dim0, &d.dim1})
    for (auto& t : *dim) {
      t.alpha = 0.0;
      t.gamma = 0.0;
    }
  return canonicalize(std::move(d));
}

ColoredGraph two_color_cycle() {
  return make_graph(4, {"red", "blue"}, {0, 0, 1, 1}, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
}

ColorFiltrationSpec two_color_cycle_vertex_spec() {
  ColorFiltrationSpec spec;
  spec.f_v = {{"blue", 1.0}, {"red", 2.0}};
  spec.f_e = {{ColorFiltrationSpec::key("red", "red"), 1.0},
              {ColorFiltrationSpec::key("blue", "blue"), 2.0},
              {ColorFiltrationSpec::key("red", "blue"), 3.0}};
  return spec;
}

ColorFiltrationSpec two_color_cycle_edge_spec() { return two_color_cycle_vertex_spec(); }

ColoredGraph mono_star() {
  return make_graph(4, {"red"}, {0, 0, 0, 0}, {{0, 1}, {0, 2}, {0, 3}});
}

ColoredGraph mono_path() {
  return make_graph(4, {"red"}, {0, 0, 0, 0}, {{0, 1}, {1, 2}, {2, 3}});
}

ColoredGraph star_red_center() {
  return make_graph(4, {"red", "blue"}, {0, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}});
}

ColoredGraph star_blue_center() {
  return make_graph(4, {"red", "blue"}, {1, 0, 0, 0}, {{0, 1}, {0, 2}, {0, 3}});
}

ColorFiltrationSpec two_color_spec() { return two_color_cycle_vertex_spec(); }

ColorFiltrationSpec mono_spec() {
  ColorFiltrationSpec spec;
  spec.f_v = {{"red", 1.0}};
  spec.f_e = {{ColorFiltrationSpec::key("red", "red"), 1.0}};
  return spec;
}

InstabilityWitness instability_witness(double eps) {
  if (!(eps > 0.0) || eps >= 1.0)
    throw input_error("instability_witness: eps must lie in (0, 1)");
  InstabilityWitness w;
  w.graph = make_graph(4, {"red", "blue"}, {0, 1, 1, 0}, {{0, 1}, {1, 2}, {2, 3}});
  w.f.f_v = {{"blue", 1.0}, {"red", 2.0}};
  w.f.f_e = {{ColorFiltrationSpec::key("red", "red"), 1.0},
             {ColorFiltrationSpec::key("red", "blue"), 1.0},
             {ColorFiltrationSpec::key("blue", "blue"), 1.0 - eps}};
  w.g.f_v = w.f.f_v;
  w.g.f_e = {{ColorFiltrationSpec::key("red", "red"), 1.0},
             {ColorFiltrationSpec::key("red", "blue"), 1.0},
             {ColorFiltrationSpec::key("blue", "blue"), 1.0}};
  return w;
}

ColoredGraph rook_4x4() {
  std::vector<Edge> edges;
  auto id = [](int i, int j) { return 4 * i + j; };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      for (int j2 = j + 1; j2 < 4; ++j2) edges.push_back({id(i, j), id(i, j2)});
      for (int i2 = i + 1; i2 < 4; ++i2) edges.push_back({id(i, j), id(i2, j)});
    }
  return make_graph(16, {"gray"}, std::vector<int>(16, 0), std::move(edges));
}

ColoredGraph shrikhande() {
  std::set<Edge> edges;
  auto id = [](int a, int b) { return 4 * ((a % 4 + 4) % 4) + ((b % 4 + 4) % 4); };
  const int steps[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (const auto& s : steps) {
        int u = id(a, b), w = id(a + s[0], b + s[1]);
        edges.insert(u < w ? Edge{u, w} : Edge{w, u});
      }
  return make_graph(16, {"gray"}, std::vector<int>(16, 0),
                    {edges.begin(), edges.end()});
}

std::vector<CorpusEntry> random_corpus(int count, int n, double edge_prob,
                                       const std::vector<std::string>& colors,
                                       std::uint64_t seed, const std::string& prefix) {
  std::vector<CorpusEntry> corpus;
  corpus.reserve(count);
  Rng rng(seed);
  for (int i = 0; i < count; ++i)
    corpus.push_back(
        {prefix + "_" + std::to_string(i),
         random_colored_graph(n, edge_prob, colors, rng.next_u64())});
  return corpus;
}

std::vector<CorpusEntry> load_corpus_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw input_error("corpus: '" + dir + "' is not a directory");
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  std::vector<CorpusEntry> corpus;
  for (const auto& p : paths) {
    std::ifstream in(p);
    if (!in) throw input_error("corpus: cannot read '" + p.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    try {
      corpus.push_back({p.stem().string(), parse_graph(text.str())});
    } catch (const input_error& e) {
      throw input_error("corpus: " + p.string() + ": " + e.what());
    }
  }
  return corpus;
}

namespace {

std::vector<Diagram> corpus_diagrams(const std::vector<CorpusEntry>& corpus,
                                     DescriptorId descriptor,
                                     const std::optional<ColorFiltrationSpec>& spec,
                                     const SpectrumPolicy& policy) {
  std::vector<Diagram> out;
  out.reserve(corpus.size());
  for (const auto& entry : corpus) {
    FiltrationValues values =
        spec ? induce(*spec, entry.graph) : degree_filtration(entry.graph);
    out.push_back(compute_descriptor(entry.graph, values, descriptor, policy));
  }
  return out;
}

DiscriminationReport report_from_diagrams(const std::vector<Diagram>& diagrams,
                                          DescriptorId descriptor, double tol,
                                          const std::string& corpus_name) {
  DiscriminationReport report;
  report.descriptor = descriptor;
  report.corpus_name = corpus_name;
  const int n = static_cast<int>(diagrams.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool separated = !multiset_equal(diagrams[a], diagrams[b], tol);
      report.verdicts.push_back({a, b, separated});
      ++report.pair_count;
      report.separated_count += separated ? 1 : 0;
    }
  report.accuracy = report.pair_count == 0
                        ? 0.0
                        : static_cast<double>(report.separated_count) / report.pair_count;
  return report;
}

}  // namespace

DiscriminationReport discriminate(const std::vector<CorpusEntry>& corpus,
                                  DescriptorId descriptor,
                                  const std::optional<ColorFiltrationSpec>& spec,
                                  double tol, const SpectrumPolicy& policy,
                                  const std::string& corpus_name) {
  return report_from_diagrams(corpus_diagrams(corpus, descriptor, spec, policy),
                              descriptor, tol, corpus_name);
}

std::string discrimination_csv(const std::vector<CorpusEntry>& corpus,
                               const std::vector<DiscriminationReport>& reports) {
  std::ostringstream out;
  out << "pair_id,graph_a,graph_b,descriptor,separated\n";
  for (const auto& report : reports) {
    int pair_id = 0;
    for (const auto& v : report.verdicts)
      out << pair_id++ << ',' << corpus[v.a].name << ',' << corpus[v.b].name << ','
          << to_string(report.descriptor) << ',' << (v.separated ? "true" : "false")
          << '\n';
  }
  return out.str();
}

std::string discrimination_summary_json(const std::vector<DiscriminationReport>& reports) {
  json doc;
  doc["corpus"] = reports.empty() ? "" : reports.front().corpus_name;
  doc["pairs"] = reports.empty() ? 0 : reports.front().pair_count;
  doc["accuracy"] = json::object();
  for (const auto& report : reports)
    doc["accuracy"][to_string(report.descriptor)] = report.accuracy;
  return doc.dump();
}

StabilitySample stability_eval(const ColoredGraph& g, const ColorFiltrationSpec& f,
                               const ColorFiltrationSpec& gspec, DescriptorId descriptor,
                               bool require_injective) {
  if (descriptor != DescriptorId::rephine && descriptor != DescriptorId::spectre)
    throw input_error("stability: descriptor must be rephine or spectre");
  const bool injective = injective_values(f.f_v) && injective_values(f.f_e);
  if (descriptor == DescriptorId::spectre && require_injective && !injective)
    throw input_error("stability: SpectRe locality run requires injective f");

  StabilitySample sample;
  sample.graph = g;
  sample.f = f;
  sample.g = gspec;
  auto [dv, de] = filtration_sup_distance(f, gspec);
  sample.bound = 3.0 * de + dv;
  if (descriptor == DescriptorId::rephine) {
    sample.distance = d_B_R(compute_rephine(g, f), compute_rephine(g, gspec)).value;
  } else {
    SpectrumPolicy policy;  // dense spectra; stability claims concern exact rho
    sample.distance =
        d_B_SpecR(compute_spectre(g, f, policy), compute_spectre(g, gspec, policy)).value;
  }
  sample.holds = sample.distance <= sample.bound + 1e-9;
  sample.locality =
      injective && dv < min_gap(f.f_v) / 2.0 && de < min_gap(f.f_e) / 2.0;
  return sample;
}

StabilitySample stability_sample(const ColoredGraph& g, const ColorFiltrationSpec& f,
                                 double perturb_scale, DescriptorId descriptor,
                                 std::uint64_t seed) {
  if (perturb_scale < 0.0) throw input_error("stability: perturb_scale must be >= 0");
  Rng rng(seed);
  ColorFiltrationSpec gspec = f;
  for (auto& [color, value] : gspec.f_v)
    value += rng.uniform(-perturb_scale, perturb_scale);
  for (auto& [pair_key, value] : gspec.f_e)
    value = std::max(value + rng.uniform(-perturb_scale, perturb_scale), 1e-6);
  return stability_eval(g, f, gspec, descriptor, /*require_injective=*/true);
}

ExpressivityResult expressivity_ordering_check(
    const std::vector<CorpusEntry>& corpus,
    const std::optional<ColorFiltrationSpec>& spec, double tol,
    const SpectrumPolicy& policy) {
  // One SpectRe pass; RePHINE and LS views are projections of it.
  std::vector<Diagram> spectre_diagrams =
      corpus_diagrams(corpus, DescriptorId::spectre, spec, policy);
  std::vector<Diagram> rephine_diagrams, ls_diagrams;
  for (const auto& d : spectre_diagrams) {
    rephine_diagrams.push_back(project_to_rephine(d));
    ls_diagrams.push_back(project_to_ls(d));
  }
  ExpressivityResult result;
  const int n = static_cast<int>(corpus.size());
  for (int a = 0; a < n && result.ok; ++a)
    for (int b = a + 1; b < n && result.ok; ++b) {
      bool sep_spectre = !multiset_equal(spectre_diagrams[a], spectre_diagrams[b], tol);
      if (sep_spectre) continue;
      if (!multiset_equal(rephine_diagrams[a], rephine_diagrams[b], tol)) {
        result.ok = false;
        result.witness = "rephine separates (" + corpus[a].name + ", " + corpus[b].name +
                         ") but spectre does not";
      } else if (!multiset_equal(ls_diagrams[a], ls_diagrams[b], tol)) {
        result.ok = false;
        result.witness = "ls separates (" + corpus[a].name + ", " + corpus[b].name +
                         ") but spectre does not";
      }
    }
  return result;
}

}  // namespace spectre
