#include "spectre/descriptors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <json.hpp>

namespace spectre {

namespace {

using nlohmann::json;

// Per-vertex color terms of Def-2.3 shape: alpha is the vertex's own
// filtration value, gamma the minimum incident edge value.
struct ColorTerms {
  std::vector<double> alpha;
  std::vector<double> gamma;
  std::vector<bool> sentinel;
};

ColorTerms color_terms(const ColoredGraph& g, const FiltrationValues& values) {
  ColorTerms ct;
  ct.alpha = values.vertex_value;
  ct.gamma.assign(g.n, 0.0);
  ct.sentinel.assign(g.n, true);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    for (int v : {g.edges[i].first, g.edges[i].second}) {
      if (ct.sentinel[v]) {
        ct.gamma[v] = values.edge_value[i];
        ct.sentinel[v] = false;
      } else {
        ct.gamma[v] = std::min(ct.gamma[v], values.edge_value[i]);
      }
    }
  }
  return ct;
}

// Which of the two live representatives dies at a merge: greater alpha,
// then lower gamma, then lower index.  flip_index_tie is the test hook for
// the decision-rule invariance property.
int choose_dying(int va, int vb, const ColorTerms& ct, bool flip_index_tie) {
  if (ct.alpha[va] != ct.alpha[vb]) return ct.alpha[va] > ct.alpha[vb] ? va : vb;
  if (ct.gamma[va] != ct.gamma[vb]) return ct.gamma[va] < ct.gamma[vb] ? va : vb;
  return flip_index_tie ? std::max(va, vb) : std::min(va, vb);
}

Diagram replay_rephine(const ColoredGraph& g, const FiltrationValues& values,
                       const SpectrumPolicy* policy, bool flip_index_tie) {
  PersistenceResult pers = compute_persistence(g, values, FiltrationKind::edge);
  const MergeTrace& trace = pers.trace;
  ColorTerms ct = color_terms(g, values);

  Diagram out;
  out.kind = policy ? DiagramKind::spectre : DiagramKind::rephine;
  out.edge_shift = values.edge_shift;

  const int total_events =
      static_cast<int>(trace.order.size() + trace.final_roots.size());
  int event_index = 0;
  // One filtered subgraph per distinct event time, shared by its events.
  std::map<double, ColoredGraph> sublevel;
  auto rho_for = [&](double time, const std::vector<int>& component,
                     DescriptorTuple& tuple) {
    if (!policy) return;
    const ColoredGraph* host = &g;
    if (std::isfinite(time)) {
      auto it = sublevel.find(time);
      if (it == sublevel.end())
        it = sublevel
                 .emplace(time,
                          subgraph_at(g, values, FiltrationKind::edge, time).graph)
                 .first;
      host = &it->second;
    }
    auto spec = spectrum_for_event(*host, component, *policy, event_index, total_events);
    if (!spec) {
      tuple.rho_skipped = true;
      return;
    }
    tuple.rho = drop_zero_eigenvalues(std::move(spec->values), 1);
  };

  std::vector<int> alive(g.n);
  for (int v = 0; v < g.n; ++v) alive[v] = v;

  for (const auto& ref : trace.order) {
    if (ref.type == MergeTrace::EventRef::Type::merge) {
      const MergeEvent& ev = trace.merges[ref.index];
      int va = alive[ev.surviving_root];
      int vb = alive[ev.dying_root];
      int dying = choose_dying(va, vb, ct, flip_index_tie);
      alive[ev.surviving_root] = dying == va ? vb : va;
      DescriptorTuple t;
      t.b = 0.0;
      t.d = ev.time;
      t.alpha = ct.alpha[dying];
      t.gamma = ct.gamma[dying];
      t.gamma_sentinel = ct.sentinel[dying];
      t.src_vertex = dying;
      rho_for(ev.time, ev.component_at_time, t);
      out.dim0.push_back(std::move(t));
    } else {
      const CycleEvent& ev = trace.cycles[ref.index];
      DescriptorTuple t;
      t.b = 1.0;
      t.d = ev.time;
      t.src_edge = ev.edge;
      rho_for(ev.time, ev.component_at_time, t);
      out.dim1.push_back(std::move(t));
    }
    ++event_index;
  }

  for (std::size_t i = 0; i < trace.final_roots.size(); ++i) {
    int v = alive[trace.final_roots[i]];
    DescriptorTuple t;
    t.b = 0.0;
    t.d = kInf;
    t.alpha = ct.alpha[v];
    t.gamma = ct.gamma[v];
    t.gamma_sentinel = ct.sentinel[v];
    t.src_vertex = v;
    rho_for(kInf, trace.final_members[i], t);
    out.dim0.push_back(std::move(t));
    ++event_index;
  }

  for (const auto& t : out.dim0) out.gamma_sentinels += t.gamma_sentinel ? 1 : 0;
  return out;
}

int rho_compare(const DescriptorTuple& x, const DescriptorTuple& y) {
  if (x.rho_skipped != y.rho_skipped) return x.rho_skipped ? 1 : -1;
  std::size_t n = std::min(x.rho.size(), y.rho.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x.rho[i] < y.rho[i]) return -1;
    if (x.rho[i] > y.rho[i]) return 1;
  }
  if (x.rho.size() != y.rho.size()) return x.rho.size() < y.rho.size() ? -1 : 1;
  return 0;
}

bool tuple_less(const DescriptorTuple& x, const DescriptorTuple& y) {
  if (x.b != y.b) return x.b < y.b;
  if (x.d != y.d) return x.d < y.d;
  if (x.alpha != y.alpha) return x.alpha < y.alpha;
  if (x.gamma != y.gamma) return x.gamma < y.gamma;
  return rho_compare(x, y) < 0;
}

bool close(double a, double b, double tol) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::fabs(a - b) <= tol;
}

json value_or_inf(double x) {
  if (std::isinf(x)) return json("inf");
  return json(x);
}

double parse_value_or_inf(const json& v, const std::string& what) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return kInf;
    throw input_error("diagram: " + what + " must be a number or \"inf\"");
  }
  if (!v.is_number()) throw input_error("diagram: " + what + " must be a number");
  return v.get<double>();
}

}  // namespace

std::string to_string(DiagramKind kind) {
  switch (kind) {
    case DiagramKind::ph: return "PH";
    case DiagramKind::rephine: return "RePHINE";
    case DiagramKind::spectre: return "SpectRe";
    case DiagramKind::ls: return "LS";
  }
  throw input_error("diagram: unknown kind");
}

DiagramKind diagram_kind_from_string(const std::string& name) {
  if (name == "PH") return DiagramKind::ph;
  if (name == "RePHINE") return DiagramKind::rephine;
  if (name == "SpectRe") return DiagramKind::spectre;
  if (name == "LS") return DiagramKind::ls;
  throw input_error("diagram: unknown kind '" + name + "'");
}

Diagram rephine_from_values(const ColoredGraph& g, const FiltrationValues& values,
                            bool flip_index_ties) {
  return replay_rephine(g, values, nullptr, flip_index_ties);
}

Diagram compute_rephine(const ColoredGraph& g, const ColorFiltrationSpec& spec) {
  return rephine_from_values(g, induce(spec, g));
}

Diagram spectre_from_values(const ColoredGraph& g, const FiltrationValues& values,
                            const SpectrumPolicy& policy) {
  return replay_rephine(g, values, &policy, false);
}

Diagram compute_spectre(const ColoredGraph& g, const ColorFiltrationSpec& spec,
                        const SpectrumPolicy& policy) {
  return spectre_from_values(g, induce(spec, g), policy);
}

Diagram ls_from_values(const ColoredGraph& g, const FiltrationValues& values,
                       const SpectrumPolicy& policy) {
  Diagram d = spectre_from_values(g, values, policy);
  d.kind = DiagramKind::ls;
  for (auto* dim : {&d.dim0, &d.dim1})
    for (auto& t : *dim) {
      t.alpha = 0.0;
      t.gamma = 0.0;
    }
  return d;
}

Diagram compute_ls(const ColoredGraph& g, const ColorFiltrationSpec& spec,
                   const SpectrumPolicy& policy) {
  return ls_from_values(g, induce(spec, g), policy);
}

Diagram diagram_from_ph(const PHDiagram& ph) {
  Diagram d;
  d.kind = DiagramKind::ph;
  for (const auto& p : ph.dim0) {
    DescriptorTuple t;
    t.b = p.birth;
    t.d = p.death;
    d.dim0.push_back(std::move(t));
  }
  for (const auto& p : ph.dim1) {
    DescriptorTuple t;
    t.b = p.birth;
    t.d = p.death;
    d.dim1.push_back(std::move(t));
  }
  return d;
}

Diagram canonicalize(Diagram d) {
  std::stable_sort(d.dim0.begin(), d.dim0.end(), tuple_less);
  std::stable_sort(d.dim1.begin(), d.dim1.end(), tuple_less);
  return d;
}

bool multiset_equal(const Diagram& a, const Diagram& b, double tol) {
  if (a.kind != b.kind)
    throw input_error("multiset_equal: cannot compare " + to_string(a.kind) + " with " +
                      to_string(b.kind));
  const bool with_color = a.kind == DiagramKind::rephine || a.kind == DiagramKind::spectre;
  const bool with_rho = a.kind == DiagramKind::spectre || a.kind == DiagramKind::ls;
  Diagram ca = canonicalize(a), cb = canonicalize(b);
  for (auto [da, db] : {std::pair{&ca.dim0, &cb.dim0}, std::pair{&ca.dim1, &cb.dim1}}) {
    if (da->size() != db->size()) return false;
    for (std::size_t i = 0; i < da->size(); ++i) {
      const DescriptorTuple& x = (*da)[i];
      const DescriptorTuple& y = (*db)[i];
      if (!close(x.b, y.b, tol) || !close(x.d, y.d, tol)) return false;
      if (with_color && (!close(x.alpha, y.alpha, tol) || !close(x.gamma, y.gamma, tol)))
        return false;
      if (with_rho) {
        if (x.rho_skipped != y.rho_skipped) return false;
        if (x.rho.size() != y.rho.size()) return false;
        for (std::size_t k = 0; k < x.rho.size(); ++k)
          if (!close(x.rho[k], y.rho[k], tol)) return false;
      }
    }
  }
  return true;
}

std::string serialize_diagram(const Diagram& d) {
  Diagram c = canonicalize(d);
  const bool with_color =
      c.kind == DiagramKind::rephine || c.kind == DiagramKind::spectre;
  const bool with_rho = c.kind == DiagramKind::spectre || c.kind == DiagramKind::ls;
  json doc;
  doc["kind"] = to_string(c.kind);
  for (auto [name, dim] :
       {std::pair{"dim0", &c.dim0}, std::pair{"dim1", &c.dim1}}) {
    json rows = json::array();
    for (const DescriptorTuple& t : *dim) {
      json row = json::array();
      row.push_back(value_or_inf(t.b));
      row.push_back(value_or_inf(t.d));
      if (with_color) {
        row.push_back(t.alpha);
        row.push_back(t.gamma);
      }
      if (with_rho) {
        if (t.rho_skipped) row.push_back("skipped");
        else row.push_back(t.rho);
      }
      rows.push_back(std::move(row));
    }
    doc[name] = std::move(rows);
  }
  if (c.edge_shift != 0.0 || c.gamma_sentinels != 0) {
    json meta = json::object();
    if (c.edge_shift != 0.0) meta["edge_shift"] = c.edge_shift;
    if (c.gamma_sentinels != 0) meta["gamma_sentinels"] = c.gamma_sentinels;
    doc["meta"] = std::move(meta);
  }
  return doc.dump();
}

Diagram parse_diagram(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("diagram: malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("dim0") ||
      !doc.contains("dim1"))
    throw input_error("diagram: expected object with kind, dim0, dim1");
  Diagram d;
  d.kind = diagram_kind_from_string(doc["kind"].get<std::string>());
  const bool with_color = d.kind == DiagramKind::rephine || d.kind == DiagramKind::spectre;
  const bool with_rho = d.kind == DiagramKind::spectre || d.kind == DiagramKind::ls;
  const std::size_t row_len = 2 + (with_color ? 2 : 0) + (with_rho ? 1 : 0);
  for (auto [name, dim] : {std::pair{"dim0", &d.dim0}, std::pair{"dim1", &d.dim1}}) {
    if (!doc[name].is_array())
      throw input_error(std::string("diagram: ") + name + " must be an array");
    for (const json& row : doc[name]) {
      if (!row.is_array() || row.size() != row_len)
        throw input_error(std::string("diagram: ") + name + " rows for kind " +
                          to_string(d.kind) + " need " + std::to_string(row_len) +
                          " entries");
      DescriptorTuple t;
      t.b = parse_value_or_inf(row[0], "b");
      t.d = parse_value_or_inf(row[1], "d");
      std::size_t at = 2;
      if (with_color) {
        t.alpha = parse_value_or_inf(row[at++], "alpha");
        t.gamma = parse_value_or_inf(row[at++], "gamma");
      }
      if (with_rho) {
        const json& rho = row[at];
        if (rho.is_string() && rho.get<std::string>() == "skipped") {
          t.rho_skipped = true;
        } else if (rho.is_array()) {
          for (const json& x : rho) {
            if (!x.is_number()) throw input_error("diagram: rho entries must be numbers");
            t.rho.push_back(x.get<double>());
          }
          if (!std::is_sorted(t.rho.begin(), t.rho.end()))
            throw input_error("diagram: rho lists must be sorted ascending");
        } else {
          throw input_error("diagram: rho must be an array or \"skipped\"");
        }
      }
      dim->push_back(std::move(t));
    }
  }
  if (doc.contains("meta") && doc["meta"].is_object()) {
    if (doc["meta"].contains("edge_shift"))
      d.edge_shift = doc["meta"]["edge_shift"].get<double>();
    if (doc["meta"].contains("gamma_sentinels"))
      d.gamma_sentinels = doc["meta"]["gamma_sentinels"].get<int>();
  }
  return d;
}

}  // namespace spectre
