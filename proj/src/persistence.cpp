#include "spectre/persistence.hpp"

#include <algorithm>
#include <numeric>

namespace spectre {

namespace {

// Union-find over vertex indices with path compression.  Roots carry the
// elder data (component birth, representative) and the member list.
class ComponentForest {
 public:
  explicit ComponentForest(int n)
      : parent_(n), birth_(n, 0.0), rep_(n), members_(n), active_(n, false) {
    std::iota(parent_.begin(), parent_.end(), 0);
    std::iota(rep_.begin(), rep_.end(), 0);
  }

  void activate(int v, double birth) {
    active_[v] = true;
    birth_[v] = birth;
    members_[v] = {v};
  }

  bool active(int v) const { return active_[v]; }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  double birth(int root) const { return birth_[root]; }
  int rep(int root) const { return rep_[root]; }
  const std::vector<int>& members(int root) const { return members_[root]; }

  // Joins the two roots; the elder side (smaller birth, then smaller
  // representative index) survives and keeps its id.  Returns the surviving
  // root; the other root is the dying one.
  int unite(int ra, int rb) {
    bool a_elder = std::pair(birth_[ra], rep_[ra]) < std::pair(birth_[rb], rep_[rb]);
    int survivor = a_elder ? ra : rb;
    int dying = a_elder ? rb : ra;
    parent_[dying] = survivor;
    auto& into = members_[survivor];
    auto& from = members_[dying];
    into.insert(into.end(), from.begin(), from.end());
    std::sort(into.begin(), into.end());
    from.clear();
    from.shrink_to_fit();
    return survivor;
  }

 private:
  std::vector<int> parent_;
  std::vector<double> birth_;
  std::vector<int> rep_;
  std::vector<std::vector<int>> members_;
  std::vector<bool> active_;
};

}  // namespace

PersistenceResult compute_persistence(const ColoredGraph& g,
                                      const FiltrationValues& values,
                                      FiltrationKind kind,
                                      const std::vector<int>* edge_order) {
  const std::size_t m = g.edges.size();
  if (values.vertex_value.size() != static_cast<std::size_t>(g.n) ||
      values.edge_vertex_value.size() != m || values.edge_value.size() != m)
    throw input_error("persistence: filtration values do not match the graph");
  const std::vector<double>& edge_time =
      kind == FiltrationKind::edge ? values.edge_value : values.edge_vertex_value;
  if (kind == FiltrationKind::edge)
    for (double t : values.edge_value)
      if (t <= 0.0)
        throw input_error("persistence: edge filtration values must be positive");

  std::vector<int> order(m);
  if (edge_order) {
    if (edge_order->size() != m)
      throw input_error("persistence: edge_order must cover every edge");
    order = *edge_order;
    std::vector<char> seen(m, 0);
    for (int e : order) {
      if (e < 0 || e >= static_cast<int>(m) || seen[e])
        throw input_error("persistence: edge_order must be a permutation");
      seen[e] = 1;
    }
    for (std::size_t i = 1; i < m; ++i)
      if (edge_time[order[i - 1]] > edge_time[order[i]])
        throw input_error("persistence: edge_order must be sorted by value");
  } else {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::pair(edge_time[a], g.edges[a]) < std::pair(edge_time[b], g.edges[b]);
    });
  }

  // Vertices sorted by activation time (all zero for the edge kind).
  std::vector<int> vertex_order(g.n);
  std::iota(vertex_order.begin(), vertex_order.end(), 0);
  std::vector<double> vertex_time(g.n, 0.0);
  if (kind == FiltrationKind::vertex) {
    vertex_time = values.vertex_value;
    std::sort(vertex_order.begin(), vertex_order.end(), [&](int a, int b) {
      return std::pair(vertex_time[a], a) < std::pair(vertex_time[b], b);
    });
  }

  PersistenceResult result;
  MergeTrace& trace = result.trace;
  trace.kind = kind;
  ComponentForest forest(g.n);

  std::size_t vi = 0, ei = 0;
  while (vi < static_cast<std::size_t>(g.n) || ei < m) {
    double t;
    if (ei >= m)
      t = vertex_time[vertex_order[vi]];
    else if (vi >= static_cast<std::size_t>(g.n))
      t = edge_time[order[ei]];
    else
      t = std::min(vertex_time[vertex_order[vi]], edge_time[order[ei]]);

    for (; vi < static_cast<std::size_t>(g.n) && vertex_time[vertex_order[vi]] == t; ++vi)
      forest.activate(vertex_order[vi], t);

    std::size_t first_event = trace.order.size();
    for (; ei < m && edge_time[order[ei]] == t; ++ei) {
      const Edge& e = g.edges[order[ei]];
      if (!forest.active(e.first) || !forest.active(e.second))
        throw input_error("persistence: edge arrived before an endpoint");
      int ra = forest.find(e.first), rb = forest.find(e.second);
      if (ra == rb) {
        CycleEvent ev;
        ev.time = t;
        ev.edge = e;
        trace.cycles.push_back(std::move(ev));
        trace.order.push_back({MergeTrace::EventRef::Type::cycle,
                               static_cast<int>(trace.cycles.size()) - 1});
        result.diagram.dim1.push_back({t, kInf});
        continue;
      }
      MergeEvent ev;
      ev.time = t;
      ev.edge = e;
      ev.members_surviving = forest.members(ra);
      ev.members_dying = forest.members(rb);
      int survivor = forest.unite(ra, rb);
      int dying = survivor == ra ? rb : ra;
      if (survivor != ra) std::swap(ev.members_surviving, ev.members_dying);
      ev.surviving_root = survivor;
      ev.dying_root = dying;
      ev.surviving_vertex = forest.rep(survivor);
      ev.dying_vertex = forest.rep(dying);
      ev.dying_birth = forest.birth(dying);
      ev.members_after = forest.members(survivor);
      trace.merges.push_back(std::move(ev));
      trace.order.push_back({MergeTrace::EventRef::Type::merge,
                             static_cast<int>(trace.merges.size()) - 1});
      result.diagram.dim0.push_back({forest.birth(dying), t});
    }

    // Micro-order inside a timestamp is not part of the filtration; events
    // of this timestamp all see the component as it stands once the whole
    // timestamp is in.
    for (std::size_t k = first_event; k < trace.order.size(); ++k) {
      const auto& ref = trace.order[k];
      if (ref.type == MergeTrace::EventRef::Type::merge) {
        MergeEvent& ev = trace.merges[ref.index];
        ev.component_at_time = forest.members(forest.find(ev.edge.first));
      } else {
        CycleEvent& ev = trace.cycles[ref.index];
        ev.component_at_time = forest.members(forest.find(ev.edge.first));
      }
    }
  }

  std::vector<int> roots;
  for (int v = 0; v < g.n; ++v)
    if (forest.find(v) == v) roots.push_back(v);
  std::sort(roots.begin(), roots.end(), [&](int a, int b) {
    return forest.members(a).front() < forest.members(b).front();
  });
  for (int root : roots) {
    trace.final_roots.push_back(root);
    trace.final_vertices.push_back(forest.rep(root));
    trace.final_births.push_back(forest.birth(root));
    trace.final_members.push_back(forest.members(root));
    result.diagram.dim0.push_back({forest.birth(root), kInf});
  }
  return result;
}

PHDiagram compute_ph(const ColoredGraph& g, const FiltrationValues& values,
                     FiltrationKind kind) {
  return compute_persistence(g, values, kind).diagram;
}

}  // namespace spectre
