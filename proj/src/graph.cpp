#include "spectre/graph.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace spectre {

namespace {

using nlohmann::json;

Edge canonical_edge(int u, int w) { return u < w ? Edge{u, w} : Edge{w, u}; }

}  // namespace

int ColoredGraph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges) d += (a == v) + (b == v);
  return d;
}

std::vector<std::vector<int>> ColoredGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

bool ColoredGraph::has_edge(int u, int w) const {
  return std::binary_search(edges.begin(), edges.end(), canonical_edge(u, w));
}

ColoredGraph parse_graph(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("graph: malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("color_set") || !doc.contains("vertices") ||
      !doc.contains("edges"))
    throw input_error("graph: expected object with color_set, vertices, edges");

  ColoredGraph g;
  for (const auto& c : doc["color_set"]) {
    if (!c.is_string()) throw input_error("graph: color_set entries must be strings");
    g.color_set.push_back(c.get<std::string>());
  }
  if (g.color_set.empty()) throw input_error("graph: color_set must be non-empty");
  {
    std::set<std::string> uniq(g.color_set.begin(), g.color_set.end());
    if (uniq.size() != g.color_set.size())
      throw input_error("graph: duplicate color in color_set");
  }

  const auto& verts = doc["vertices"];
  if (!verts.is_array()) throw input_error("graph: vertices must be an array");
  g.n = static_cast<int>(verts.size());
  if (g.n == 0) throw input_error("graph: vertex list must be non-empty");
  g.color.assign(g.n, -1);
  for (const auto& v : verts) {
    if (!v.is_object() || !v.contains("id") || !v.contains("color"))
      throw input_error("graph: vertex entries need id and color");
    if (!v["id"].is_number_integer())
      throw input_error("graph: vertex id must be an integer");
    int id = v["id"].get<int>();
    if (id < 0 || id >= g.n)
      throw input_error("graph: vertex id " + std::to_string(id) +
                        " outside 0.." + std::to_string(g.n - 1));
    if (g.color[id] != -1)
      throw input_error("graph: duplicate vertex id " + std::to_string(id));
    std::string cname = v["color"].get<std::string>();
    auto it = std::find(g.color_set.begin(), g.color_set.end(), cname);
    if (it == g.color_set.end())
      throw input_error("graph: color '" + cname + "' not in color_set");
    g.color[id] = static_cast<int>(it - g.color_set.begin());
  }

  std::set<Edge> seen;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw input_error("graph: edges must be [u, v] integer pairs");
    int u = e[0].get<int>(), w = e[1].get<int>();
    if (u < 0 || u >= g.n || w < 0 || w >= g.n)
      throw input_error("graph: edge endpoint out of range");
    if (u == w) throw input_error("graph: self-loop at vertex " + std::to_string(u));
    Edge ce = canonical_edge(u, w);
    if (!seen.insert(ce).second)
      throw input_error("graph: duplicate edge [" + std::to_string(ce.first) + ", " +
                        std::to_string(ce.second) + "]");
  }
  g.edges.assign(seen.begin(), seen.end());
  return g;
}

std::string serialize_graph(const ColoredGraph& g) {
  json doc;
  doc["color_set"] = g.color_set;
  doc["vertices"] = json::array();
  for (int v = 0; v < g.n; ++v)
    doc["vertices"].push_back({{"id", v}, {"color", g.color_name(v)}});
  doc["edges"] = json::array();
  for (const auto& [u, w] : g.edges) doc["edges"].push_back({u, w});
  return doc.dump();
}

ColoredGraph permute(const ColoredGraph& g, const VertexPermutation& perm) {
  if (static_cast<int>(perm.size()) != g.n)
    throw input_error("permute: permutation size does not match vertex count");
  std::vector<bool> hit(g.n, false);
  for (int v : perm) {
    if (v < 0 || v >= g.n || hit[v]) throw input_error("permute: not a bijection");
    hit[v] = true;
  }
  ColoredGraph h;
  h.n = g.n;
  h.color_set = g.color_set;
  h.color.assign(g.n, -1);
  for (int v = 0; v < g.n; ++v) h.color[perm[v]] = g.color[v];
  h.edges.reserve(g.edges.size());
  for (const auto& [u, w] : g.edges) h.edges.push_back(canonical_edge(perm[u], perm[w]));
  std::sort(h.edges.begin(), h.edges.end());
  return h;
}

bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
  return a.n == b.n && a.edges == b.edges && a.color == b.color &&
         a.color_set == b.color_set;
}

ColoredGraph random_colored_graph(int n, double edge_prob,
                                  const std::vector<std::string>& colors,
                                  std::uint64_t seed) {
  if (n < 1) throw input_error("random_colored_graph: need n >= 1");
  if (colors.empty()) throw input_error("random_colored_graph: need at least one color");
  if (edge_prob < 0.0 || edge_prob > 1.0)
    throw input_error("random_colored_graph: edge_prob outside [0, 1]");
  Rng rng(seed);
  ColoredGraph g;
  g.n = n;
  g.color_set = colors;
  g.color.resize(n);
  for (int v = 0; v < n; ++v) g.color[v] = static_cast<int>(rng.index(colors.size()));
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      if (rng.uniform01() < edge_prob) g.edges.push_back({u, w});
  return g;
}

VertexPermutation random_permutation(int n, std::uint64_t seed) {
  VertexPermutation perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Rng rng(seed);
  rng.shuffle(perm);
  return perm;
}

std::vector<std::vector<int>> connected_components(const ColoredGraph& g) {
  std::vector<int> comp(g.n, -1);
  auto adj = g.adjacency();
  int nc = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] != -1) continue;
    stack.push_back(s);
    comp[s] = nc;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (comp[w] == -1) {
          comp[w] = nc;
          stack.push_back(w);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(nc);
  for (int v = 0; v < g.n; ++v) out[comp[v]].push_back(v);
  return out;  // vertex order ascending per component; components by smallest member
}

}  // namespace spectre
