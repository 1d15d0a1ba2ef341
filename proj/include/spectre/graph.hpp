#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spectre/common.hpp"

namespace spectre {

using Edge = std::pair<int, int>;  // canonical form: first < second

// Finite simple graph with a color attached to every vertex.  Vertices are
// dense indices 0..n-1; colors are indices into color_set, which is the
// shared palette both graphs of a comparison must draw from.
struct ColoredGraph {
  int n = 0;
  std::vector<Edge> edges;              // canonical, sorted, no duplicates
  std::vector<int> color;               // per vertex, index into color_set
  std::vector<std::string> color_set;   // non-empty, no duplicate names

  const std::string& color_name(int v) const { return color_set[color[v]]; }
  int degree(int v) const;
  std::vector<std::vector<int>> adjacency() const;
  bool has_edge(int u, int w) const;
};

// Bijection 0..n-1 -> 0..n-1; perm[v] is the new index of vertex v.
using VertexPermutation = std::vector<int>;

// Parses the graph JSON document:
//   {"color_set":["red","blue"],
//    "vertices":[{"id":0,"color":"red"},...],
//    "edges":[[0,1],[1,2]]}
// Vertex ids must be exactly 0..n-1; edge endpoints may appear in either
// order and are canonicalized.  Throws input_error on malformed documents,
// out-of-range indices, unknown colors, self-loops, or duplicate edges.
ColoredGraph parse_graph(const std::string& json_text);

// Inverse of parse_graph; emits the same schema with canonical edges.
std::string serialize_graph(const ColoredGraph& g);

// Relabels vertices: vertex v becomes perm[v].  Colors and edges follow.
ColoredGraph permute(const ColoredGraph& g, const VertexPermutation& perm);

// Identity test used by the invariance checks: equal vertex count, palette,
// coloring and edge set.
bool operator==(const ColoredGraph& a, const ColoredGraph& b);

// Erdos-Renyi style sample: each of the C(n,2) edges kept with probability
// edge_prob, each vertex colored uniformly from colors.  Deterministic for a
// fixed seed.
ColoredGraph random_colored_graph(int n, double edge_prob,
                                  const std::vector<std::string>& colors,
                                  std::uint64_t seed);

// Uniformly random bijection on 0..n-1.
VertexPermutation random_permutation(int n, std::uint64_t seed);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const ColoredGraph& g);

}  // namespace spectre
