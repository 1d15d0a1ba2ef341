#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spectre/graph.hpp"

namespace spectre {

// Color-indexed filtration pair: a vertex function on colors and a strictly
// positive symmetric edge function on unordered color pairs.  Keys of f_e are
// lexicographically sorted color-name pairs.
struct ColorFiltrationSpec {
  std::map<std::string, double> f_v;
  std::map<std::pair<std::string, std::string>, double> f_e;

  static std::pair<std::string, std::string> key(const std::string& a,
                                                 const std::string& b) {
    return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  }
  double vertex_value(const std::string& color) const;
  double edge_value(const std::string& a, const std::string& b) const;
};

// Parses / emits the filtration JSON document:
//   {"f_v":{"red":2.0,"blue":1.0},
//    "f_e":{"blue|blue":2.0,"blue|red":3.0,"red|red":1.0}}
// f_e keys join the sorted color pair with '|'.  Values must be finite and
// f_e values strictly positive.
ColorFiltrationSpec parse_filtration(const std::string& json_text);
std::string serialize_filtration(const ColorFiltrationSpec& spec);

// Which of the two sublevel constructions a computation runs on.
//   vertex: vertices enter at their own value, an edge enters at the max of
//           its endpoint values.
//   edge:   every vertex enters at 0, an edge enters at its edge value.
enum class FiltrationKind { vertex, edge };

// Per-vertex and per-edge filtration values on one concrete graph.  This is
// the common interface the persistence and descriptor layers consume; both
// color-indexed specs and structural filtrations lower to it.
// edge_vertex_value[i] caches max(vertex_value[u], vertex_value[w]) for
// edges[i]; edge_value[i] is the edge-filtration time of edges[i].
struct FiltrationValues {
  std::vector<double> vertex_value;
  std::vector<double> edge_vertex_value;
  std::vector<double> edge_value;
  // Shift that was added to raw edge values to make them strictly positive
  // (0.0 when the raw values already were).
  double edge_shift = 0.0;
};

// Evaluates a color spec on a graph.  Throws input_error if the spec lacks a
// value for a color or color pair the graph uses, or if an f_e value is not
// strictly positive.
FiltrationValues induce(const ColorFiltrationSpec& spec, const ColoredGraph& g);

// Raw augmented Forman-Ricci curvature per edge (aligned with g.edges):
//   4 - deg(u) - deg(w) + 3 * |common neighbors of u and w|.
// May be zero or negative.
std::vector<double> forman_ricci_edge_values(const ColoredGraph& g);

// Structural filtration: vertex value = degree, edge value = Forman-Ricci
// curvature shifted by (1 - min) when the raw minimum is <= 0, so that edge
// values are strictly positive.  The applied shift lands in edge_shift.
FiltrationValues degree_filtration(const ColoredGraph& g);

// Sorted distinct critical values.  For the vertex kind these are the
// attained vertex values; for the edge kind, 0 followed by the attained edge
// values.
std::vector<double> timeline(const FiltrationValues& values, FiltrationKind kind);

// Sublevel subgraph at time t plus the original index of each kept vertex
// (identity for the edge kind, which keeps every vertex).
struct FilteredSubgraph {
  ColoredGraph graph;
  std::vector<int> vertex_ids;
};

FilteredSubgraph subgraph_at(const ColoredGraph& g, const FiltrationValues& values,
                             FiltrationKind kind, double t);

}  // namespace spectre
