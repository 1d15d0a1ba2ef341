#include "spectre/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

namespace spectre {

namespace {

using nlohmann::json;

std::pair<std::string, std::string> split_pair_key(const std::string& key) {
  auto bar = key.find('|');
  if (bar == std::string::npos || key.find('|', bar + 1) != std::string::npos)
    throw input_error("filtration: f_e key '" + key + "' must be 'colorA|colorB'");
  return ColorFiltrationSpec::key(key.substr(0, bar), key.substr(bar + 1));
}

double require_finite(const json& v, const std::string& what) {
  if (!v.is_number()) throw input_error("filtration: " + what + " must be a number");
  double x = v.get<double>();
  if (!std::isfinite(x)) throw input_error("filtration: " + what + " must be finite");
  return x;
}

}  // namespace

double ColorFiltrationSpec::vertex_value(const std::string& color) const {
  auto it = f_v.find(color);
  if (it == f_v.end())
    throw input_error("filtration: missing f_v value for color '" + color + "'");
  return it->second;
}

double ColorFiltrationSpec::edge_value(const std::string& a, const std::string& b) const {
  auto it = f_e.find(key(a, b));
  if (it == f_e.end())
    throw input_error("filtration: missing f_e value for color pair '" + a + "|" + b +
                      "'");
  return it->second;
}

ColorFiltrationSpec parse_filtration(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("filtration: malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("f_v") || !doc.contains("f_e") ||
      !doc["f_v"].is_object() || !doc["f_e"].is_object())
    throw input_error("filtration: expected object with f_v and f_e maps");

  ColorFiltrationSpec spec;
  for (const auto& [color, value] : doc["f_v"].items())
    spec.f_v[color] = require_finite(value, "f_v['" + color + "']");
  for (const auto& [raw_key, value] : doc["f_e"].items()) {
    auto pair_key = split_pair_key(raw_key);
    double x = require_finite(value, "f_e['" + raw_key + "']");
    if (x <= 0.0)
      throw input_error("filtration: f_e['" + raw_key + "'] must be strictly positive");
    auto [it, inserted] = spec.f_e.insert({pair_key, x});
    if (!inserted && it->second != x)
      throw input_error("filtration: conflicting values for f_e pair '" + pair_key.first +
                        "|" + pair_key.second + "'");
  }
  return spec;
}

std::string serialize_filtration(const ColorFiltrationSpec& spec) {
  json doc;
  doc["f_v"] = json::object();
  for (const auto& [color, value] : spec.f_v) doc["f_v"][color] = value;
  doc["f_e"] = json::object();
  for (const auto& [pair_key, value] : spec.f_e)
    doc["f_e"][pair_key.first + "|" + pair_key.second] = value;
  return doc.dump();
}

FiltrationValues induce(const ColorFiltrationSpec& spec, const ColoredGraph& g) {
  FiltrationValues values;
  values.vertex_value.resize(g.n);
  for (int v = 0; v < g.n; ++v) values.vertex_value[v] = spec.vertex_value(g.color_name(v));
  values.edge_vertex_value.reserve(g.edges.size());
  values.edge_value.reserve(g.edges.size());
  for (const auto& [u, w] : g.edges) {
    values.edge_vertex_value.push_back(
        std::max(values.vertex_value[u], values.vertex_value[w]));
    double fe = spec.edge_value(g.color_name(u), g.color_name(w));
    if (fe <= 0.0)
      throw input_error("filtration: edge values must be strictly positive");
    values.edge_value.push_back(fe);
  }
  return values;
}

std::vector<double> forman_ricci_edge_values(const ColoredGraph& g) {
  auto adj = g.adjacency();
  std::vector<std::set<int>> nbr(g.n);
  for (int v = 0; v < g.n; ++v) nbr[v] = {adj[v].begin(), adj[v].end()};
  std::vector<double> out;
  out.reserve(g.edges.size());
  for (const auto& [u, w] : g.edges) {
    int common = 0;
    for (int x : adj[u]) common += nbr[w].count(x);
    out.push_back(4.0 - static_cast<double>(adj[u].size()) -
                  static_cast<double>(adj[w].size()) + 3.0 * common);
  }
  return out;
}

FiltrationValues degree_filtration(const ColoredGraph& g) {
  FiltrationValues values;
  auto adj = g.adjacency();
  values.vertex_value.resize(g.n);
  for (int v = 0; v < g.n; ++v)
    values.vertex_value[v] = static_cast<double>(adj[v].size());
  values.edge_vertex_value.reserve(g.edges.size());
  for (const auto& [u, w] : g.edges)
    values.edge_vertex_value.push_back(
        std::max(values.vertex_value[u], values.vertex_value[w]));
  values.edge_value = forman_ricci_edge_values(g);
  if (!values.edge_value.empty()) {
    double lo = *std::min_element(values.edge_value.begin(), values.edge_value.end());
    if (lo <= 0.0) {
      values.edge_shift = 1.0 - lo;
      for (double& x : values.edge_value) x += values.edge_shift;
    }
  }
  return values;
}

std::vector<double> timeline(const FiltrationValues& values, FiltrationKind kind) {
  std::set<double> ts;
  if (kind == FiltrationKind::vertex) {
    ts.insert(values.vertex_value.begin(), values.vertex_value.end());
  } else {
    ts.insert(0.0);
    ts.insert(values.edge_value.begin(), values.edge_value.end());
  }
  return {ts.begin(), ts.end()};
}

FilteredSubgraph subgraph_at(const ColoredGraph& g, const FiltrationValues& values,
                             FiltrationKind kind, double t) {
  FilteredSubgraph sub;
  sub.graph.color_set = g.color_set;
  if (kind == FiltrationKind::edge) {
    sub.graph.n = g.n;
    sub.graph.color = g.color;
    sub.vertex_ids.resize(g.n);
    for (int v = 0; v < g.n; ++v) sub.vertex_ids[v] = v;
    for (std::size_t i = 0; i < g.edges.size(); ++i)
      if (values.edge_value[i] <= t) sub.graph.edges.push_back(g.edges[i]);
    return sub;
  }
  std::vector<int> new_id(g.n, -1);
  for (int v = 0; v < g.n; ++v)
    if (values.vertex_value[v] <= t) {
      new_id[v] = static_cast<int>(sub.vertex_ids.size());
      sub.vertex_ids.push_back(v);
      sub.graph.color.push_back(g.color[v]);
    }
  sub.graph.n = static_cast<int>(sub.vertex_ids.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (values.edge_vertex_value[i] <= t)
      sub.graph.edges.push_back({new_id[g.edges[i].first], new_id[g.edges[i].second]});
  return sub;
}

}  // namespace spectre
