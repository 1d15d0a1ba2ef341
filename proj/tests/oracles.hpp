// Test-side oracles, implemented independently of the library's algorithms:
// persistence pairs through the rank invariant of the sublevel component
// structure, bottleneck values through exhaustive bijection search, and
// closed-form spectra for structured graphs.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "spectre/filtration.hpp"
#include "spectre/metrics.hpp"
#include "spectre/persistence.hpp"

namespace oracles {

// Multiset of dim0/dim1 persistence pairs derived only from component counts
// of the sublevel graphs.  dim0 multiplicities come from the rank function
// rk(i,j) = rank of H0(G_{t_i}) -> H0(G_{t_j}) = number of components of
// G_{t_j} meeting the vertex set of G_{t_i}; vertices absorbed within their
// own birth timestamp yield trivial (t,t) pairs.  dim1 bars never die, with
// multiplicity the increment of beta1 = |E| - |V| + beta0.
inline spectre::PHDiagram rank_invariant_ph(const spectre::ColoredGraph& g,
                                            const spectre::FiltrationValues& values,
                                            spectre::FiltrationKind kind) {
  const std::vector<double> times = spectre::timeline(values, kind);
  const int k = static_cast<int>(times.size());

  std::vector<std::set<int>> present(k);             // original vertex ids at t_i
  std::vector<std::vector<std::set<int>>> comps(k);  // components as original ids
  std::vector<int> beta1(k);
  for (int i = 0; i < k; ++i) {
    const spectre::FilteredSubgraph sub =
        spectre::subgraph_at(g, values, kind, times[i]);
    present[i] = std::set<int>(sub.vertex_ids.begin(), sub.vertex_ids.end());
    for (const auto& comp : spectre::connected_components(sub.graph)) {
      std::set<int> orig;
      for (int v : comp) orig.insert(sub.vertex_ids[v]);
      comps[i].push_back(orig);
    }
    beta1[i] = static_cast<int>(sub.graph.edges.size()) - sub.graph.n +
               static_cast<int>(comps[i].size());
  }

  // rk[i][j] for i <= j; rk(i,i) = beta0(G_{t_i}).
  auto rk = [&](int i, int j) {
    if (i < 0) return 0;
    int count = 0;
    for (const auto& comp : comps[j]) {
      bool meets = false;
      for (int v : comp)
        if (present[i].count(v)) { meets = true; break; }
      if (meets) ++count;
    }
    return count;
  };

  // births at t_i: vertex kind counts vertices entering; edge kind has every
  // vertex at time 0 (= times[0]).
  std::vector<int> births(k, 0);
  if (kind == spectre::FiltrationKind::vertex) {
    for (int v = 0; v < g.n; ++v) {
      const auto it =
          std::lower_bound(times.begin(), times.end(), values.vertex_value[v]);
      births[static_cast<int>(it - times.begin())] += 1;
    }
  } else {
    births[0] = g.n;
  }

  spectre::PHDiagram out;
  for (int i = 0; i < k; ++i) {
    const int visible = rk(i, i) - rk(i - 1, i);
    for (int t = 0; t < births[i] - visible; ++t)
      out.dim0.push_back({times[i], times[i]});  // absorbed on arrival
    for (int j = i + 1; j < k; ++j) {
      const int mult = (rk(i, j - 1) - rk(i - 1, j - 1)) - (rk(i, j) - rk(i - 1, j));
      for (int t = 0; t < mult; ++t) out.dim0.push_back({times[i], times[j]});
    }
    const int inf_mult = rk(i, k - 1) - rk(i - 1, k - 1);
    for (int t = 0; t < inf_mult; ++t) out.dim0.push_back({times[i], spectre::kInf});
    const int cycles = beta1[i] - (i > 0 ? beta1[i - 1] : 0);
    for (int t = 0; t < cycles; ++t) out.dim1.push_back({times[i], spectre::kInf});
  }
  auto order = [](const spectre::PersistencePair& a, const spectre::PersistencePair& b) {
    return std::pair(a.birth, a.death) < std::pair(b.birth, b.death);
  };
  std::sort(out.dim0.begin(), out.dim0.end(), order);
  std::sort(out.dim1.begin(), out.dim1.end(), order);
  return out;
}

// Exhaustive bottleneck value: minimum over all bijections of the maximum
// ground distance.  Factorial search; keep |a| small.
inline double brute_force_bottleneck(const std::vector<spectre::DescriptorTuple>& a,
                                     const std::vector<spectre::DescriptorTuple>& b,
                                     spectre::TupleDistanceKind kind) {
  if (a.size() != b.size()) throw spectre::input_error("size mismatch");
  const int n = static_cast<int>(a.size());
  if (n == 0) return 0.0;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = spectre::kInf;
  do {
    double worst = 0.0;
    for (int i = 0; i < n && worst < best; ++i)
      worst = std::max(worst, spectre::tuple_distance(a[i], b[perm[i]], kind));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Closed-form Laplacian spectra, ascending.
inline std::vector<double> path_spectrum(int n) {
  std::vector<double> v;
  for (int j = 0; j < n; ++j) v.push_back(2.0 - 2.0 * std::cos(M_PI * j / n));
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<double> cycle_spectrum(int n) {
  std::vector<double> v;
  for (int j = 0; j < n; ++j) v.push_back(2.0 - 2.0 * std::cos(2.0 * M_PI * j / n));
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<double> complete_spectrum(int n) {
  std::vector<double> v(n, static_cast<double>(n));
  v[0] = 0.0;
  return v;
}

inline std::vector<double> star_spectrum(int leaves) {
  std::vector<double> v(leaves + 1, 1.0);
  v[0] = 0.0;
  v[leaves] = leaves + 1.0;
  return v;
}

}  // namespace oracles
