#include "spectre/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace spectre {

namespace {

// Kuhn's augmenting-path matching over the pairs with distance <= limit.
// Returns the left-to-right assignment, or an empty vector if no perfect
// matching exists.
std::vector<int> matching_under(const std::vector<std::vector<double>>& dist,
                                double limit) {
  const int k = static_cast<int>(dist.size());
  std::vector<int> right_of(k, -1), left_of(k, -1);
  std::vector<char> visited(k);
  auto augment = [&](auto&& self, int i) -> bool {
    for (int j = 0; j < k; ++j) {
      if (visited[j] || !(dist[i][j] <= limit)) continue;
      visited[j] = 1;
      if (left_of[j] == -1 || self(self, left_of[j])) {
        right_of[i] = j;
        left_of[j] = i;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < k; ++i) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(augment, i)) return {};
  }
  return right_of;
}

MatchResult from_assignment(const std::vector<std::vector<double>>& dist,
                            const std::vector<int>& right_of) {
  MatchResult res;
  for (int i = 0; i < static_cast<int>(right_of.size()); ++i) {
    res.matching.push_back({i, right_of[i]});
    res.value = std::max(res.value, dist[i][right_of[i]]);
  }
  return res;
}

void require_same_kind(const Diagram& df, const Diagram& dg, DiagramKind expected,
                       const char* op) {
  if (df.kind != expected || dg.kind != expected)
    throw input_error(std::string(op) + ": expects two " + to_string(expected) +
                      " diagrams, got " + to_string(df.kind) + " and " +
                      to_string(dg.kind));
  if (df.dim0.size() != dg.dim0.size() || df.dim1.size() != dg.dim1.size())
    throw input_error(std::string(op) + ": diagram cardinalities differ (dim0 " +
                      std::to_string(df.dim0.size()) + " vs " +
                      std::to_string(dg.dim0.size()) + ", dim1 " +
                      std::to_string(df.dim1.size()) + " vs " +
                      std::to_string(dg.dim1.size()) + ")");
}

}  // namespace

double abs_diff_ext(double x, double y) {
  if (std::isinf(x) || std::isinf(y)) return x == y ? 0.0 : kInf;
  return std::fabs(x - y);
}

double spec_distance(const std::vector<double>& rho0, const std::vector<double>& rho1) {
  double sum = 0.0;
  const std::size_t n = std::max(rho0.size(), rho1.size());
  for (std::size_t i = 0; i < n; ++i) {
    double a = i < rho0.size() ? rho0[i] : 0.0;
    double b = i < rho1.size() ? rho1[i] : 0.0;
    sum += std::fabs(a - b);
  }
  return sum;
}

double tuple_distance(const DescriptorTuple& a, const DescriptorTuple& b,
                      TupleDistanceKind kind) {
  double d = std::max(abs_diff_ext(a.b, b.b), abs_diff_ext(a.d, b.d)) +
             abs_diff_ext(a.alpha, b.alpha) + abs_diff_ext(a.gamma, b.gamma);
  if (kind == TupleDistanceKind::spectre) d += spec_distance(a.rho, b.rho);
  return d;
}

MatchResult bott(const std::vector<DescriptorTuple>& a,
                 const std::vector<DescriptorTuple>& b, TupleDistanceKind kind) {
  if (a.size() != b.size())
    throw input_error("bott: cardinality mismatch (" + std::to_string(a.size()) +
                      " vs " + std::to_string(b.size()) + ")");
  const int k = static_cast<int>(a.size());
  MatchResult res;
  if (k == 0) return res;

  std::vector<std::vector<double>> dist(k, std::vector<double>(k));
  std::vector<double> candidates;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      dist[i][j] = tuple_distance(a[i], b[j], kind);
      if (std::isfinite(dist[i][j])) candidates.push_back(dist[i][j]);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  if (candidates.empty() || matching_under(dist, candidates.back()).empty()) {
    // Every bijection crosses an infinite pair.
    res.value = kInf;
    for (int i = 0; i < k; ++i) res.matching.push_back({i, i});
    return res;
  }

  // Smallest feasible threshold among the candidate distances.
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (matching_under(dist, candidates[mid]).empty()) lo = mid + 1;
    else hi = mid;
  }
  return from_assignment(dist, matching_under(dist, candidates[lo]));
}

DiagramDistance d_B_R(const Diagram& df, const Diagram& dg) {
  require_same_kind(df, dg, DiagramKind::rephine, "d_B_R");
  DiagramDistance out;
  out.dim0 = bott(df.dim0, dg.dim0, TupleDistanceKind::rephine);
  out.dim1 = bott(df.dim1, dg.dim1, TupleDistanceKind::rephine);
  out.value = out.dim0.value + out.dim1.value;
  return out;
}

DiagramDistance d_B_SpecR(const Diagram& df, const Diagram& dg) {
  require_same_kind(df, dg, DiagramKind::spectre, "d_B_SpecR");
  // A skipped spectrum has no value to compare; silently treating it as
  // empty would fabricate a distance.
  for (const Diagram* d : {&df, &dg})
    for (const auto* dim : {&d->dim0, &d->dim1})
      for (const auto& t : *dim)
        if (t.rho_skipped)
          throw input_error(
              "d_B_SpecR: diagram contains skipped spectra; recompute with the "
              "full spectrum policy");
  DiagramDistance out;
  out.dim0 = bott(df.dim0, dg.dim0, TupleDistanceKind::spectre);
  out.dim1 = bott(df.dim1, dg.dim1, TupleDistanceKind::spectre);
  out.value = out.dim0.value + out.dim1.value;
  return out;
}

std::pair<double, double> filtration_sup_distance(const ColorFiltrationSpec& f,
                                                  const ColorFiltrationSpec& g) {
  auto same_keys = [](const auto& ma, const auto& mb) {
    if (ma.size() != mb.size()) return false;
    auto ib = mb.begin();
    for (auto ia = ma.begin(); ia != ma.end(); ++ia, ++ib)
      if (ia->first != ib->first) return false;
    return true;
  };
  if (!same_keys(f.f_v, g.f_v) || !same_keys(f.f_e, g.f_e))
    throw input_error("filtration_sup_distance: color palettes differ");
  double dv = 0.0, de = 0.0;
  {
    auto ig = g.f_v.begin();
    for (auto ifv = f.f_v.begin(); ifv != f.f_v.end(); ++ifv, ++ig)
      dv = std::max(dv, std::fabs(ifv->second - ig->second));
  }
  {
    auto ig = g.f_e.begin();
    for (auto ife = f.f_e.begin(); ife != f.f_e.end(); ++ife, ++ig)
      de = std::max(de, std::fabs(ife->second - ig->second));
  }
  return {dv, de};
}

}  // namespace spectre
