#include "spectre/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <json.hpp>

#include "spectre/metrics.hpp"
#include "spectre/spectral.hpp"

namespace spectre {

namespace {

using nlohmann::json;

json replay_graph(const ColoredGraph& g) { return json::parse(serialize_graph(g)); }
json replay_spec(const ColorFiltrationSpec& s) {
  return json::parse(serialize_filtration(s));
}

void record_failure(VerifyOutcome& out, const std::string& message, json replay) {
  ++out.failures;
  out.messages.push_back(message);
  if (!out.replay_json) {
    replay["suite"] = out.suite;
    out.replay_json = replay.dump(2);
  }
}

bool all_distinct(std::vector<double> vals) {
  std::sort(vals.begin(), vals.end());
  return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
}

}  // namespace

ColorFiltrationSpec random_filtration_spec(const std::vector<std::string>& colors,
                                           Rng& rng) {
  ColorFiltrationSpec spec;
  for (const auto& c : colors) spec.f_v[c] = rng.uniform(0.0, 3.0);
  for (std::size_t i = 0; i < colors.size(); ++i)
    for (std::size_t j = i; j < colors.size(); ++j)
      spec.f_e[ColorFiltrationSpec::key(colors[i], colors[j])] = rng.uniform(0.2, 3.0);
  return spec;
}

ColorFiltrationSpec random_injective_spec(const std::vector<std::string>& colors,
                                          Rng& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    ColorFiltrationSpec spec = random_filtration_spec(colors, rng);
    std::vector<double> fv, fe;
    for (const auto& [k, v] : spec.f_v) fv.push_back(v);
    for (const auto& [k, v] : spec.f_e) fe.push_back(v);
    if (all_distinct(fv) && all_distinct(fe)) return spec;
  }
  throw numerical_error("random_injective_spec: redraws exhausted");
}

ColoredGraph random_connected_graph(int n, double edge_prob,
                                    const std::vector<std::string>& colors, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ColoredGraph g = random_colored_graph(n, edge_prob, colors, rng.next_u64());
    if (connected_components(g).size() == 1) return g;
  }
  throw numerical_error("random_connected_graph: redraws exhausted; raise edge_prob");
}

ColorFiltrationSpec order_preserving_perturbation(const ColorFiltrationSpec& f,
                                                  double scale, Rng& rng) {
  auto value_moves = [&](std::vector<double> values, bool positive) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    double gap = kInf;
    for (std::size_t i = 1; i < values.size(); ++i)
      gap = std::min(gap, values[i] - values[i - 1]);
    const double cap = std::isfinite(gap) ? std::min(scale, 0.45 * gap) : scale;
    std::map<double, double> to;
    for (double v : values) {
      double w = v + rng.uniform(-cap, cap);
      if (positive && w < 1e-6) w = 1e-6;
      to[v] = w;
    }
    return to;
  };
  ColorFiltrationSpec g;
  {
    std::vector<double> values;
    for (const auto& [k, v] : f.f_v) values.push_back(v);
    const std::map<double, double> to = value_moves(std::move(values), false);
    for (const auto& [k, v] : f.f_v) g.f_v[k] = to.at(v);
  }
  {
    std::vector<double> values;
    for (const auto& [k, v] : f.f_e) values.push_back(v);
    const std::map<double, double> to = value_moves(std::move(values), true);
    for (const auto& [k, v] : f.f_e) g.f_e[k] = to.at(v);
  }
  return g;
}

VerifyOutcome verify_lemma_b1(int count, std::uint64_t seed) {
  VerifyOutcome out;
  out.suite = "lemma_b1";
  out.count = count;
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    int n = 2 + static_cast<int>(rng.index(11));  // 2..12
    double p = rng.uniform(0.25, 0.6);
    ColoredGraph g = random_connected_graph(n, p, {"red", "blue"}, rng);
    std::vector<int> all(g.n);
    for (int v = 0; v < g.n; ++v) all[v] = v;
    std::vector<double> via_delta1 = delta1_nonzero_spectrum(g, all);
    std::vector<double> via_delta0 =
        drop_zero_eigenvalues(eigenvalues_full(laplacian(g, all)).values, 1);
    bool match = via_delta1.size() == via_delta0.size();
    double worst = 0.0;
    if (match)
      for (std::size_t k = 0; k < via_delta1.size(); ++k)
        worst = std::max(worst, std::fabs(via_delta1[k] - via_delta0[k]));
    if (!match || worst > 1e-8) {
      json replay = {{"seed", seed}, {"iteration", i}, {"graph", replay_graph(g)}};
      record_failure(out,
                     "iteration " + std::to_string(i) +
                         ": edge-Laplacian spectrum deviates (worst " +
                         std::to_string(worst) + ")",
                     replay);
    }
  }
  return out;
}

VerifyOutcome verify_metric_axioms(int count, std::uint64_t seed) {
  VerifyOutcome out;
  out.suite = "metric_axioms";
  out.count = count;
  Rng rng(seed);
  const std::vector<std::string> colors = {"red", "blue"};
  std::vector<ColoredGraph> pool;
  for (int i = 0; i < 20; ++i)
    pool.push_back(random_colored_graph(4 + static_cast<int>(rng.index(5)),
                                        rng.uniform(0.3, 0.7), colors, rng.next_u64()));
  SpectrumPolicy policy;
  for (int i = 0; i < count; ++i) {
    const ColoredGraph& g = pool[rng.index(pool.size())];
    ColorFiltrationSpec fx = random_filtration_spec(colors, rng);
    ColorFiltrationSpec fy = random_filtration_spec(colors, rng);
    ColorFiltrationSpec fz = random_filtration_spec(colors, rng);
    Diagram sx = compute_spectre(g, fx, policy);
    Diagram sy = compute_spectre(g, fy, policy);
    Diagram sz = compute_spectre(g, fz, policy);
    Diagram rx = project_to_rephine(sx), ry = project_to_rephine(sy),
            rz = project_to_rephine(sz);

    auto check = [&](const char* metric, double dxx, double dxy, double dyx, double dxz,
                     double dyz, bool xy_equal) {
      auto fail = [&](const std::string& what) {
        json replay = {{"seed", seed},
                       {"iteration", i},
                       {"graph", replay_graph(g)},
                       {"filtrations",
                        json::array({replay_spec(fx), replay_spec(fy), replay_spec(fz)})}};
        record_failure(out,
                       "iteration " + std::to_string(i) + " (" + metric + "): " + what,
                       replay);
      };
      if (dxx != 0.0) fail("d(x,x) = " + std::to_string(dxx) + ", expected 0");
      if (dxy != dyx) fail("symmetry violated");
      if (std::isfinite(dxy) && std::isfinite(dyz)) {
        if (dxz > dxy + dyz + 1e-9) fail("triangle inequality violated");
      }
      if (dxy == 0.0 && !xy_equal) fail("zero distance between distinct diagrams");
    };

    check("d_B_R", d_B_R(rx, rx).value, d_B_R(rx, ry).value, d_B_R(ry, rx).value,
          d_B_R(rx, rz).value, d_B_R(ry, rz).value, multiset_equal(rx, ry, 1e-12));
    check("d_B_SpecR", d_B_SpecR(sx, sx).value, d_B_SpecR(sx, sy).value,
          d_B_SpecR(sy, sx).value, d_B_SpecR(sx, sz).value, d_B_SpecR(sy, sz).value,
          multiset_equal(sx, sy, 1e-12));
  }
  return out;
}

VerifyOutcome verify_stability(int count, std::uint64_t seed) {
  VerifyOutcome out;
  out.suite = "stability";
  out.count = count;
  Rng rng(seed);
  const double scales[4] = {0.01, 0.1, 0.5, 2.0};

  for (int i = 0; i < count; ++i) {
    std::vector<std::string> colors = rng.index(2) == 0
                                          ? std::vector<std::string>{"red", "blue"}
                                          : std::vector<std::string>{"red", "blue", "green"};
    int n = 4 + static_cast<int>(rng.index(7));
    ColoredGraph g = random_colored_graph(n, rng.uniform(0.3, 0.6), colors, rng.next_u64());

    // Bound for the color-term descriptor under order-preserving perturbation.
    // Every fourth spec is snapped to a 0.5 grid so tied values (which must
    // keep moving together) are exercised, not just generic injective draws.
    ColorFiltrationSpec f = random_filtration_spec(colors, rng);
    if (i % 4 == 3) {
      for (auto& [color, value] : f.f_v) value = std::round(value * 2.0) / 2.0;
      for (auto& [pair_key, value] : f.f_e)
        value = std::max(std::round(value * 2.0) / 2.0, 0.5);
    }
    ColorFiltrationSpec fg = order_preserving_perturbation(f, scales[rng.index(4)], rng);
    StabilitySample global =
        stability_eval(g, f, fg, DescriptorId::rephine, /*require_injective=*/false);
    if (!global.holds) {
      json replay = {{"seed", seed},
                     {"iteration", i},
                     {"graph", replay_graph(g)},
                     {"filtrations",
                      json::array({replay_spec(global.f), replay_spec(global.g)})}};
      record_failure(out,
                     "iteration " + std::to_string(i) +
                         ": color-term bound violated under order-preserving "
                         "perturbation (" +
                         std::to_string(global.distance) + " > " +
                         std::to_string(global.bound) + ")",
                     replay);
    }

    // Local bound for the spectral descriptor, perturbation inside the cell.
    ColorFiltrationSpec finj = random_injective_spec(colors, rng);
    double gap = std::min(
        [&] {
          std::vector<double> v;
          for (const auto& [k, x] : finj.f_v) v.push_back(x);
          std::sort(v.begin(), v.end());
          double lo = kInf;
          for (std::size_t k = 1; k < v.size(); ++k) lo = std::min(lo, v[k] - v[k - 1]);
          return lo;
        }(),
        [&] {
          std::vector<double> v;
          for (const auto& [k, x] : finj.f_e) v.push_back(x);
          std::sort(v.begin(), v.end());
          double lo = kInf;
          for (std::size_t k = 1; k < v.size(); ++k) lo = std::min(lo, v[k] - v[k - 1]);
          return lo;
        }());
    double s = std::isinf(gap) ? 0.1 : 0.45 * gap;
    StabilitySample local =
        stability_sample(g, finj, s, DescriptorId::spectre, rng.next_u64());
    if (local.locality && !local.holds) {
      json replay = {{"seed", seed},
                     {"iteration", i},
                     {"graph", replay_graph(g)},
                     {"filtrations",
                      json::array({replay_spec(local.f), replay_spec(local.g)})}};
      record_failure(out,
                     "iteration " + std::to_string(i) + ": in-cell bound violated (" +
                         std::to_string(local.distance) + " > " +
                         std::to_string(local.bound) + ")",
                     replay);
    }
  }

  // The known witness must reproduce the violation: tiny edge perturbation,
  // spectral distance bounded away from zero.
  const double floor_value = 4.0 + 2.0 * std::sqrt(2.0) - 1e-6;
  for (double eps : {0.1, 0.01, 0.001}) {
    InstabilityWitness w = instability_witness(eps);
    StabilitySample s =
        stability_eval(w.graph, w.f, w.g, DescriptorId::spectre, false);
    if (s.holds || s.distance < floor_value) {
      json replay = {{"seed", seed},
                     {"eps", eps},
                     {"graph", replay_graph(w.graph)},
                     {"filtrations", json::array({replay_spec(w.f), replay_spec(w.g)})}};
      record_failure(out,
                     "witness eps=" + std::to_string(eps) +
                         ": expected violation missing (distance " +
                         std::to_string(s.distance) + ", bound " +
                         std::to_string(s.bound) + ")",
                     replay);
    }
  }
  return out;
}

VerifyOutcome verify_isomorphism(int count, std::uint64_t seed) {
  VerifyOutcome out;
  out.suite = "isomorphism";
  out.count = count;
  Rng rng(seed);
  SpectrumPolicy policy;
  for (int i = 0; i < count; ++i) {
    std::vector<std::string> colors = {"red", "blue"};
    int n = 4 + static_cast<int>(rng.index(6));
    ColoredGraph g = random_colored_graph(n, rng.uniform(0.3, 0.7), colors, rng.next_u64());
    ColorFiltrationSpec f = random_filtration_spec(colors, rng);
    VertexPermutation perm = random_permutation(n, rng.next_u64());
    std::string base = serialize_diagram(compute_spectre(g, f, policy));
    std::string relabeled =
        serialize_diagram(compute_spectre(permute(g, perm), f, policy));
    if (base != relabeled) {
      json replay = {{"seed", seed},
                     {"iteration", i},
                     {"graph", replay_graph(g)},
                     {"filtration", replay_spec(f)},
                     {"permutation", perm}};
      record_failure(out,
                     "iteration " + std::to_string(i) +
                         ": canonical diagrams differ under relabeling",
                     replay);
    }
  }
  return out;
}

VerifyOutcome run_verify_suite(const std::string& suite, int count, std::uint64_t seed) {
  if (suite == "lemma_b1") return verify_lemma_b1(count > 0 ? count : 100, seed);
  if (suite == "metric_axioms") return verify_metric_axioms(count > 0 ? count : 200, seed);
  if (suite == "stability") return verify_stability(count > 0 ? count : 200, seed);
  if (suite == "isomorphism") return verify_isomorphism(count > 0 ? count : 50, seed);
  throw input_error("verify: unknown suite '" + suite +
                    "' (expected lemma_b1, metric_axioms, stability, isomorphism)");
}

}  // namespace spectre
