#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "spectre/bench.hpp"
#include "spectre/descriptors.hpp"
#include "spectre/verify.hpp"

using namespace spectre;

namespace {

bool has_tuple(const std::vector<DescriptorTuple>& rows, double b, double d,
               double alpha, double gamma) {
  for (const auto& t : rows)
    if (t.b == b && t.d == d && t.alpha == alpha && t.gamma == gamma)
      return true;
  return false;
}

int beta1_of(const ColoredGraph& g) {
  return static_cast<int>(g.edges.size()) - g.n +
         static_cast<int>(connected_components(g).size());
}

}  // namespace

TEST_SUITE("descriptors") {

TEST_CASE("color-term diagram of the walkthrough cycle") {
  const Diagram d = compute_rephine(two_color_cycle(), two_color_cycle_edge_spec());
  CHECK(d.kind == DiagramKind::rephine);
  REQUIRE(d.dim0.size() == 4);
  CHECK(has_tuple(d.dim0, 0, 1, 2, 1));
  CHECK(has_tuple(d.dim0, 0, 2, 1, 2));
  CHECK(has_tuple(d.dim0, 0, 3, 2, 1));
  CHECK(has_tuple(d.dim0, 0, kInf, 1, 2));
  REQUIRE(d.dim1.size() == 1);
  CHECK(has_tuple(d.dim1, 1, 3, 0, 0));
}

TEST_CASE("spectral diagram of the walkthrough cycle") {
  const Diagram d = compute_spectre(two_color_cycle(), two_color_cycle_edge_spec());
  CHECK(d.kind == DiagramKind::spectre);
  const Diagram c = canonicalize(d);
  REQUIRE(c.dim0.size() == 4);
  // canonical order: by (b, d, alpha, gamma, rho)
  CHECK(c.dim0[0].rho == std::vector<double>{2});            // (0,1,2,1)
  CHECK(c.dim0[1].rho == std::vector<double>{2});            // (0,2,1,2)
  CHECK(c.dim0[2].rho == std::vector<double>{2, 2, 4});      // (0,3,2,1)
  CHECK(c.dim0[3].rho == std::vector<double>{2, 2, 4});      // (0,inf,1,2)
  CHECK(c.dim0[3].d == kInf);
  REQUIRE(c.dim1.size() == 1);
  CHECK(c.dim1[0].b == 1.0);
  CHECK(c.dim1[0].d == 3.0);
  CHECK(c.dim1[0].rho == std::vector<double>{2, 2, 4});
}

TEST_CASE("spectral projection drops fields but keeps rho") {
  const Diagram ls = compute_ls(two_color_cycle(), two_color_cycle_edge_spec());
  CHECK(ls.kind == DiagramKind::ls);
  for (const auto& t : ls.dim0) {
    CHECK(t.alpha == 0.0);
    CHECK(t.gamma == 0.0);
  }
  const Diagram spec = compute_spectre(two_color_cycle(), two_color_cycle_edge_spec());
  CHECK(multiset_equal(project_to_ls(spec), ls, 1e-12));
  const Diagram reph = compute_rephine(two_color_cycle(), two_color_cycle_edge_spec());
  CHECK(multiset_equal(project_to_rephine(spec), reph, 1e-12));
}

TEST_CASE("greater alpha dies at a merge") {
  ColoredGraph k2;
  k2.n = 2;
  k2.color_set = {"red", "blue"};
  k2.color = {0, 1};
  k2.edges = {{0, 1}};
  ColorFiltrationSpec spec;
  spec.f_v = {{"red", 2}, {"blue", 1}};
  spec.f_e = {{ColorFiltrationSpec::key("red", "blue"), 1},
              {ColorFiltrationSpec::key("red", "red"), 1},
              {ColorFiltrationSpec::key("blue", "blue"), 1}};
  const Diagram d = compute_rephine(k2, spec);
  REQUIRE(d.dim0.size() == 2);
  CHECK(has_tuple(d.dim0, 0, 1, 2, 1));     // the red vertex dies
  CHECK(has_tuple(d.dim0, 0, kInf, 1, 1));  // the blue one survives
}

TEST_CASE("alpha tie falls back to killing the lower gamma") {
  // P3 red-red-blue with equal vertex values; edge values 1 (rr) then 2 (rb).
  // At t=2 the component rep with gamma=1 dies even though it is the older
  // side, leaving the gamma=2 vertex as the survivor.
  ColoredGraph p3;
  p3.n = 3;
  p3.color_set = {"red", "blue"};
  p3.color = {0, 0, 1};
  p3.edges = {{0, 1}, {1, 2}};
  ColorFiltrationSpec spec;
  spec.f_v = {{"red", 1}, {"blue", 1}};
  spec.f_e = {{ColorFiltrationSpec::key("red", "red"), 1},
              {ColorFiltrationSpec::key("red", "blue"), 2},
              {ColorFiltrationSpec::key("blue", "blue"), 3}};
  const Diagram d = compute_rephine(p3, spec);
  REQUIRE(d.dim0.size() == 3);
  CHECK(has_tuple(d.dim0, 0, 1, 1, 1));
  CHECK(has_tuple(d.dim0, 0, 2, 1, 1));
  CHECK(has_tuple(d.dim0, 0, kInf, 1, 2));
}

TEST_CASE("index tie-breaks do not affect the canonical multiset") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const ColoredGraph g = random_colored_graph(8, 0.45, {"red", "blue"}, seed);
    Rng rng(seed + 40);
    const ColorFiltrationSpec spec = random_filtration_spec({"red", "blue"}, rng);
    const FiltrationValues values = induce(spec, g);
    const Diagram a = rephine_from_values(g, values, false);
    const Diagram b = rephine_from_values(g, values, true);
    CHECK(multiset_equal(a, b, 0.0));
    CHECK(serialize_diagram(a) == serialize_diagram(b));
  }
}

TEST_CASE("isolated vertices carry the gamma sentinel") {
  ColoredGraph g;
  g.n = 3;
  g.color_set = {"red"};
  g.color = {0, 0, 0};
  g.edges = {{0, 1}};
  const Diagram d = compute_rephine(g, mono_spec());
  CHECK(d.gamma_sentinels == 1);
  int flagged = 0;
  for (const auto& t : d.dim0) flagged += t.gamma_sentinel;
  CHECK(flagged == 1);
  const std::string text = serialize_diagram(d);
  CHECK(text.find("gamma_sentinels") != std::string::npos);
}

TEST_CASE("tuple counts follow the vertex count and cycle rank") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const ColoredGraph g =
        random_colored_graph(4 + seed % 6, 0.4, {"red", "blue"}, seed);
    Rng rng(seed);
    const ColorFiltrationSpec spec = random_filtration_spec({"red", "blue"}, rng);
    const Diagram d = compute_spectre(g, spec);
    CHECK(static_cast<int>(d.dim0.size()) == g.n);
    CHECK(static_cast<int>(d.dim1.size()) == beta1_of(g));
  }
}

TEST_CASE("projections agree with direct computation on random graphs") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ColoredGraph g = random_colored_graph(8, 0.45, {"red", "blue", "green"}, seed);
    Rng rng(seed + 7);
    const ColorFiltrationSpec spec =
        random_filtration_spec({"red", "blue", "green"}, rng);
    const Diagram spectre_d = compute_spectre(g, spec);
    CHECK(multiset_equal(project_to_rephine(spectre_d), compute_rephine(g, spec), 0.0));
    CHECK(multiset_equal(project_to_ls(spectre_d), compute_ls(g, spec), 0.0));
  }
}

TEST_CASE("serialization round trips every kind") {
  const ColoredGraph g = two_color_cycle();
  const ColorFiltrationSpec spec = two_color_cycle_edge_spec();
  const FiltrationValues values = induce(spec, g);
  for (const DescriptorId id : {DescriptorId::ph0, DescriptorId::ph1,
                                DescriptorId::rephine, DescriptorId::spectre,
                                DescriptorId::ls}) {
    const Diagram d = compute_descriptor(g, values, id, {});
    const std::string text = serialize_diagram(d);
    const Diagram back = parse_diagram(text);
    CHECK(back.kind == d.kind);
    CHECK(multiset_equal(back, d, 0.0));
    CHECK(serialize_diagram(back) == text);  // byte-stable round trip
  }
}

TEST_CASE("serialization survives skipped spectra") {
  SpectrumPolicy sched;
  sched.mode = SpectrumMode::scheduled;
  const Diagram d =
      compute_spectre(two_color_cycle(), two_color_cycle_edge_spec(), sched);
  int skipped = 0, evaluated = 0;
  for (const auto& t : d.dim0) (t.rho_skipped ? skipped : evaluated) += 1;
  for (const auto& t : d.dim1) (t.rho_skipped ? skipped : evaluated) += 1;
  // 5 events at fraction 1/3: 2 evaluated, 3 skipped
  CHECK(evaluated == 2);
  CHECK(skipped == 3);
  const std::string text = serialize_diagram(d);
  CHECK(text.find("skipped") != std::string::npos);
  const Diagram back = parse_diagram(text);
  CHECK(multiset_equal(back, d, 0.0));
  CHECK(serialize_diagram(back) == text);
}

TEST_CASE("the last event is always spectrally evaluated") {
  SpectrumPolicy sched;
  sched.mode = SpectrumMode::scheduled;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const ColoredGraph g = random_colored_graph(7, 0.5, {"red", "blue"}, seed);
    Rng rng(seed);
    const ColorFiltrationSpec spec = random_filtration_spec({"red", "blue"}, rng);
    const Diagram d = compute_spectre(g, spec, sched);
    int evaluated = 0;
    for (const auto& t : d.dim0) evaluated += !t.rho_skipped;
    for (const auto& t : d.dim1) evaluated += !t.rho_skipped;
    const int total = static_cast<int>(d.dim0.size() + d.dim1.size());
    CHECK(evaluated == (total + 2) / 3);
    // the final event is a surviving component; its tuple is infinite and
    // must carry a spectrum
    bool found_final = false;
    for (const auto& t : d.dim0)
      if (t.d == kInf && !t.rho_skipped) found_final = true;
    CHECK(found_final);
  }
}

TEST_CASE("multiset comparison is tolerant but shape-strict") {
  const Diagram a = compute_spectre(two_color_cycle(), two_color_cycle_edge_spec());
  Diagram b = a;
  CHECK(multiset_equal(a, b, 0.0));
  b.dim0[0].rho[0] += 5e-10;
  CHECK(multiset_equal(a, b, 1e-9));
  CHECK_FALSE(multiset_equal(a, b, 1e-12));
  b = a;
  b.dim0[0].rho.push_back(7.0);
  CHECK_FALSE(multiset_equal(a, b, 1e-9));
  b = a;
  b.dim0[0].rho_skipped = true;
  CHECK_FALSE(multiset_equal(a, b, 1e-9));  // skipped only equals skipped
  b = a;
  b.dim0.pop_back();
  CHECK_FALSE(multiset_equal(a, b, 1e-9));

  const Diagram r = compute_rephine(two_color_cycle(), two_color_cycle_edge_spec());
  CHECK_THROWS_AS(multiset_equal(a, r, 1e-9), input_error);
}

TEST_CASE("diagram names map both ways") {
  CHECK(to_string(DiagramKind::ph) == "PH");
  CHECK(to_string(DiagramKind::rephine) == "RePHINE");
  CHECK(to_string(DiagramKind::spectre) == "SpectRe");
  CHECK(to_string(DiagramKind::ls) == "LS");
  CHECK(diagram_kind_from_string("SpectRe") == DiagramKind::spectre);
  CHECK_THROWS_AS(diagram_kind_from_string("nope"), input_error);
  CHECK(descriptor_id_from_string("ph1") == DescriptorId::ph1);
  CHECK(to_string(DescriptorId::ls) == "ls");
  CHECK_THROWS_AS(descriptor_id_from_string("PH"), input_error);
}

TEST_CASE("parse rejects malformed diagrams") {
  CHECK_THROWS_AS(parse_diagram("[]"), input_error);
  CHECK_THROWS_AS(parse_diagram(R"({"kind":"Nope","dim0":[],"dim1":[]})"),
                  input_error);
  // wrong row width for the kind
  CHECK_THROWS_AS(parse_diagram(R"({"kind":"RePHINE","dim0":[[0,1]],"dim1":[]})"),
                  input_error);
  // rho must be sorted ascending
  CHECK_THROWS_AS(
      parse_diagram(R"({"kind":"LS","dim0":[[0,1,[3,1]]],"dim1":[]})"),
      input_error);
}

TEST_CASE("canonical serialization is relabeling-invariant") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const ColoredGraph g = random_colored_graph(8, 0.45, {"red", "blue"}, seed);
    const ColoredGraph h = permute(g, random_permutation(8, seed + 31));
    Rng rng(seed + 3);
    const ColorFiltrationSpec spec = random_filtration_spec({"red", "blue"}, rng);
    CHECK(serialize_diagram(compute_spectre(g, spec)) ==
          serialize_diagram(compute_spectre(h, spec)));
  }
}

}  // TEST_SUITE
