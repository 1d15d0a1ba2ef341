#include <doctest.h>

#include <set>
#include <string>

#include "spectre/verify.hpp"

using namespace spectre;

TEST_SUITE("verify") {

TEST_CASE("all four suites pass at reduced size") {
  for (const char* name :
       {"lemma_b1", "metric_axioms", "stability", "isomorphism"}) {
    const VerifyOutcome out = run_verify_suite(name, 10, 1);
    CHECK(out.suite == name);
    CHECK(out.count == 10);
    CHECK(out.failures == 0);
    CHECK(out.passed());
    CHECK(out.messages.empty());
    CHECK_FALSE(out.replay_json.has_value());
  }
}

TEST_CASE("non-positive counts select the suite defaults") {
  const VerifyOutcome iso = run_verify_suite("isomorphism", 0, 2);
  CHECK(iso.count == 50);
  const VerifyOutcome lem = run_verify_suite("lemma_b1", -5, 2);
  CHECK(lem.count == 100);
}

TEST_CASE("suites are deterministic per seed") {
  const VerifyOutcome a = run_verify_suite("lemma_b1", 15, 9);
  const VerifyOutcome b = run_verify_suite("lemma_b1", 15, 9);
  CHECK(a.failures == b.failures);
  CHECK(a.count == b.count);
}

TEST_CASE("unknown suites are rejected") {
  CHECK_THROWS_AS(run_verify_suite("nonsense", 10, 1), input_error);
}

TEST_CASE("random spec helpers produce valid filtrations") {
  Rng rng(4);
  for (int i = 0; i < 25; ++i) {
    const ColorFiltrationSpec spec =
        random_filtration_spec({"red", "blue", "green"}, rng);
    CHECK(spec.f_v.size() == 3);
    CHECK(spec.f_e.size() == 6);
    for (const auto& [k, v] : spec.f_e) CHECK(v > 0);

    const ColorFiltrationSpec inj = random_injective_spec({"red", "blue"}, rng);
    CHECK(inj.f_v.at("red") != inj.f_v.at("blue"));
    std::set<double> edge_values;
    for (const auto& [k, v] : inj.f_e) edge_values.insert(v);
    CHECK(edge_values.size() == inj.f_e.size());
  }
}

TEST_CASE("random connected graphs are connected") {
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const ColoredGraph g = random_connected_graph(8, 0.3, {"red", "blue"}, rng);
    CHECK(connected_components(g).size() == 1);
  }
}

}  // TEST_SUITE
