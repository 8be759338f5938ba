#include <catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "artinlab/criteria.hpp"
#include "artinlab/errors.hpp"
#include "artinlab/finite_type.hpp"
#include "graphs.hpp"

using namespace artinlab;
using test_graphs::make;

namespace {

std::vector<std::string> names(const nlohmann::ordered_json& j) { return j.get<std::vector<std::string>>(); }

}  // namespace

TEST_CASE("angle bound on the worked example") {
  const auto r = angle_link_check(test_graphs::worked_example());
  CHECK(r.verdict == Verdict::Pass);
  CHECK(std::abs(r.witnesses["minimum"].get<double>() - 2 * std::numbers::pi / 3) < 1e-12);
  CHECK(names(r.witnesses["pair"]) == std::vector<std::string>{"d", "f"});

  const auto edge = angle_link_check(make(2, "a-b:3"));
  CHECK(edge.verdict == Verdict::Pass);
  CHECK(std::abs(edge.witnesses["minimum"].get<double>() - 2 * std::numbers::pi / 3) < 1e-12);
  const auto apart = angle_link_check(make(2, ""));
  CHECK(apart.verdict == Verdict::Pass);
  CHECK(apart.witnesses["minimum"] == "infinity");
  CHECK(angle_link_check(test_graphs::square()).verdict == Verdict::NotApplicable);
}

TEST_CASE("metric link graph lengths") {
  const auto m = metric_link_graph(test_graphs::worked_example());
  CHECK(m.vertex_count == 6);
  for (const auto& arc : m.arcs) {
    CHECK(arc.length >= std::numbers::pi / 2);
    CHECK(arc.length < std::numbers::pi);
  }
  const auto d = m.distances();
  CHECK(d[3 * 6 + 5] == Catch::Approx(2 * std::numbers::pi / 3));
  CHECK(d[1 * 6 + 3] == Catch::Approx(4 * std::numbers::pi / 5));
  CHECK(d[2 * 6 + 4] == Catch::Approx(5 * std::numbers::pi / 6));
  CHECK(d[4 * 6 + 5] == Catch::Approx(8 * std::numbers::pi / 9));
  CHECK(d[0 * 6 + 5] == Catch::Approx(std::numbers::pi / 2 + 4 * std::numbers::pi / 5 + 2 * std::numbers::pi / 3));
}

TEST_CASE("angle bound survives extra cross-block edges") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = test_graphs::random_graph(rng, 3 + trial % 5, 6);
    const auto blocks = hat_components(g);
    if (blocks.size() < 2) continue;
    const auto before = angle_link_check(g);
    REQUIRE(before.verdict == Verdict::Pass);
    std::vector<Edge> edges = g.edges();
    for (Generator u = 0; u < g.size(); ++u) {
      for (Generator v = u + 1; v < g.size(); ++v) {
        if (!g.adjacent(u, v) && blocks.block_of(u) != blocks.block_of(v)) {
          edges.push_back({u, v, 3 + static_cast<Label>(rng() % 5)});
          u = static_cast<Generator>(g.size());
          break;
        }
      }
    }
    const DefiningGraph h(g.names(), edges);
    const auto after = angle_link_check(h);
    if (hat_components(h).size() >= 2) CHECK(after.verdict == Verdict::Pass);
  }
}

TEST_CASE("finite-type cliques stay inside blocks") {
  const auto r = prop_cliques_check(test_graphs::worked_example());
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.witnesses["cliques"].size() == 1);
  CHECK(prop_cliques_check(make(3, "a-b:2 b-c:2 a-c:2")).verdict == Verdict::Pass);
  CHECK(prop_cliques_check(make(3, "a-b:2 b-c:3 a-c:3")).verdict == Verdict::NotApplicable);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = test_graphs::random_graph(rng, 3 + trial % 5, 5);
    const auto v = prop_cliques_check(g).verdict;
    CHECK(v != Verdict::Fail);
    CHECK((v == Verdict::NotApplicable) == !is_locally_reducible(g).locally_reducible);
  }
}

TEST_CASE("product lemma") {
  const auto f2 = test_graphs::free2();
  CHECK(lemma_product_check(f2, GeneratorSet{0}, GeneratorSet{1}, OracleMode::Raag, 4).verdict == Verdict::Pass);
  const auto g = make(3, "a-b:2");
  CHECK(lemma_product_check(g, g.subset("a b"), g.subset("c"), OracleMode::Raag, 3).verdict == Verdict::Pass);
  const auto degenerate = lemma_product_check(g, g.subset("a b"), g.subset("c"), OracleMode::Raag, 2, true);
  CHECK(degenerate.verdict == Verdict::Fail);
  CHECK_THROWS_AS(lemma_product_check(g, g.subset("a b"), g.subset("c"), OracleMode::CoxeterShadow, 2), ModeError);
  CHECK_THROWS_AS(lemma_product_check(g, g.subset("a"), g.subset("c"), OracleMode::Raag, 2), InputError);
  CHECK_THROWS_AS(lemma_product_check(g, g.subset("c"), g.subset("c"), OracleMode::Raag, 2), InputError);
}

TEST_CASE("no full 4-cycles with two blocks") {
  const auto r = no_full_4cycle_check(test_graphs::two_squares(), OracleMode::Raag, 3);
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.witnesses["dimension"] == 1);
  CHECK(r.witnesses["bipartite_by_type"] == true);
  CHECK(no_full_4cycle_check(test_graphs::free2(), OracleMode::Raag, 3).verdict == Verdict::Pass);
  CHECK(no_full_4cycle_check(test_graphs::worked_example(), OracleMode::Raag, 3).verdict == Verdict::NotApplicable);
}

TEST_CASE("weak malnormality witnesses") {
  const auto g = make(3, "a-b:2");
  const auto r = weak_malnormality_witness(g, g.subset("c"), OracleMode::Raag, 6);
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.witnesses["g"] == "c");
  const auto a = test_graphs::raag_a();
  const auto r2 = weak_malnormality_witness(a, a.subset("a b"), OracleMode::Raag, 5);
  CHECK(r2.verdict == Verdict::Pass);
  CHECK(r2.witnesses["g"] == "a b");
  CHECK(weak_malnormality_witness(test_graphs::square(), test_graphs::square().all(), OracleMode::Raag, 3).verdict ==
        Verdict::NotApplicable);
  // Monotone in the bound.
  for (std::size_t len = 0; len <= 5; ++len) {
    CHECK(weak_malnormality_witness(a, a.subset("a b"), OracleMode::Raag, len).verdict == Verdict::Pass);
  }
}

TEST_CASE("splittings") {
  const auto f2 = enumerate_splittings(test_graphs::free2());
  REQUIRE(f2.size() == 1);
  CHECK(f2[0] == Splitting{GeneratorSet{0}, GeneratorSet{1}, GeneratorSet{}});
  const auto path = enumerate_splittings(make(3, "a-b:3 b-c:7"));
  REQUIRE(path.size() == 1);
  CHECK(path[0] == Splitting{GeneratorSet{0, 1}, GeneratorSet{1, 2}, GeneratorSet{1}});
  CHECK(enumerate_splittings(make(4, "a-b:2 a-c:3 a-d:4 b-c:5 b-d:2 c-d:3")).empty());

  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = test_graphs::random_graph(rng, 2 + trial % 6, 3);
    for (const Splitting& s : enumerate_splittings(g)) {
      CHECK((s.gamma1 | s.gamma2) == g.all());
      CHECK((s.gamma1 & s.gamma2) == s.core);
      CHECK_FALSE(s.gamma1.subset_of(s.gamma2));
      CHECK_FALSE(s.gamma2.subset_of(s.gamma1));
      for (const Edge& e : g.edges()) {
        const GeneratorSet ends{e.u, e.v};
        CHECK((ends.subset_of(s.gamma1) || ends.subset_of(s.gamma2)));
      }
    }
  }
}

TEST_CASE("acylindricity report") {
  const auto ex = acylindricity_report(test_graphs::worked_example());
  CHECK(ex.verdict == Verdict::Pass);
  CHECK(ex.witnesses["satisfied_by"] == "condition_1");
  CHECK(names(ex.witnesses["condition_1"]["edge"]) == std::vector<std::string>{"b", "d"});
  CHECK(names(ex.witnesses["condition_1"]["completion"]) == std::vector<std::string>{"a", "b", "c", "d", "e"});

  const auto sq = acylindricity_report(test_graphs::square());
  CHECK(sq.witnesses["condition_1"]["holds"] == false);
  CHECK(sq.witnesses["condition_2"]["proof_chain_reading"] == false);
  CHECK(sq.witnesses["condition_2"]["statement_reading"] == false);
  CHECK(sq.witnesses["direct_product_obstruction"]["holds"] == true);
  CHECK(sq.verdict == Verdict::Fail);

  const auto f2 = acylindricity_report(test_graphs::free2());
  CHECK(f2.verdict == Verdict::Pass);
  CHECK(f2.witnesses["satisfied_by"] == "condition_2");
  CHECK(f2.witnesses["condition_2"]["splitting"]["core"].empty());
  CHECK(f2.witnesses["direct_product_obstruction"]["holds"] == false);

  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = test_graphs::random_graph(rng, 2 + trial % 6, 5);
    const auto r = acylindricity_report(g);
    if (r.witnesses["condition_1"]["holds"] == true) CHECK(hat_components(g).size() >= 2);
  }
}

TEST_CASE("direct product factors") {
  CHECK(direct_product_factors(test_graphs::square()).size() == 2);
  CHECK(direct_product_factors(test_graphs::free2()).size() == 1);
  CHECK(direct_product_factors(make(3, "a-b:2 a-c:2")).size() == 2);
}
