#include <catch_amalgamated.hpp>

#include "artinlab/defining_graph.hpp"
#include "artinlab/errors.hpp"
#include "graphs.hpp"

using namespace artinlab;
using test_graphs::worked_example;
using test_graphs::make;

TEST_CASE("full subgraph keeps labels and renumbers") {
  const auto g = worked_example();
  const auto abc = full_subgraph(g, g.subset("a b c"));
  CHECK(abc.names() == std::vector<std::string>{"a", "b", "c"});
  CHECK(abc.edges() == std::vector<Edge>{{0, 1, 2}, {0, 2, 7}, {1, 2, 2}});
  const auto def = full_subgraph(g, g.subset("d e f"));
  CHECK(def.edges() == std::vector<Edge>{{0, 1, 2}, {0, 2, 3}, {1, 2, 9}});
  CHECK(full_subgraph(g, {}).size() == 0);
  CHECK_THROWS_AS(g.subset("a z"), InputError);
}

TEST_CASE("hat keeps exactly the 2-labeled edges") {
  const auto g = worked_example();
  const auto h = hat(g);
  CHECK(h.size() == 6);
  CHECK(h.edges() == std::vector<Edge>{{0, 1, 2}, {1, 2, 2}, {3, 4, 2}});
  CHECK(hat(make(3, "a-b:3 b-c:4")).edges().empty());
  const auto sq = test_graphs::square();
  CHECK(hat(sq) == sq);
}

TEST_CASE("hat components") {
  const auto g = worked_example();
  const auto blocks = hat_components(g);
  REQUIRE(blocks.size() == 3);
  CHECK(blocks.blocks[0] == g.subset("a b c"));
  CHECK(blocks.blocks[1] == g.subset("d e"));
  CHECK(blocks.blocks[2] == g.subset("f"));
  CHECK(blocks.block_of(g.index_of("e")) == 1);
  CHECK(hat_components(make(3, "")).size() == 3);
  CHECK(hat_components(test_graphs::square()).size() == 1);
}

TEST_CASE("two-completion") {
  const auto g = worked_example();
  CHECK(two_completion_of_vertex(g, g.index_of("d")) == g.subset("d e"));
  CHECK(two_completion_of_vertex(g, g.index_of("f")) == g.subset("f"));
  CHECK(two_completion_of_vertex(make(2, ""), 0) == GeneratorSet{0});
  CHECK_THROWS_AS(g.index_of("q"), InputError);

  CHECK(is_two_complete(g, g.subset("a b c")));
  CHECK_FALSE(is_two_complete(g, g.subset("a b c d")));
  CHECK(is_two_complete(g, {}));

  CHECK(canonical_two_completion(g, g.subset("b d")) == g.subset("a b c d e"));
  CHECK(canonical_two_completion(g, g.subset("a b c")) == g.subset("a b c"));
  CHECK(canonical_two_completion(g, {}) == GeneratorSet{});
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(DefiningGraph({"a", "a"}, {}), InputError);
  CHECK_THROWS_AS(DefiningGraph({"a", "b"}, {{0, 0, 2}}), InputError);
  CHECK_THROWS_AS(DefiningGraph({"a", "b"}, {{0, 1, 1}}), InputError);
  CHECK_THROWS_AS(DefiningGraph({"a", "b"}, {{0, 1, 2}, {1, 0, 3}}), InputError);
  CHECK_THROWS_AS(DefiningGraph({"a", "b"}, {{0, 2, 2}}), InputError);
  CHECK_THROWS_AS(DefiningGraph({""}, {}), InputError);
  std::vector<std::string> many;
  for (int i = 0; i < 65; ++i) many.push_back("g" + std::to_string(i));
  CHECK_THROWS_AS(DefiningGraph(many, {}), InputError);
  many.pop_back();
  CHECK(DefiningGraph(many, {}).all().size() == 64);
}

TEST_CASE("generator sets iterate in declaration order") {
  GeneratorSet s{5, 1, 3};
  CHECK(s.to_vector() == std::vector<Generator>{1, 3, 5});
  CHECK(lex_less(GeneratorSet{0}, GeneratorSet{0, 1}));
  CHECK(lex_less(GeneratorSet{0, 1}, GeneratorSet{1}));
  CHECK_FALSE(lex_less(GeneratorSet{1}, GeneratorSet{1}));
  CHECK(worked_example().format(GeneratorSet{0, 2}) == "{a,c}");
}

TEST_CASE("graph_core properties on random graphs") {
  std::mt19937 rng(20231);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = test_graphs::random_graph(rng, 1 + trial % 8, 4);
    const auto blocks = hat_components(g);
    GeneratorSet cover;
    for (GeneratorSet b : blocks.blocks) {
      CHECK_FALSE(cover.intersects(b));
      cover |= b;
      CHECK(two_completion_of_vertex(g, b.front()) == b);
    }
    CHECK(cover == g.all());
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.size()); bits += 3) {
      const GeneratorSet t(bits);
      const GeneratorSet c = canonical_two_completion(g, t);
      CHECK(t.subset_of(c));
      CHECK(canonical_two_completion(g, c) == c);
      CHECK(is_two_complete(g, t) == (c == t));
      CHECK(hat(full_subgraph(g, t)) == full_subgraph(hat(g), t));
    }
  }
}
