#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "artinlab/complex.hpp"
#include "artinlab/errors.hpp"
#include "graphs.hpp"
#include "oracles.hpp"

using namespace artinlab;
using test_graphs::make;

namespace {

std::vector<std::string> colors(const DevelopedComplex& x, GeneratorSet keep) {
  std::vector<std::string> out;
  const DefiningGraph& g = *x.graph();
  for (const auto& v : x.vertices()) out.push_back(g.format(v.coset.type & keep));
  return out;
}

std::vector<std::string> renamed_colors(const DevelopedComplex& x, const DefiningGraph& parent, GeneratorSet within) {
  std::vector<std::string> out;
  const std::vector<Generator> members = within.to_vector();
  for (const auto& v : x.vertices()) {
    GeneratorSet lifted;
    for (Generator s : v.coset.type) lifted.insert(members[s]);
    out.push_back(parent.format(lifted));
  }
  return out;
}

std::map<std::size_t, std::size_t> count_by_size(const std::vector<Simplex>& simplices) {
  std::map<std::size_t, std::size_t> out;
  for (const Simplex& s : simplices) ++out[s.size()];
  return out;
}

}  // namespace

TEST_CASE("fundamental domain of the worked example") {
  const auto g = test_graphs::worked_example();
  const auto k = fundamental_domain(g);
  CHECK(k.dimension() == 2);
  REQUIRE(k.vertex_types.size() == 3);
  CHECK(k.vertex_types[0] == g.subset("d e f"));
  CHECK(k.vertex_types[1] == g.subset("a b c f"));
  CHECK(k.vertex_types[2] == g.subset("a b c d e"));
  REQUIRE(k.faces.size() == 7);
  CHECK(k.faces[3].local_group == g.subset("f"));
  CHECK(k.faces[4].local_group == g.subset("d e"));
  CHECK(k.faces[5].local_group == g.subset("a b c"));
  CHECK(k.faces[6].local_group.empty());

  const auto edge = fundamental_domain(make(2, ""));
  CHECK(edge.dimension() == 1);
  CHECK(edge.vertex_types == std::vector<GeneratorSet>{GeneratorSet{1}, GeneratorSet{0}});
  CHECK(edge.faces.back().local_group.empty());
  CHECK_THROWS_AS(fundamental_domain(test_graphs::square()), DegenerateDomainError);
}

TEST_CASE("radius zero is the fundamental domain") {
  for (const auto& g : {test_graphs::worked_example(), test_graphs::raag_a(), test_graphs::free2()}) {
    const auto mode = mode_applicable(g, OracleMode::Raag) ? OracleMode::Raag : OracleMode::CoxeterShadow;
    const auto x = develop_ball(g, mode, 0);
    const auto k = fundamental_domain(g);
    CHECK(x.chambers().size() == 1);
    CHECK(x.vertices().size() == k.blocks.size());
    CHECK(x.dimension() == static_cast<int>(k.dimension()));
    CHECK(x.simplices().size() == k.faces.size());
  }
  CHECK_THROWS_AS(develop_ball(test_graphs::square(), OracleMode::Raag, 1), DegenerateDomainError);
  CHECK_THROWS_AS(develop_ball(make(2, "a-b:3"), OracleMode::Dihedral, 1), ModeError);
}

TEST_CASE("free group ball is a tree fragment") {
  const auto g = test_graphs::free2();
  const auto x = develop_ball(g, OracleMode::Raag, 1);
  CHECK(x.chambers().size() == 5);
  const CosetVertex e_type_b{GeneratorSet{1}, Word{}};
  const auto v = x.find(e_type_b);
  REQUIRE(v);
  // Chambers e, b and b^-1 share the A_{b} vertex of the identity.
  std::size_t containing = 0;
  for (const Simplex& c : x.chambers()) containing += std::count(c.begin(), c.end(), *v);
  CHECK(containing == 3);
  CHECK(x.vertices().size() == 6);
  CHECK(x.dimension() == 1);
  CHECK(find_full_cycles_up_to(x, 8).empty());
  CHECK(connectivity_check(x));
  CHECK(systole_certificate(x).verdict == Verdict::Pass);
  CHECK(locally_6_large_check(x).verdict == Verdict::Pass);
}

TEST_CASE("simplex counts match brute-force coset enumeration") {
  for (auto [g, radius] : {std::pair{test_graphs::raag_a(), std::size_t{2}}, std::pair{test_graphs::free2(), std::size_t{3}},
                           std::pair{make(4, "a-b:2 b-c:2"), std::size_t{2}}}) {
    const auto x = develop_ball(g, OracleMode::Raag, radius);
    const auto blocks = hat_components(g);

    std::set<std::vector<Letter>> elements;
    for (const Word& w : oracle_support::all_words(g.size(), radius)) {
      elements.insert(oracle_support::raag_bfs_normal_form(g, w).letters());
    }
    std::vector<Word> chambers;
    for (const auto& e : elements) chambers.push_back(Word(e));

    // Vertices: (block, element) up to h^-1 g in A_{V - block}.
    std::vector<std::pair<std::size_t, Word>> vertices;
    std::set<std::set<std::size_t>> simplices;
    for (const Word& c : chambers) {
      std::vector<std::size_t> chamber;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        const GeneratorSet type = g.all() - blocks.blocks[b];
        std::size_t id = vertices.size();
        for (std::size_t i = 0; i < vertices.size(); ++i) {
          if (vertices[i].first != b) continue;
          const Word q = oracle_support::raag_bfs_normal_form(g, vertices[i].second.inverse() * c);
          if (q.support().subset_of(type)) {
            id = i;
            break;
          }
        }
        if (id == vertices.size()) vertices.emplace_back(b, c);
        chamber.push_back(id);
      }
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << chamber.size()); ++mask) {
        std::set<std::size_t> face;
        for (std::size_t i = 0; i < chamber.size(); ++i) {
          if ((mask >> i) & 1u) face.insert(chamber[i]);
        }
        simplices.insert(face);
      }
    }
    CHECK(x.chambers().size() == chambers.size());
    CHECK(x.vertices().size() == vertices.size());
    std::map<std::size_t, std::size_t> expected;
    for (const auto& s : simplices) ++expected[s.size()];
    CHECK(count_by_size(x.simplices()) == expected);
  }
}

TEST_CASE("complex invariants") {
  const auto g = test_graphs::raag_a();
  const auto x = develop_ball(g, OracleMode::Raag, 3);
  const WordOracle& oracle = *x.oracle();
  CHECK(connectivity_check(x));
  CHECK(x.dimension() == 2);
  for (std::size_t c = 0; c < x.chambers().size(); ++c) {
    const Word& element = x.chamber_elements()[c];
    for (VertexId v : x.chambers()[c]) {
      const CosetVertex& cv = x.vertices()[v].coset;
      CHECK(cv.rep == oracle.min_coset_rep(element, cv.type));
    }
  }
  // Interior vertices have short representatives.
  for (const auto& v : x.vertices()) CHECK(v.interior == (v.coset.rep.size() < 3));
  // Gluing: chambers g and g*h with h in A_S share the type-S vertex.
  const auto blocks = hat_components(g);
  for (std::size_t c = 0; c < x.chambers().size(); c += 7) {
    for (GeneratorSet b : blocks.blocks) {
      const GeneratorSet type = g.all() - b;
      for (Generator s : type) {
        const Word other = oracle.reduce(x.chamber_elements()[c] * Word::generator(s));
        CHECK(oracle.min_coset_rep(other, type) == oracle.min_coset_rep(x.chamber_elements()[c], type));
      }
    }
  }
  // Chords are decided independently of the radius.
  const auto bigger = develop_ball(g, OracleMode::Raag, 4);
  for (VertexId u = 0; u < x.vertices().size(); u += 3) {
    for (VertexId w = u + 1; w < x.vertices().size(); w += 5) {
      const auto bu = bigger.find(x.vertices()[u].coset), bw = bigger.find(x.vertices()[w].coset);
      REQUIRE(bu);
      REQUIRE(bw);
      const VertexId small_pair[2] = {u, w}, big_pair[2] = {*bu, *bw};
      CHECK(x.spans_simplex(small_pair) == bigger.spans_simplex(big_pair));
    }
  }
}

TEST_CASE("two blocks give a bipartite graph") {
  const auto g = test_graphs::two_squares();
  const auto x = develop_ball(g, OracleMode::Raag, 3);
  CHECK(x.dimension() == 1);
  for (VertexId v = 0; v < x.vertices().size(); ++v) {
    for (VertexId w : x.neighbors(v)) CHECK(x.vertices()[v].coset.type != x.vertices()[w].coset.type);
  }
  for (const auto& c : find_full_cycles_up_to(x, 6)) CHECK(c.length % 2 == 0);
}

TEST_CASE("links") {
  const auto g = test_graphs::worked_example();
  const auto k = develop_ball(g, OracleMode::CoxeterShadow, 0);
  const auto top = link(k, k.chambers()[0]);
  CHECK(top.vertices().empty());
  CHECK(top.dimension() == -1);
  CHECK(connectivity_check(top));
  const auto edge_link = link(k, Simplex{0, 1});
  REQUIRE(edge_link.vertices().size() == 1);
  CHECK(edge_link.vertices()[0].coset.type == k.vertices()[2].coset.type);

  const auto x = develop_ball(test_graphs::raag_a(), OracleMode::Raag, 2);
  VertexId same_type = 1;
  while (x.vertices()[same_type].coset.type != x.vertices()[0].coset.type) ++same_type;
  CHECK_THROWS_AS(link(x, Simplex{0, same_type}), InputError);
}

TEST_CASE("link of a vertex is a ball of the subgraph complex") {
  const auto g = test_graphs::raag_a();
  const auto x = develop_ball(g, OracleMode::Raag, 3);
  const auto blocks = hat_components(g);
  for (GeneratorSet b : blocks.blocks) {
    const GeneratorSet u = g.all() - b;
    const DefiningGraph sub = full_subgraph(g, u);
    if (hat_components(sub).size() < 2) continue;
    for (VertexId v = 0; v < x.vertices().size(); ++v) {
      const CosetVertex& cv = x.vertices()[v].coset;
      if (cv.type != u || cv.rep.size() > 1) continue;
      const auto l = link(x, Simplex{v});
      const std::size_t radius = 3 - cv.rep.size();
      const auto ball = develop_ball(sub, OracleMode::Raag, radius);
      INFO("type " << g.format(u) << " rep " << format_word(g, cv.rep));
      CHECK(isomorphic(l, colors(l, u), ball, renamed_colors(ball, g, u)));
      // A wrong radius is detected.
      const auto smaller = develop_ball(sub, OracleMode::Raag, radius - 1);
      CHECK_FALSE(isomorphic(l, colors(l, u), smaller, renamed_colors(smaller, g, u)));
    }
  }
}

TEST_CASE("hand-built complexes") {
  // Chordless square.
  const auto square = DevelopedComplex::from_facets(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const auto cycles = find_full_cycles_up_to(square, 4);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].fullness == Fullness::Full);
  const auto sys = systole_certificate(square);
  CHECK(sys.verdict == Verdict::Fail);
  CHECK(sys.witnesses["length"] == 4);

  // Square with a diagonal.
  const auto split = DevelopedComplex::from_facets(4, {{0, 1, 2}, {0, 2, 3}});
  for (const auto& c : find_full_cycles_up_to(split, 4)) CHECK(c.fullness == Fullness::NotFull);
  const auto with_chord = DevelopedComplex::from_facets(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  bool four_not_full = false;
  for (const auto& c : find_full_cycles_up_to(with_chord, 4)) {
    if (c.length == 4) four_not_full = c.fullness == Fullness::NotFull;
  }
  CHECK(four_not_full);

  // Boundary of a present 2-simplex.
  const auto filled = DevelopedComplex::from_facets(3, {{0, 1, 2}});
  const auto tri = find_full_cycles_up_to(filled, 3);
  REQUIRE(tri.size() == 1);
  CHECK(tri[0].fullness == Fullness::NotFull);
  const auto hollow = DevelopedComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(find_full_cycles_up_to(hollow, 3)[0].fullness == Fullness::Full);

  // A cone over an empty square: the apex link is that square.
  const auto cone = DevelopedComplex::from_facets(5, {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}});
  CHECK(systole_certificate(cone).verdict == Verdict::Fail);
  CHECK(locally_6_large_check(cone).verdict == Verdict::Fail);

  CHECK_FALSE(connectivity_check(DevelopedComplex::from_facets(4, {{0, 1}, {2, 3}})));
  CHECK(connectivity_check(DevelopedComplex{}));
  CHECK(locally_6_large_check(DevelopedComplex::from_facets(3, {{0, 1}, {1, 2}})).verdict == Verdict::Pass);
  CHECK_THROWS_AS(find_full_cycles_up_to(square, 2), InputError);
  CHECK_THROWS_AS(DevelopedComplex::from_facets(2, {{0, 5}}), InputError);
}

TEST_CASE("typed isomorphism respects colors") {
  const auto a = DevelopedComplex::from_facets(3, {{0, 1}, {1, 2}});
  const auto b = DevelopedComplex::from_facets(3, {{0, 2}, {2, 1}});
  CHECK(isomorphic(a, {"x", "y", "x"}, b, {"x", "x", "y"}));
  CHECK_FALSE(isomorphic(a, {"x", "y", "x"}, b, {"x", "y", "x"}));
  const auto path = DevelopedComplex::from_facets(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto star = DevelopedComplex::from_facets(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(isomorphic(path, {"p", "p", "p", "p"}, star, {"p", "p", "p", "p"}));
}

TEST_CASE("three-block ball is locally 6-large") {
  const auto x = develop_ball(test_graphs::raag_a(), OracleMode::Raag, 3);
  for (const auto& c : find_full_cycles_up_to(x, 5)) CHECK(c.fullness != Fullness::Full);
  CHECK(systole_certificate(x).verdict == Verdict::Pass);
  CHECK(locally_6_large_check(x).verdict == Verdict::Pass);
}
