#include <doctest.h>

#include "corpus.hpp"
#include "fairrep/error.hpp"
#include "fairrep/perm.hpp"
#include "oracles.hpp"

using namespace fairrep;

namespace {

Graph tailed_triangle() { return Graph(4, {Edge(0, 1), Edge(1, 2), Edge(1, 3), Edge(2, 3)}); }

}  // namespace

TEST_CASE("permutation basics") {
  Permutation p({1, 2, 0});
  CHECK(p(0) == 1);
  CHECK(p(7) == 7);
  CHECK((p * p.inverse()).is_identity());
  CHECK((p * p)(0) == 2);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InputError);
  CHECK_THROWS_AS(PermGroup(3, {Permutation({1, 0})}), InputError);
}

TEST_CASE("automorphism_group examples") {
  CHECK(group_order(automorphism_group(cycle_graph(3))) == 6);
  CHECK(group_order(automorphism_group(path_graph(3))) == 2);

  Graph tt = tailed_triangle();
  CHECK(oracle::automorphisms(tt).size() == 2);
  PermGroup g = automorphism_group(tt);
  CHECK(group_order(g) == 2);
  REQUIRE(g.generators().size() == 1);
  CHECK(g.generators()[0].image() == std::vector<int>{0, 1, 3, 2});
}

TEST_CASE("group_order") {
  CHECK(group_order(PermGroup(3, {Permutation::identity(3)})) == 1);
  CHECK(group_order(PermGroup(3, {Permutation({1, 2, 0})})) == 3);
  CHECK(oracle::automorphisms(complete_graph(4)).size() == 24);
  CHECK(group_order(automorphism_group(complete_graph(4))) == 24);
  CHECK_THROWS_AS(group_order(automorphism_group(complete_graph(6)), 100), std::length_error);
}

TEST_CASE("orbits examples") {
  Graph tri = cycle_graph(3);
  CHECK(orbits(PermGroup::trivial(3), Action::edges, tri).count() == 3);

  Graph k4 = complete_graph(4);
  auto k4_edges = orbits(automorphism_group(k4), Action::edges, k4);
  REQUIRE(k4_edges.count() == 1);
  CHECK(k4_edges.classes()[0].size() == 6);

  Graph tt = tailed_triangle();
  auto tt_edges = orbits(automorphism_group(tt), Action::edges, tt);
  // edge ids: 0:{0,1} 1:{1,2} 2:{1,3} 3:{2,3}
  CHECK(tt_edges.classes() == std::vector<std::vector<int>>{{0}, {1, 2}, {3}});

  CHECK_THROWS_AS(orbits(PermGroup::trivial(2), Action::vertices, tri), InputError);
}

TEST_CASE("is_vertex_transitive") {
  CHECK(is_vertex_transitive(cycle_graph(5)));
  CHECK_FALSE(is_vertex_transitive(path_graph(3)));
  CHECK(is_vertex_transitive(complete_graph(4)));
  CHECK_FALSE(is_vertex_transitive(Graph()));
}

TEST_CASE("automorphism search matches exhaustive enumeration") {
  corpus::Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 7)(rng);
    double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    Graph g = corpus::random_graph(rng, n, p);
    AutomorphismSearch s = search_automorphisms(g);
    for (const auto& gen : s.group.generators()) CHECK(is_automorphism(g, gen));
    auto all = oracle::automorphisms(g);
    CHECK(group_order(s.group) == all.size());
    CHECK(s.order == all.size());
  }
}

TEST_CASE("structured automorphism groups") {
  // Petersen graph: |Aut| = 120.
  std::vector<Edge> pe;
  for (int i = 0; i < 5; ++i) {
    pe.emplace_back(i, (i + 1) % 5);
    pe.emplace_back(i, i + 5);
    pe.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  Graph petersen(10, pe);
  CHECK(search_automorphisms(petersen).order == 120);
  CHECK(group_order(automorphism_group(petersen)) == 120);
  CHECK(search_automorphisms(complete_graph(12)).order == BigInt(479001600));
  CHECK(search_automorphisms(disjoint_union(cycle_graph(3), cycle_graph(3))).order == 72);
}

TEST_CASE("orbit partitions are generator-closed") {
  corpus::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 9)(rng);
    PermGroup g = corpus::random_group(rng, n);
    OrbitPartition p = orbits(g);
    int covered = 0;
    for (const auto& cls : p.classes()) {
      covered += static_cast<int>(cls.size());
      CHECK(is_invariant(g, cls));
      CHECK(is_union_of_classes(p, cls));
    }
    CHECK(covered == n);
  }
}

TEST_CASE("invariance is the same as being a union of orbits") {
  corpus::Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = corpus::random_graph(rng, 6, 0.5);
    PermGroup aut = automorphism_group(g);
    PermGroup on_edges = edge_action(g, aut);
    OrbitPartition p = orbits(on_edges);
    std::vector<int> subset;
    for (int id = 0; id < g.size(); ++id)
      if (std::bernoulli_distribution(0.5)(rng)) subset.push_back(id);
    CHECK(is_invariant(on_edges, subset) == is_union_of_classes(p, subset));
    // The union of a random selection of classes is always invariant.
    std::vector<int> unite;
    for (const auto& cls : p.classes())
      if (std::bernoulli_distribution(0.5)(rng)) unite.insert(unite.end(), cls.begin(), cls.end());
    CHECK(is_invariant(on_edges, unite));
  }
}
