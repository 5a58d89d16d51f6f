#include <doctest.h>

#include "corpus.hpp"
#include "fairrep/cover_opt.hpp"
#include "fairrep/error.hpp"
#include "fairrep/subiso.hpp"
#include "oracles.hpp"

using namespace fairrep;

namespace {

FamilyOfSets k4_triangles() {
  Graph k4 = complete_graph(4);
  return FamilyOfSets{copy_edge_ids(k4, enumerate_copies(cycle_graph(3), k4))};
}

}  // namespace

TEST_CASE("min_hitting_set examples") {
  auto empty = min_hitting_set(FamilyOfSets{});
  CHECK(empty.value == 0);
  CHECK(empty.witness.empty());

  auto single = min_hitting_set(FamilyOfSets{{{3, 7}}});
  CHECK(single.value == 1);
  CHECK(single.witness == std::vector<int>{3});

  auto fam = k4_triangles();
  auto brute = oracle::min_hitting(6, std::vector<std::int64_t>(6, 1), fam.sets);
  CHECK(brute.value == 2);
  auto r = min_hitting_set(fam);
  CHECK(r.value == 2);
  CHECK(r.witness == brute.choice);

  CHECK_THROWS_AS(min_hitting_set(FamilyOfSets{{{1}, {}}}), Infeasible);
}

TEST_CASE("min_orbit_hitting_set examples") {
  auto fam = k4_triangles();
  auto trivial = min_orbit_hitting_set(fam, OrbitPartition::singletons(6));
  CHECK(trivial.value == min_hitting_set(fam).value);
  CHECK(trivial.witness == min_hitting_set(fam).witness);

  Graph k4 = complete_graph(4);
  auto sym = min_orbit_hitting_set(fam, orbits(automorphism_group(k4), Action::edges, k4));
  CHECK(sym.value == 6);
  CHECK(sym.witness_orbits == std::vector<int>{0});

  // Two disjoint triangles, swap + rotate: edges 0..2 and 3..5 in one orbit.
  FamilyOfSets two{{{0, 1, 2}, {3, 4, 5}}};
  OrbitPartition one_orbit({{0, 1, 2, 3, 4, 5}});
  // Exhaustive over the one class (weight 6); both triangles map to it.
  CHECK(oracle::min_hitting(1, {6}, {{0}, {0}}).value == 6);
  CHECK(min_orbit_hitting_set(two, one_orbit).value == 6);

  CHECK_THROWS_AS(min_orbit_hitting_set(FamilyOfSets{{{9}}}, OrbitPartition::singletons(3)), InputError);
  CHECK_THROWS_AS(min_orbit_hitting_set(FamilyOfSets{{{}}}, OrbitPartition::singletons(3)), Infeasible);
}

TEST_CASE("upsilon_edge examples") {
  CHECK(upsilon_edge(cycle_graph(3), complete_graph(4), false).value == 2);
  CHECK(upsilon_edge(cycle_graph(3), complete_graph(4), true).value == 6);
  CHECK(upsilon_edge(cycle_graph(3), cycle_graph(4), false).value == 0);
  CHECK(upsilon_edge(cycle_graph(3), cycle_graph(4), true).value == 0);
}

TEST_CASE("solvers agree with exhaustive enumeration") {
  corpus::Rng rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    const int m = std::uniform_int_distribution<int>(0, 14)(rng);
    FamilyOfSets fam;
    for (int s = 0; s < m; ++s) {
      std::vector<int> set;
      for (int i = 0; i < n; ++i)
        if (std::bernoulli_distribution(0.3)(rng)) set.push_back(i);
      if (set.empty()) set.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
      fam.sets.push_back(set);
    }
    auto brute = oracle::min_hitting(n, std::vector<std::int64_t>(n, 1), fam.sets);
    auto r = min_hitting_set(fam);
    CHECK(r.value == brute.value);
    CHECK(r.witness == brute.choice);

    PermGroup g = corpus::random_group(rng, n);
    OrbitPartition parts = orbits(g);
    if (parts.count() > 8) continue;
    std::vector<std::vector<int>> class_sets;
    for (const auto& s : fam.sets) {
      std::vector<int> cs;
      for (int e : s) cs.push_back(parts.class_of(e));
      class_sets.push_back(cs);
    }
    std::vector<std::int64_t> w;
    for (const auto& c : parts.classes()) w.push_back(static_cast<std::int64_t>(c.size()));
    auto obrute = oracle::min_hitting(parts.count(), w, class_sets);
    auto o = min_orbit_hitting_set(fam, parts);
    CHECK(o.value == obrute.value);
    CHECK(o.witness_orbits == obrute.choice);
    CHECK(hits_all(fam, o.witness));
  }
}

TEST_CASE("Corollary chain on small hosts") {
  corpus::Rng rng(37);
  Graph tt(4, {Edge(0, 1), Edge(1, 2), Edge(1, 3), Edge(2, 3)});
  for (int trial = 0; trial < 40; ++trial) {
    Graph host = corpus::random_graph(rng, 7, 0.55);
    for (const Graph* k : {&tt}) {
      auto plain = upsilon_edge(*k, host, false).value;
      auto sym = upsilon_edge(*k, host, true).value;
      CHECK(plain <= sym);
      CHECK(sym <= plain * k->size());
      CHECK(sym <= plain * (k->size() - 1));
    }
  }
}
