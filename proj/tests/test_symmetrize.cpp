#include <doctest.h>

#include "corpus.hpp"
#include "fairrep/error.hpp"
#include "fairrep/subiso.hpp"
#include "fairrep/symmetrize.hpp"

using namespace fairrep;

namespace {

// Center `c` with weight 1, nine leaves c+1..c+9 with weight 1/3.
WeightFunction star(int c) {
  std::map<int, Rational> w{{c, Rational(1)}};
  for (int i = 1; i <= 9; ++i) w.emplace(c + i, Rational(1, 3));
  return WeightFunction(w);
}

std::vector<int> iota_vec(int from, int to) {
  std::vector<int> v;
  for (int i = from; i < to; ++i) v.push_back(i);
  return v;
}

PermGroup star_swap() {
  std::vector<int> img(20);
  for (int i = 0; i < 10; ++i) {
    img[i] = i + 10;
    img[i + 10] = i;
  }
  return PermGroup(20, {Permutation(img)});
}

}  // namespace

TEST_CASE("multiple: trivial group returns X") {
  FamilyOfSets fam{{{0, 1, 2}, {2, 3, 4}, {4, 5}}};
  std::vector<int> x{1, 4};
  auto r = symmetrize_multiple(fam, x, 1, OrbitPartition::singletons(6));
  CHECK(r.y == x);
  CHECK(r.ok());
  CHECK(*r.bound == 3);
}

TEST_CASE("multiple: two triangles under a single orbit") {
  FamilyOfSets fam{{{0, 1, 2}, {3, 4, 5}}};
  auto r = symmetrize_multiple(fam, {0, 3}, 1, OrbitPartition({{0, 1, 2, 3, 4, 5}}));
  CHECK(*r.bound == 3);
  REQUIRE(r.ledger.size() == 1);
  CHECK(r.ledger[0].hits == 2);
  CHECK(r.ledger[0].admitted);
  CHECK(r.y == iota_vec(0, 6));
  CHECK(r.checks[0].lhs == 6);
  CHECK(r.checks[0].rhs == 6);
  CHECK(r.ok());
}

TEST_CASE("multiple: 100-element sets with k = 2 give factor 50") {
  FamilyOfSets fam{{iota_vec(0, 100), iota_vec(100, 200)}};
  auto r = symmetrize_multiple(fam, {0, 1, 100, 101}, 2, OrbitPartition::singletons(200));
  CHECK(*r.bound == 100);
  CHECK(*r.bound_factor() == 50);
  CHECK(r.ok());
}

TEST_CASE("multiple: invalid input") {
  FamilyOfSets fam{{{0, 1, 2}, {3, 4, 5}}};
  CHECK_THROWS_WITH_AS(symmetrize_multiple(fam, {0}, 1, OrbitPartition::singletons(6)), doctest::Contains("violated: 1"),
                       Infeasible);
  CHECK_THROWS_AS(symmetrize_multiple(fam, {0, 3}, 2, OrbitPartition::singletons(6)), Infeasible);
  CHECK_THROWS_AS(symmetrize_multiple(fam, {0, 3}, 0, OrbitPartition::singletons(6)), InputError);
  auto empty = symmetrize_multiple(FamilyOfSets{}, {2}, 1, OrbitPartition::singletons(3));
  CHECK(empty.y.empty());
  CHECK_FALSE(empty.bound.has_value());
}

TEST_CASE("multiple: elements outside the partition are fixed points") {
  FamilyOfSets fam{{{0, 7}, {1, 8}}};
  auto r = symmetrize_multiple(fam, {7, 8}, 1, OrbitPartition({{0, 1}}));
  CHECK(r.y == std::vector<int>{7, 8});
  CHECK(r.classes.size() == 3);
}

TEST_CASE("weighted: student council constants") {
  WeightedFamily fam{{star(0)}};
  CHECK(fam.weight_set() == std::set<Rational>{Rational(1, 3), Rational(1)});
  auto r = symmetrize_weighted(fam, {0}, OrbitPartition::singletons(10));
  CHECK(*r.bound == 4);
  CHECK(*r.bound * 40 == 160);
  CHECK(lifting_set_size(fam) == 3);
  auto lifted = product_oracle(fam, {0}, OrbitPartition::singletons(10));
  REQUIRE(lifted.lift.has_value());
  CHECK(lifted.lift->e_size == 3);
  CHECK(lifted.lift->lifted_max_size == 12);
  CHECK(*lifted.bound == 4);
}

TEST_CASE("weighted: trivial group returns X") {
  WeightedFamily fam{{star(0), star(10)}};
  std::vector<int> x{0, 11, 12, 13};
  CHECK(symmetrize_weighted(fam, x, OrbitPartition::singletons(20)).y == x);
  CHECK(product_oracle(fam, x, OrbitPartition::singletons(20)).y == x);
}

TEST_CASE("weighted: two swapped stars keep the centers") {
  WeightedFamily fam{{star(0), star(10)}};
  PermGroup swap = star_swap();
  CHECK(check_family_invariance(fam, swap));
  auto parts = orbits(swap);
  auto r = symmetrize_weighted(fam, {0, 10}, parts);
  CHECK(r.y == std::vector<int>{0, 10});
  for (const auto& e : r.ledger) CHECK(e.admitted == (e.orbit == parts.class_of(0)));
  CHECK(product_oracle(fam, {0, 10}, parts).y == r.y);
  CHECK(r.ok());
}

TEST_CASE("weighted: clamping, negative weights, lifting guard") {
  WeightedFamily big{{WeightFunction({{0, Rational(3, 2)}, {1, Rational(1, 2)}})}};
  auto r = symmetrize_weighted(big, {0}, OrbitPartition::singletons(2));
  CHECK(*r.bound == Rational(3, 2));
  CHECK(lifting_set_size(big) == 2);

  WeightedFamily negative{{WeightFunction({{0, Rational(-1, 2)}, {1, Rational(1)}})}};
  CHECK_THROWS_AS(symmetrize_weighted(negative, {1}, OrbitPartition::singletons(2)), InputError);

  WeightedFamily primes{{WeightFunction({{0, Rational(1, 1000003)}, {1, Rational(1, 999983)}, {2, Rational(1)}})}};
  CHECK_THROWS_AS(product_oracle(primes, {2}, OrbitPartition::singletons(3)), InputError);

  WeightedFamily unit{{WeightFunction({{0, Rational(1)}, {1, Rational(1)}})}};
  auto plain = product_oracle(unit, {0}, OrbitPartition({{0, 1}}));
  CHECK(plain.lift->e_size == 1);
  CHECK(plain.y == symmetrize_multiple(FamilyOfSets{{{0, 1}}}, {0}, 1, OrbitPartition({{0, 1}})).y);

  CHECK_THROWS_AS(symmetrize_weighted(WeightedFamily{{star(0)}}, {1, 2}, OrbitPartition::singletons(10)), Infeasible);
  CHECK_THROWS_AS(product_oracle(WeightedFamily{{star(0)}}, {1, 2}, OrbitPartition::singletons(10)), Infeasible);
}

TEST_CASE("check_representatives") {
  FamilyOfSets two{{{0, 1, 2}, {3, 4, 5}}};
  CHECK(check_representatives(two, {0}, 1) == std::vector<int>{1});
  CHECK(check_representatives(two, iota_vec(0, 6), 1).empty());
  WeightedFamily stars{{star(0)}};
  CHECK(check_representatives(stars, {1, 2, 3}).empty());
  CHECK(check_representatives(stars, {1, 2}) == std::vector<int>{0});
}

TEST_CASE("check_family_invariance") {
  Graph host(6, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5), Edge(3, 5)});
  PermGroup aut = automorphism_group(host);
  FamilyOfSets tris{copy_edge_ids(host, enumerate_copies(cycle_graph(3), host))};
  CHECK(check_family_invariance(tris, edge_action(host, aut)));
  CHECK_FALSE(check_family_invariance(FamilyOfSets{{{0, 1}}}, PermGroup(3, {Permutation({1, 2, 0})})));
  CHECK_FALSE(check_family_invariance(WeightedFamily{{star(0)}}, star_swap()));
}

// The orbit rule reaches every member but may give it fewer than k points
// (or mass below 1). Frozen instances from the random corpus.
TEST_CASE("multiple: orbit rule can under-represent for k > 1") {
  FamilyOfSets fam{{{0, 1, 2, 3, 4, 5, 7},
                    {0, 1, 2, 3, 4, 6, 7},
                    {0, 1, 2, 3, 5, 6, 7},
                    {0, 1, 3, 4, 5, 6, 7},
                    {0, 2, 3, 4, 5, 6, 7},
                    {1, 2, 3, 4, 5, 6, 7}}};
  PermGroup g(8, {Permutation({5, 2, 6, 3, 0, 1, 4, 7})});
  REQUIRE(check_family_invariance(fam, g));
  auto r = symmetrize_multiple(fam, {3, 5, 6, 7}, 3, orbits(g));
  CHECK(r.y == std::vector<int>{3, 7});
  CHECK(check_representatives(fam, r.y, 3).size() == 6);
  CHECK(check_representatives(fam, r.y, 1).empty());
  CHECK(r.checks[0].holds);
  CHECK_FALSE(r.checks[2].holds);
  CHECK_FALSE(r.ok());
}

TEST_CASE("weighted: orbit rule can leave mass below 1") {
  // One fixed point 0 with weight 2/3; the rest spread over a 4-cycle orbit.
  const Rational a(2, 3), h(1, 2);
  std::vector<std::vector<Rational>> rows = {{h, h, a, a}, {h, h, a, 1}, {h, h, 1, a}, {h, a, h, a}, {h, a, h, 1},
                                             {h, a, a, h}, {h, a, 1, h}, {h, 1, h, a}, {h, 1, a, h}, {a, h, h, a},
                                             {a, h, h, 1}, {a, h, a, h}, {a, h, 1, h}, {a, a, h, h}, {a, 1, h, h},
                                             {1, h, h, a}, {1, h, a, h}, {1, a, h, h}};
  WeightedFamily fam;
  for (const auto& row : rows) {
    std::map<int, Rational> w{{0, a}};
    for (int i = 0; i < 4; ++i) w.emplace(i + 1, row[i]);
    fam.functions.emplace_back(w);
  }
  OrbitPartition parts({{0}, {1, 2, 3, 4}});
  auto r = symmetrize_weighted(fam, {0, 3}, parts);
  CHECK(*r.bound == Rational(10, 3));
  CHECK(r.y == std::vector<int>{0});
  CHECK(check_representatives(fam, r.y).size() == fam.functions.size());
  CHECK_FALSE(r.ok());
  CHECK(product_oracle(fam, {0, 3}, parts).y == r.y);
}

TEST_CASE("randomised properties and oracle equivalence") {
  corpus::Rng rng(41);
  int multiple_runs = 0, weighted_runs = 0, short_multiple = 0, short_weighted = 0;
  while (multiple_runs < 300 || weighted_runs < 300) {
    const int n = std::uniform_int_distribution<int>(1, 9)(rng);
    PermGroup g = corpus::random_group(rng, n);
    OrbitPartition parts = orbits(g);
    if (multiple_runs <= weighted_runs) {
      int k = std::uniform_int_distribution<int>(1, std::min(3, n))(rng);
      auto fam = corpus::invariant_family(rng, g, 2, k, n);
      REQUIRE(check_family_invariance(fam, g));
      auto x = corpus::repair_multiple(rng, fam, n, k);
      auto r = symmetrize_multiple(fam, x, k, parts);
      CHECK(is_union_of_classes(parts, r.y));
      CHECK(r.checks[0].holds);
      CHECK(r.checks[1].holds);
      CHECK(check_representatives(fam, r.y, 1).empty());
      if (!check_representatives(fam, r.y, k).empty()) ++short_multiple;
      if (k == 1) CHECK(r.ok());
      // Enlarging X never removes an orbit.
      auto bigger = x;
      bigger.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
      std::sort(bigger.begin(), bigger.end());
      bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
      auto r2 = symmetrize_multiple(fam, bigger, k, parts);
      CHECK(std::includes(r2.y.begin(), r2.y.end(), r.y.begin(), r.y.end()));
      ++multiple_runs;
    } else {
      auto fam = corpus::invariant_weighted_family(rng, g, 2);
      REQUIRE(check_family_invariance(fam, g));
      auto x = corpus::repair_weighted(rng, fam, n);
      auto r = symmetrize_weighted(fam, x, parts);
      CHECK(is_union_of_classes(parts, r.y));
      CHECK(r.checks.at(0).holds);
      CHECK(r.checks.at(1).holds);
      // Every function keeps some support inside Y.
      for (const auto& f : clamp_weights(fam).functions) {
        bool touched = false;
        for (int y : r.y) touched = touched || f.at(y) > 0;
        CHECK(touched);
      }
      if (!check_representatives(fam, r.y).empty()) ++short_weighted;
      auto lifted = product_oracle(fam, x, parts);
      CHECK(lifted.y == r.y);
      // Admission does not depend on the order of the family.
      WeightedFamily shuffled = fam;
      std::shuffle(shuffled.functions.begin(), shuffled.functions.end(), rng);
      auto r3 = symmetrize_weighted(shuffled, x, parts);
      CHECK(r3.y == r.y);
      CHECK(r3.bound == r.bound);
      ++weighted_runs;
    }
  }
  MESSAGE("under-represented: multiple " << short_multiple << "/" << multiple_runs << ", weighted " << short_weighted
                                         << "/" << weighted_runs);
}
