#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fairrep/graph.hpp"

namespace fairrep {

using BigInt = boost::multiprecision::cpp_int;

// Bijection on 0..n-1 in image form. Points >= degree() are fixed.
class Permutation {
 public:
  Permutation() = default;
  // Throws InputError unless image is a bijection on 0..size-1.
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return i < degree() ? image_[i] : i; }
  const std::vector<int>& image() const { return image_; }
  bool is_identity() const;
  Permutation inverse() const;

  // (a * b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(int n, std::vector<Permutation> generators);
  static PermGroup trivial(int n) { return PermGroup(n, {}); }

  int degree() const { return n_; }
  const std::vector<Permutation>& generators() const { return gens_; }

 private:
  int n_ = 0;
  std::vector<Permutation> gens_;
};

// Partition of 0..ground_size()-1 into orbit classes, ordered by smallest
// element, each class sorted.
class OrbitPartition {
 public:
  OrbitPartition() = default;
  explicit OrbitPartition(std::vector<std::vector<int>> classes);
  static OrbitPartition singletons(int n);

  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int count() const { return static_cast<int>(classes_.size()); }
  int ground_size() const { return static_cast<int>(index_.size()); }
  int class_of(int x) const { return index_[x]; }
  bool contains(int x) const { return x >= 0 && x < ground_size(); }

  friend bool operator==(const OrbitPartition& a, const OrbitPartition& b) {
    return a.classes_ == b.classes_;
  }

 private:
  std::vector<std::vector<int>> classes_;
  std::vector<int> index_;
};

enum class Action { vertices, edges };

struct AutomorphismSearch {
  PermGroup group;
  // |Aut| as the product of base orbit lengths along 0, 1, ..., n-1.
  BigInt order;
};

// Generators of Aut(g) found by backtracking over vertex maps. Processes the
// stabiliser levels n-1..0; at each level it searches one automorphism per
// target not yet reached, smallest target first.
AutomorphismSearch search_automorphisms(const Graph& g);
PermGroup automorphism_group(const Graph& g);

// Order of the generated group by closure enumeration. Throws
// std::length_error when more than `cap` elements are reached.
std::uint64_t group_order(const PermGroup& group, std::uint64_t cap = 10'000'000);
std::vector<Permutation> group_elements(const PermGroup& group, std::uint64_t cap = 10'000'000);

// Orbits of the group on 0..degree-1.
OrbitPartition orbits(const PermGroup& group);
OrbitPartition orbits(const PermGroup& group, Action action, const Graph& g);

bool is_automorphism(const Graph& g, const Permutation& p);
bool is_vertex_transitive(const Graph& g);

// The permutation of edge ids induced by a vertex automorphism.
Permutation edge_permutation(const Graph& g, const Permutation& p);
PermGroup edge_action(const Graph& g, const PermGroup& group);

// Setwise fixity of `elements` under every generator.
bool is_invariant(const PermGroup& group, const std::vector<int>& elements);
bool is_union_of_classes(const OrbitPartition& partition, const std::vector<int>& elements);

}  // namespace fairrep
