#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fairrep/cover_opt.hpp"
#include "fairrep/perm.hpp"
#include "fairrep/rational.hpp"

namespace fairrep {

// Finitely supported weight function on element ids. Zero weights are not
// stored.
class WeightFunction {
 public:
  WeightFunction() = default;
  explicit WeightFunction(std::map<int, Rational> weights);

  const std::map<int, Rational>& weights() const { return weights_; }
  Rational at(int element) const;
  Rational total() const;
  // Sum of weights over the elements of a sorted set.
  Rational mass(const std::vector<int>& elements) const;

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;
  friend bool operator<(const WeightFunction& a, const WeightFunction& b) { return a.weights_ < b.weights_; }

 private:
  std::map<int, Rational> weights_;
};

struct WeightedFamily {
  std::vector<WeightFunction> functions;

  std::set<Rational> weight_set() const;
  friend bool operator==(const WeightedFamily&, const WeightedFamily&) = default;
};

struct OrbitLedgerEntry {
  int orbit = 0;
  std::int64_t size = 0;
  std::int64_t hits = 0;  // |orbit ∩ X|
  bool admitted = false;
};

// One inequality lhs <= rhs recorded by a construction.
struct BoundCheck {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

BoundCheck make_check(std::string name, const Rational& lhs, const Rational& rhs);

struct LiftedInstance {
  std::int64_t e_size = 1;       // |E|
  BigInt lifted_max_size = 0;    // max |F~| = M * |E|
  std::int64_t multiplicity = 1; // k = |E|
};

struct SymmetrizationReport {
  std::vector<int> y;
  // max |F| (multiple) or max sum F (weighted); unset for an empty family.
  std::optional<Rational> bound;
  int k = 1;
  // Orbit classes in id order. Classes of the supplied partition come first;
  // elements outside its ground set follow as singleton classes.
  std::vector<std::vector<int>> classes;
  std::vector<OrbitLedgerEntry> ledger;
  std::vector<BoundCheck> checks;
  std::optional<LiftedInstance> lift;

  // |Y| <= factor * |X|: m/k or M.
  std::optional<Rational> bound_factor() const;
  bool ok() const;
};

// Y = union of classes C with |C ∩ X| * m >= |C| * k, m = max |F|.
// Throws Infeasible if X is not a k-multiple system.
SymmetrizationReport symmetrize_multiple(const FamilyOfSets& family, const std::vector<int>& x, int k,
                                         const OrbitPartition& orbits);

// Y = union of classes C with |C ∩ X| * M >= |C|, M = max sum F after each
// weight is clamped to min(w, 1). Throws InputError on negative weights and
// Infeasible if X is not a weighted system.
SymmetrizationReport symmetrize_weighted(const WeightedFamily& family, const std::vector<int>& x,
                                         const OrbitPartition& orbits);

// The same Y obtained through the lifted instance on U x E with multiplicity
// |E| = lcm of weight denominators, evaluated on lifted orbit counts in
// integer arithmetic and projected back to U. Rejects |E| > 10^6.
SymmetrizationReport product_oracle(const WeightedFamily& family, const std::vector<int>& x,
                                    const OrbitPartition& orbits);

// lcm of the denominators of the clamped weights.
BigInt lifting_set_size(const WeightedFamily& family);
WeightedFamily clamp_weights(const WeightedFamily& family);

// Indices of members with |X ∩ F| < k.
std::vector<int> check_representatives(const FamilyOfSets& family, const std::vector<int>& x, int k);
// Indices of members with sum_{x in X} F(x) < 1.
std::vector<int> check_representatives(const WeightedFamily& family, const std::vector<int>& x);

// Closure of the family under every generator (acting on element ids; ids at
// or beyond the degree are fixed).
bool check_family_invariance(const FamilyOfSets& family, const PermGroup& group);
bool check_family_invariance(const WeightedFamily& family, const PermGroup& group);

}  // namespace fairrep
