#include "fairrep/symmetrize.hpp"

#include <algorithm>
#include <map>

#include "fairrep/error.hpp"

namespace fairrep {

WeightFunction::WeightFunction(std::map<int, Rational> weights) {
  for (auto& [element, w] : weights) {
    if (element < 0) throw InputError("negative element id " + std::to_string(element));
    if (w != 0) weights_.emplace(element, std::move(w));
  }
}

Rational WeightFunction::at(int element) const {
  auto it = weights_.find(element);
  return it == weights_.end() ? Rational(0) : it->second;
}

Rational WeightFunction::total() const {
  Rational sum = 0;
  for (const auto& [element, w] : weights_) sum += w;
  return sum;
}

Rational WeightFunction::mass(const std::vector<int>& elements) const {
  Rational sum = 0;
  for (int e : elements) sum += at(e);
  return sum;
}

std::set<Rational> WeightedFamily::weight_set() const {
  std::set<Rational> w;
  for (const auto& f : functions)
    for (const auto& [element, value] : f.weights()) w.insert(value);
  return w;
}

BoundCheck make_check(std::string name, const Rational& lhs, const Rational& rhs) {
  return {std::move(name), lhs, rhs, lhs <= rhs};
}

std::optional<Rational> SymmetrizationReport::bound_factor() const {
  if (!bound) return std::nullopt;
  return *bound / k;
}

bool SymmetrizationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; });
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string list_indices(const std::vector<int>& idx) {
  std::string s;
  for (size_t i = 0; i < idx.size() && i < 20; ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  if (idx.size() > 20) s += ",...";
  return s;
}

// Orbit classes extended by singleton classes for elements outside the
// partition's ground set: such points are fixed by the group.
struct Classes {
  std::vector<std::vector<int>> members;
  std::map<int, int> extra;  // element -> class id for appended singletons
  const OrbitPartition* base = nullptr;

  int class_of(int e) const { return base->contains(e) ? base->class_of(e) : extra.at(e); }
};

Classes extend_classes(const OrbitPartition& orbits, const std::set<int>& elements) {
  Classes c;
  c.base = &orbits;
  c.members = orbits.classes();
  for (int e : elements) {
    if (e < 0) throw InputError("negative element id " + std::to_string(e));
    if (orbits.contains(e)) continue;
    c.extra.emplace(e, static_cast<int>(c.members.size()));
    c.members.push_back({e});
  }
  return c;
}

std::vector<std::int64_t> class_hits(const Classes& classes, const std::vector<int>& x) {
  std::vector<std::int64_t> hits(classes.members.size(), 0);
  for (int e : x) ++hits[classes.class_of(e)];
  return hits;
}

// Admission rule shared by the multiple-representative construction and the
// lifted product instance: |C ∩ X| * m >= |C| * k.
std::vector<char> admit_by_count(const std::vector<BigInt>& sizes, const std::vector<BigInt>& hits,
                                 const BigInt& m, const BigInt& k) {
  std::vector<char> admitted(sizes.size(), 0);
  for (size_t c = 0; c < sizes.size(); ++c) admitted[c] = hits[c] * m >= sizes[c] * k ? 1 : 0;
  return admitted;
}

void fill_ledger(SymmetrizationReport& report, const Classes& classes, const std::vector<std::int64_t>& hits,
                 const std::vector<char>& admitted) {
  report.classes = classes.members;
  for (size_t c = 0; c < classes.members.size(); ++c) {
    report.ledger.push_back({static_cast<int>(c), static_cast<std::int64_t>(classes.members[c].size()), hits[c],
                             admitted[c] != 0});
    if (admitted[c]) report.y.insert(report.y.end(), classes.members[c].begin(), classes.members[c].end());
  }
  std::sort(report.y.begin(), report.y.end());
}

std::int64_t overlap(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return static_cast<std::int64_t>(out.size());
}

std::set<int> elements_of(const WeightedFamily& family, const std::vector<int>& x) {
  std::set<int> all(x.begin(), x.end());
  for (const auto& f : family.functions)
    for (const auto& [e, w] : f.weights()) all.insert(e);
  return all;
}

void require_nonnegative(const WeightedFamily& family) {
  for (size_t i = 0; i < family.functions.size(); ++i)
    for (const auto& [e, w] : family.functions[i].weights())
      if (w < 0) throw InputError("function " + std::to_string(i) + " has negative weight at " + std::to_string(e));
}

void require_weighted_system(const WeightedFamily& family, const std::vector<int>& x) {
  auto bad = check_representatives(family, x);
  if (!bad.empty()) throw Infeasible("X is not a system of weighted representatives; violated: " + list_indices(bad));
}

}  // namespace

std::vector<int> check_representatives(const FamilyOfSets& family, const std::vector<int>& x, int k) {
  auto xs = sorted_unique(x);
  std::vector<int> bad;
  for (size_t i = 0; i < family.sets.size(); ++i)
    if (overlap(sorted_unique(family.sets[i]), xs) < k) bad.push_back(static_cast<int>(i));
  return bad;
}

std::vector<int> check_representatives(const WeightedFamily& family, const std::vector<int>& x) {
  auto xs = sorted_unique(x);
  std::vector<int> bad;
  for (size_t i = 0; i < family.functions.size(); ++i)
    if (family.functions[i].mass(xs) < 1) bad.push_back(static_cast<int>(i));
  return bad;
}

bool check_family_invariance(const FamilyOfSets& family, const PermGroup& group) {
  std::set<std::vector<int>> members;
  for (const auto& s : family.sets) members.insert(sorted_unique(s));
  for (const auto& g : group.generators())
    for (const auto& s : members) {
      std::vector<int> image;
      for (int e : s) image.push_back(g(e));
      if (!members.count(sorted_unique(std::move(image)))) return false;
    }
  return true;
}

bool check_family_invariance(const WeightedFamily& family, const PermGroup& group) {
  std::set<WeightFunction> members(family.functions.begin(), family.functions.end());
  for (const auto& g : group.generators()) {
    const Permutation inv = g.inverse();
    for (const auto& f : members) {
      // u -> F(g(u)) is supported on g^{-1}(supp F).
      std::map<int, Rational> image;
      for (const auto& [e, w] : f.weights()) image.emplace(inv(e), w);
      if (!members.count(WeightFunction(std::move(image)))) return false;
    }
  }
  return true;
}

SymmetrizationReport symmetrize_multiple(const FamilyOfSets& family, const std::vector<int>& x_in, int k,
                                         const OrbitPartition& orbits) {
  if (k < 1) throw InputError("multiplicity k must be positive");
  const auto x = sorted_unique(x_in);
  auto bad = check_representatives(family, x, k);
  if (!bad.empty())
    throw Infeasible("X is not a system of " + std::to_string(k) + "-multiple representatives; violated: " +
                     list_indices(bad));

  std::set<int> elements(x.begin(), x.end());
  std::int64_t m = 0;
  for (const auto& s : family.sets) {
    auto u = sorted_unique(s);
    elements.insert(u.begin(), u.end());
    m = std::max<std::int64_t>(m, static_cast<std::int64_t>(u.size()));
  }

  SymmetrizationReport report;
  report.k = k;
  Classes classes = extend_classes(orbits, elements);
  auto hits = class_hits(classes, x);
  std::vector<char> admitted(classes.members.size(), 0);
  if (!family.sets.empty()) {
    report.bound = Rational(m);
    std::vector<BigInt> sizes, counted;
    for (size_t c = 0; c < classes.members.size(); ++c) {
      sizes.emplace_back(classes.members[c].size());
      counted.emplace_back(hits[c]);
    }
    admitted = admit_by_count(sizes, counted, m, k);
  }
  fill_ledger(report, classes, hits, admitted);

  const auto xy = overlap(x, report.y);
  const Rational mr = report.bound.value_or(0);
  report.checks.push_back(make_check("k*|Y| <= |X∩Y|*m", Rational(k) * report.y.size(), Rational(xy) * mr));
  report.checks.push_back(make_check("|X∩Y|*m <= |X|*m", Rational(xy) * mr, Rational(x.size()) * mr));
  report.checks.push_back(
      make_check("members with |Y∩F| < k", Rational(check_representatives(family, report.y, k).size()), 0));
  return report;
}

WeightedFamily clamp_weights(const WeightedFamily& family) {
  require_nonnegative(family);
  WeightedFamily out;
  for (const auto& f : family.functions) {
    std::map<int, Rational> w;
    for (const auto& [e, value] : f.weights()) w.emplace(e, value > 1 ? Rational(1) : value);
    out.functions.emplace_back(std::move(w));
  }
  return out;
}

SymmetrizationReport symmetrize_weighted(const WeightedFamily& family_in, const std::vector<int>& x_in,
                                         const OrbitPartition& orbits) {
  const WeightedFamily family = clamp_weights(family_in);
  const auto x = sorted_unique(x_in);
  require_weighted_system(family, x);

  SymmetrizationReport report;
  Classes classes = extend_classes(orbits, elements_of(family, x));
  auto hits = class_hits(classes, x);
  std::vector<char> admitted(classes.members.size(), 0);
  if (!family.functions.empty()) {
    Rational big_m = 0;
    for (const auto& f : family.functions) big_m = std::max(big_m, f.total());
    report.bound = big_m;
    for (size_t c = 0; c < classes.members.size(); ++c)
      admitted[c] = Rational(hits[c]) * big_m >= Rational(classes.members[c].size()) ? 1 : 0;
  }
  fill_ledger(report, classes, hits, admitted);

  const auto xy = overlap(x, report.y);
  const Rational big_m = report.bound.value_or(0);
  report.checks.push_back(make_check("|Y| <= |X∩Y|*M", Rational(report.y.size()), Rational(xy) * big_m));
  report.checks.push_back(make_check("|X∩Y|*M <= |X|*M", Rational(xy) * big_m, Rational(x.size()) * big_m));
  report.checks.push_back(
      make_check("functions with Y-mass < 1", Rational(check_representatives(family, report.y).size()), 0));
  return report;
}

BigInt lifting_set_size(const WeightedFamily& family) {
  BigInt e = 1;
  for (const auto& w : clamp_weights(family).weight_set()) e = boost::multiprecision::lcm(e, denominator(w));
  return e;
}

SymmetrizationReport product_oracle(const WeightedFamily& family_in, const std::vector<int>& x_in,
                                    const OrbitPartition& orbits) {
  const WeightedFamily family = clamp_weights(family_in);
  const auto x = sorted_unique(x_in);
  const BigInt e_big = lifting_set_size(family);
  if (e_big > 1'000'000) throw InputError("lifting set size " + e_big.str() + " exceeds 10^6");
  const auto e_size = e_big.convert_to<std::int64_t>();

  // Over u the lifted set F~ holds F(u)*|E| points; all counts are integers.
  auto lifted_counts = [&](const WeightFunction& f) {
    std::map<int, BigInt> counts;
    for (const auto& [u, w] : f.weights()) {
      Rational c = w * e_size;
      if (denominator(c) != 1) throw DefectError("lifting set does not clear a denominator");
      counts.emplace(u, numerator(c));
    }
    return counts;
  };
  auto lifted_meet = [](const std::map<int, BigInt>& counts, const std::vector<int>& set) {
    BigInt n = 0;
    for (int u : set) {
      auto it = counts.find(u);
      if (it != counts.end()) n += it->second;
    }
    return n;
  };

  std::vector<std::map<int, BigInt>> lifted;
  BigInt lifted_m = 0;
  std::vector<int> bad;
  for (size_t i = 0; i < family.functions.size(); ++i) {
    lifted.push_back(lifted_counts(family.functions[i]));
    BigInt size = 0;
    for (const auto& [u, c] : lifted.back()) size += c;
    lifted_m = std::max(lifted_m, size);
    // The smallest |X~ ∩ F~| over lifts of F is the lifted mass of X.
    if (lifted_meet(lifted.back(), x) < e_size) bad.push_back(static_cast<int>(i));
  }
  if (!bad.empty())
    throw Infeasible("X x E is not a system of |E|-multiple representatives; violated: " + list_indices(bad));

  SymmetrizationReport report;
  Classes classes = extend_classes(orbits, elements_of(family, x));
  auto hits = class_hits(classes, x);
  std::vector<char> admitted(classes.members.size(), 0);
  if (!family.functions.empty()) {
    std::vector<BigInt> sizes, counted;
    for (size_t c = 0; c < classes.members.size(); ++c) {
      sizes.push_back(BigInt(classes.members[c].size()) * e_size);
      counted.push_back(BigInt(hits[c]) * e_size);
    }
    admitted = admit_by_count(sizes, counted, lifted_m, e_size);
    report.bound = Rational(lifted_m, e_size);
    report.lift = LiftedInstance{e_size, lifted_m, e_size};
  }
  fill_ledger(report, classes, hits, admitted);

  // Checks on the lifted instance: Y~ = Y x E, X~ = X x E.
  const BigInt y_lifted = BigInt(report.y.size()) * e_size;
  const BigInt xy_lifted = BigInt(overlap(x, report.y)) * e_size;
  report.checks.push_back(make_check("k~*|Y~| <= |X~∩Y~|*m~", Rational(y_lifted * e_size), Rational(xy_lifted * lifted_m)));
  std::int64_t missed = 0;
  for (const auto& counts : lifted)
    if (lifted_meet(counts, report.y) < e_size) ++missed;
  report.checks.push_back(make_check("lifted members with |Y~∩F~| < |E|", Rational(missed), 0));
  return report;
}

}  // namespace fairrep
