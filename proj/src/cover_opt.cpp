#include "fairrep/cover_opt.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <set>

#include "fairrep/error.hpp"
#include "fairrep/subiso.hpp"

namespace fairrep {

namespace {

using Cost = std::int64_t;

// Weighted hitting set over items 0..n-1 with positive weights.
// Branch and bound: branch on the items of an uncovered set with the fewest
// available items; prune with a disjoint-set packing lower bound.
class HittingSolver {
 public:
  HittingSolver(std::vector<Cost> weights, std::vector<std::vector<int>> sets)
      : weights_(std::move(weights)), sets_(std::move(sets)) {
    for (auto& s : sets_) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    drop_supersets();
    item_sets_.resize(weights_.size());
    for (int s = 0; s < set_count(); ++s)
      for (int i : sets_[s]) item_sets_[i].push_back(s);
  }

  int item_count() const { return static_cast<int>(weights_.size()); }
  int set_count() const { return static_cast<int>(sets_.size()); }

  // Cheapest hitting set of the sets not in `precovered`, drawn from items
  // with index > `floor`, of total weight <= budget. nullopt if none.
  std::optional<std::pair<Cost, std::vector<int>>> solve(const std::vector<char>& precovered, int floor,
                                                          Cost budget) {
    covered_.assign(set_count(), 0);
    avail_.assign(set_count(), 0);
    excluded_.assign(item_count(), 0);
    for (int i = 0; i <= floor && i < item_count(); ++i) excluded_[i] = 1;
    for (int s = 0; s < set_count(); ++s) {
      covered_[s] = precovered[s] ? 1 : 0;
      for (int i : sets_[s]) avail_[s] += excluded_[i] ? 0 : 1;
      if (!covered_[s] && avail_[s] == 0) return std::nullopt;
    }
    best_cost_ = budget + 1;
    best_.clear();
    chosen_.clear();
    packing_mark_.assign(item_count(), 0);
    search(0);
    if (best_cost_ > budget) return std::nullopt;
    return std::make_pair(best_cost_, best_);
  }

  Cost greedy_cost() const {
    std::vector<char> covered(set_count(), 0);
    int left = set_count();
    Cost total = 0;
    while (left > 0) {
      int best = -1;
      double best_ratio = -1;
      for (int i = 0; i < item_count(); ++i) {
        int gain = 0;
        for (int s : item_sets_[i]) gain += covered[s] ? 0 : 1;
        double ratio = static_cast<double>(gain) / static_cast<double>(weights_[i]);
        if (gain > 0 && ratio > best_ratio) {
          best = i;
          best_ratio = ratio;
        }
      }
      total += weights_[best];
      for (int s : item_sets_[best])
        if (!covered[s]) {
          covered[s] = 1;
          --left;
        }
    }
    return total;
  }

  // Optimum cost and the lexicographically smallest optimal item sequence.
  std::pair<Cost, std::vector<int>> lex_min_optimum() {
    std::vector<char> none(set_count(), 0);
    auto first = solve(none, -1, greedy_cost());
    if (!first) throw DefectError("branch and bound missed the greedy solution");
    const Cost opt = first->first;

    std::vector<int> picked;
    std::vector<char> covered(set_count(), 0);
    Cost spent = 0;
    int last = -1;
    auto all_covered = [&] { return std::all_of(covered.begin(), covered.end(), [](char c) { return c; }); };
    while (!all_covered()) {
      bool advanced = false;
      for (int c = last + 1; c < item_count() && !advanced; ++c) {
        if (spent + weights_[c] > opt) continue;
        std::vector<char> next = covered;
        bool useful = false;
        for (int s : item_sets_[c])
          if (!next[s]) {
            next[s] = 1;
            useful = true;
          }
        if (!useful) continue;
        Cost remaining = opt - spent - weights_[c];
        bool done = std::all_of(next.begin(), next.end(), [](char x) { return x; });
        if (done ? remaining >= 0 : solve(next, c, remaining).has_value()) {
          picked.push_back(c);
          spent += weights_[c];
          covered = std::move(next);
          last = c;
          advanced = true;
        }
      }
      if (!advanced) throw DefectError("lexicographic refinement lost the optimum");
    }
    if (spent != opt) throw DefectError("lexicographic witness has non-optimal cost");
    return {opt, picked};
  }

 private:
  void drop_supersets() {
    std::sort(sets_.begin(), sets_.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
    const size_t words = (weights_.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> bits(sets_.size(), std::vector<std::uint64_t>(words, 0));
    for (size_t s = 0; s < sets_.size(); ++s)
      for (int i : sets_[s]) bits[s][i / 64] |= std::uint64_t{1} << (i % 64);
    std::vector<char> keep(sets_.size(), 1);
    for (size_t b = 0; b < sets_.size(); ++b)
      for (size_t a = 0; a < b && keep[b]; ++a) {
        if (!keep[a] || sets_[a].size() == sets_[b].size()) continue;
        bool subset = true;
        for (size_t w = 0; w < words && subset; ++w) subset = (bits[a][w] & ~bits[b][w]) == 0;
        if (subset) keep[b] = 0;
      }
    std::vector<std::vector<int>> kept;
    for (size_t s = 0; s < sets_.size(); ++s)
      if (keep[s]) kept.push_back(std::move(sets_[s]));
    sets_ = std::move(kept);
  }

  Cost packing_bound() {
    ++stamp_;
    Cost bound = 0;
    for (int s = 0; s < set_count(); ++s) {
      if (covered_[s]) continue;
      bool disjoint = true;
      Cost cheapest = std::numeric_limits<Cost>::max();
      for (int i : sets_[s]) {
        if (excluded_[i]) continue;
        if (packing_mark_[i] == stamp_) {
          disjoint = false;
          break;
        }
        cheapest = std::min(cheapest, weights_[i]);
      }
      if (!disjoint) continue;
      for (int i : sets_[s])
        if (!excluded_[i]) packing_mark_[i] = stamp_;
      bound += cheapest;
    }
    return bound;
  }

  void choose(int i, int delta) {
    for (int s : item_sets_[i]) covered_[s] += delta;
  }

  void exclude(int i, int delta) {
    excluded_[i] += delta;
    for (int s : item_sets_[i]) avail_[s] -= delta;
  }

  void search(Cost cost) {
    int pick = -1;
    for (int s = 0; s < set_count(); ++s) {
      if (covered_[s]) continue;
      if (avail_[s] == 0) return;
      if (pick == -1 || avail_[s] < avail_[pick]) pick = s;
    }
    if (pick == -1) {
      best_cost_ = cost;
      best_ = chosen_;
      return;
    }
    if (cost + packing_bound() >= best_cost_) return;

    std::vector<int> branch;
    for (int i : sets_[pick])
      if (!excluded_[i]) branch.push_back(i);
    std::vector<int> undone;
    for (int i : branch) {
      if (cost + weights_[i] < best_cost_) {
        choose(i, 1);
        chosen_.push_back(i);
        search(cost + weights_[i]);
        chosen_.pop_back();
        choose(i, -1);
      }
      exclude(i, 1);
      undone.push_back(i);
      if (avail_[pick] == 0) break;
    }
    for (int i : undone) exclude(i, -1);
  }

  std::vector<Cost> weights_;
  std::vector<std::vector<int>> sets_;
  std::vector<std::vector<int>> item_sets_;
  std::vector<int> covered_;
  std::vector<int> avail_;
  std::vector<int> excluded_;
  std::vector<int> chosen_;
  std::vector<int> best_;
  Cost best_cost_ = 0;
  std::vector<unsigned> packing_mark_;
  unsigned stamp_ = 0;
};

}  // namespace

bool hits_all(const FamilyOfSets& family, const std::vector<int>& x) {
  std::set<int> chosen(x.begin(), x.end());
  for (const auto& s : family.sets)
    if (std::none_of(s.begin(), s.end(), [&](int e) { return chosen.count(e) > 0; })) return false;
  return true;
}

HittingResult min_hitting_set(const FamilyOfSets& family) {
  std::vector<int> elements;
  for (size_t k = 0; k < family.sets.size(); ++k) {
    if (family.sets[k].empty()) throw Infeasible("family member " + std::to_string(k) + " is empty");
    elements.insert(elements.end(), family.sets[k].begin(), family.sets[k].end());
  }
  HittingResult result;
  if (family.sets.empty()) return result;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  std::vector<std::vector<int>> sets;
  for (const auto& s : family.sets) {
    std::vector<int> items;
    for (int e : s) items.push_back(static_cast<int>(std::lower_bound(elements.begin(), elements.end(), e) -
                                                     elements.begin()));
    sets.push_back(std::move(items));
  }
  HittingSolver solver(std::vector<Cost>(elements.size(), 1), std::move(sets));
  auto [cost, items] = solver.lex_min_optimum();
  result.value = cost;
  for (int i : items) result.witness.push_back(elements[i]);
  if (!hits_all(family, result.witness) || static_cast<Cost>(result.witness.size()) != result.value)
    throw DefectError("hitting set witness is infeasible");
  return result;
}

HittingResult min_orbit_hitting_set(const FamilyOfSets& family, const OrbitPartition& orbits) {
  std::vector<std::vector<int>> sets;
  for (size_t k = 0; k < family.sets.size(); ++k) {
    if (family.sets[k].empty()) throw Infeasible("family member " + std::to_string(k) + " is empty");
    std::vector<int> classes;
    for (int e : family.sets[k]) {
      if (!orbits.contains(e)) throw InputError("element " + std::to_string(e) + " lies in no orbit class");
      classes.push_back(orbits.class_of(e));
    }
    sets.push_back(std::move(classes));
  }
  HittingResult result;
  if (sets.empty()) return result;

  std::vector<Cost> weights;
  for (const auto& c : orbits.classes()) weights.push_back(static_cast<Cost>(c.size()));
  HittingSolver solver(std::move(weights), std::move(sets));
  auto [cost, classes] = solver.lex_min_optimum();
  result.value = cost;
  result.witness_orbits = classes;
  for (int c : classes)
    result.witness.insert(result.witness.end(), orbits.classes()[c].begin(), orbits.classes()[c].end());
  std::sort(result.witness.begin(), result.witness.end());
  if (!hits_all(family, result.witness) || static_cast<Cost>(result.witness.size()) != result.value)
    throw DefectError("orbit hitting set witness is infeasible");
  return result;
}

HittingResult upsilon_edge(const Graph& pattern, const Graph& host, bool symmetric) {
  FamilyOfSets family{copy_edge_ids(host, enumerate_copies(pattern, host))};
  if (family.sets.empty()) return {};
  if (!symmetric) return min_hitting_set(family);
  return min_orbit_hitting_set(family, orbits(automorphism_group(host), Action::edges, host));
}

}  // namespace fairrep
