#include "fairrep/dm_cover.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include "fairrep/error.hpp"

namespace fairrep {

BipartiteGraph::BipartiteGraph(int a_size, int b_size, std::vector<std::pair<int, int>> edges)
    : a_size_(a_size), b_size_(b_size), edges_(std::move(edges)) {
  if (a_size_ < 0 || b_size_ < 0) throw InputError("negative part size");
  for (auto [a, b] : edges_)
    if (a < 0 || a >= a_size_ || b < 0 || b >= b_size_)
      throw InputError("bipartite edge " + std::to_string(a) + " " + std::to_string(b) + " out of range");
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) throw InputError("duplicate bipartite edge");
  a_adj_.assign(a_size_, {});
  b_adj_.assign(b_size_, {});
  for (auto [a, b] : edges_) {
    a_adj_[a].push_back(b);
    b_adj_[b].push_back(a);
  }
  for (auto& l : b_adj_) std::sort(l.begin(), l.end());
}

BipartiteGraph parse_bipartite(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int a_size = -1, b_size = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    auto fail = [&] { throw InputError("line " + std::to_string(line_no) + ": malformed '" + line + "'"); };
    auto number = [&](const std::string& tok) {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        fail();
      return std::stoi(tok);
    };
    std::string second, extra;
    if (first == "p") {
      std::string third;
      if (a_size >= 0 || !(ls >> second >> third) || (ls >> extra)) fail();
      a_size = number(second);
      b_size = number(third);
      continue;
    }
    if (a_size < 0) throw InputError("line " + std::to_string(line_no) + ": missing 'p <a_size> <b_size>' header");
    if (!(ls >> second) || (ls >> extra)) fail();
    const int a = number(first), b = number(second);
    if (a >= a_size || b >= b_size)
      throw InputError("line " + std::to_string(line_no) + ": edge " + line + " out of range");
    edges.emplace_back(a, b);
  }
  if (a_size < 0) throw InputError("missing 'p <a_size> <b_size>' header");
  return BipartiteGraph(a_size, b_size, std::move(edges));
}

BipartiteGraph read_bipartite_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_bipartite(ss.str());
}

namespace {

// Hopcroft-Karp on the subgraph avoiding removed vertices.
class HopcroftKarp {
 public:
  HopcroftKarp(const BipartiteGraph& g, const std::vector<char>& removed_a, const std::vector<char>& removed_b)
      : g_(g), ra_(removed_a), rb_(removed_b), match_a_(g.a_size(), -1), match_b_(g.b_size(), -1),
        dist_(g.a_size(), 0) {}

  int run() {
    int size = 0;
    while (bfs())
      for (int a = 0; a < g_.a_size(); ++a)
        if (!ra_[a] && match_a_[a] == -1 && dfs(a)) ++size;
    return size;
  }

  const std::vector<int>& match_a() const { return match_a_; }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::queue<int> q;
    for (int a = 0; a < g_.a_size(); ++a) {
      if (!ra_[a] && match_a_[a] == -1) {
        dist_[a] = 0;
        q.push(a);
      } else {
        dist_[a] = kInf;
      }
    }
    bool found = false;
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (int b : g_.a_neighbors(a)) {
        if (rb_[b]) continue;
        int next = match_b_[b];
        if (next == -1) {
          found = true;
        } else if (dist_[next] == kInf) {
          dist_[next] = dist_[a] + 1;
          q.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(int a) {
    for (int b : g_.a_neighbors(a)) {
      if (rb_[b]) continue;
      int next = match_b_[b];
      if (next == -1 || (dist_[next] == dist_[a] + 1 && dfs(next))) {
        match_a_[a] = b;
        match_b_[b] = a;
        return true;
      }
    }
    dist_[a] = kInf;
    return false;
  }

  const BipartiteGraph& g_;
  const std::vector<char>& ra_;
  const std::vector<char>& rb_;
  std::vector<int> match_a_;
  std::vector<int> match_b_;
  std::vector<int> dist_;
};

// Minimum cover avoiding v must contain N(v); v is in every minimum cover
// iff that forced cover is larger than tau.
void test_vertex(const BipartiteGraph& g, int tau, bool side_a, int v, char& in_some, char& in_all) {
  const auto& nb = side_a ? g.a_neighbors(v) : g.b_neighbors(v);
  if (nb.empty()) {
    in_some = in_all = 0;
    return;
  }
  std::vector<char> ra(g.a_size(), 0), rb(g.b_size(), 0);
  (side_a ? ra : rb)[v] = 1;
  in_some = matching_number(g, ra, rb) == tau - 1 ? 1 : 0;
  for (int w : nb) (side_a ? rb : ra)[w] = 1;
  in_all = static_cast<int>(nb.size()) + matching_number(g, ra, rb) > tau ? 1 : 0;
}

CoverMembership empty_membership(const BipartiteGraph& g) {
  CoverMembership m;
  m.tau = max_matching(g).size();
  m.a_some.assign(g.a_size(), 0);
  m.a_all.assign(g.a_size(), 0);
  m.b_some.assign(g.b_size(), 0);
  m.b_all.assign(g.b_size(), 0);
  return m;
}

}  // namespace

int matching_number(const BipartiteGraph& g, const std::vector<char>& removed_a, const std::vector<char>& removed_b) {
  return HopcroftKarp(g, removed_a, removed_b).run();
}

Matching max_matching(const BipartiteGraph& g) {
  std::vector<char> ra(g.a_size(), 0), rb(g.b_size(), 0);
  HopcroftKarp hk(g, ra, rb);
  hk.run();
  Matching m;
  for (int a = 0; a < g.a_size(); ++a)
    if (hk.match_a()[a] != -1) m.pairs.emplace_back(a, hk.match_a()[a]);
  return m;
}

CoverMembership min_cover_membership(const BipartiteGraph& g) {
  CoverMembership m = empty_membership(g);
  const int total = g.a_size() + g.b_size();
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < total; ++i) {
    if (i < g.a_size())
      test_vertex(g, m.tau, true, i, m.a_some[i], m.a_all[i]);
    else
      test_vertex(g, m.tau, false, i - g.a_size(), m.b_some[i - g.a_size()], m.b_all[i - g.a_size()]);
  }
  return m;
}

CoverMembership min_cover_membership_serial(const BipartiteGraph& g) {
  CoverMembership m = empty_membership(g);
  for (int a = 0; a < g.a_size(); ++a) test_vertex(g, m.tau, true, a, m.a_some[a], m.a_all[a]);
  for (int b = 0; b < g.b_size(); ++b) test_vertex(g, m.tau, false, b, m.b_some[b], m.b_all[b]);
  return m;
}

bool is_cover(const BipartiteGraph& g, const std::vector<int>& a, const std::vector<int>& b) {
  std::set<int> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  for (auto [x, y] : g.edges())
    if (!sa.count(x) && !sb.count(y)) return false;
  return true;
}

Cover invariant_min_cover(const BipartiteGraph& g) {
  const CoverMembership m = min_cover_membership(g);
  Cover c;
  c.tau = m.tau;
  for (int a = 0; a < g.a_size(); ++a) {
    if (m.a_all[a] && !m.a_some[a]) throw DefectError("vertex in all minimum covers but in none");
    if (m.a_all[a]) c.a.push_back(a);
  }
  for (int b = 0; b < g.b_size(); ++b)
    if (m.b_some[b]) c.b.push_back(b);
  if (!is_cover(g, c.a, c.b)) throw DefectError("canonical cover misses an edge");
  if (c.size() != c.tau) throw DefectError("canonical cover size differs from the matching number");
  return c;
}

}  // namespace fairrep
