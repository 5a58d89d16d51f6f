#include "fairrep/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

#include "fairrep/error.hpp"

namespace fairrep {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw InputError("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n_)
      throw InputError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " out of range for " + std::to_string(n_) + " vertices");
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw InputError("duplicate edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));

  adj_.assign(n_, {});
  matrix_.assign(static_cast<size_t>(n_) * n_, 0);
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    matrix_[e.u * n_ + e.v] = matrix_[e.v * n_ + e.u] = 1;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::optional<int> Graph::edge_id(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_label(std::string_view tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
    throw InputError("line " + std::to_string(line_no) + ": bad token '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<int> declared;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  int max_label = -1;
  int line_no = 0;
  bool first_content = true;

  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;

    if (toks[0] == "n") {
      if (!first_content || toks.size() != 2)
        throw InputError("line " + std::to_string(line_no) + ": 'n <count>' must be the first line");
      declared = parse_label(toks[1], line_no);
      first_content = false;
      continue;
    }
    first_content = false;
    if (toks.size() != 2)
      throw InputError("line " + std::to_string(line_no) + ": expected 'u v'");
    int u = parse_label(toks[0], line_no);
    int v = parse_label(toks[1], line_no);
    if (u == v) throw InputError("line " + std::to_string(line_no) + ": loop " + std::to_string(u));
    Edge e(u, v);
    if (!seen.insert(e).second)
      throw InputError("line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(e.u) +
                       " " + std::to_string(e.v));
    edges.push_back(e);
    max_label = std::max(max_label, e.v);
  }

  int n = declared.value_or(max_label + 1);
  if (max_label >= n)
    throw InputError("vertex " + std::to_string(max_label) + " exceeds declared count " + std::to_string(n));
  return Graph(n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string to_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph delete_edges(const Graph& g, const EdgeSet& x) {
  for (const Edge& e : x)
    if (!g.has_edge(e))
      throw InputError("cannot delete absent edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  std::vector<Edge> rest;
  rest.reserve(g.edges().size());
  for (const Edge& e : g.edges())
    if (!x.count(e)) rest.push_back(e);
  return Graph(g.order(), std::move(rest));
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.order();
}

namespace {

// Unit-capacity max flow between s and t on an undirected graph.
int unit_max_flow(const Graph& g, int s, int t) {
  const int n = g.order();
  std::vector<int> flow(static_cast<size_t>(n) * n, 0);  // flow[u*n+v], antisymmetric
  int total = 0;
  for (;;) {
    std::vector<int> parent(n, -1);
    parent[s] = s;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && parent[t] < 0) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v))
        if (parent[w] < 0 && flow[v * n + w] < 1) {
          parent[w] = v;
          q.push(w);
        }
    }
    if (parent[t] < 0) return total;
    for (int v = t; v != s; v = parent[v]) {
      int u = parent[v];
      ++flow[u * n + v];
      --flow[v * n + u];
    }
    ++total;
  }
}

}  // namespace

int edge_connectivity(const Graph& g) {
  if (g.order() < 2) throw InputError("edge connectivity needs at least two vertices");
  if (!is_connected(g)) throw InputError("edge connectivity of a disconnected graph");
  int best = g.size();
  for (int t = 1; t < g.order(); ++t) best = std::min(best, unit_max_flow(g, 0, t));
  return best;
}

std::vector<int> edge_ids(const Graph& g, const EdgeSet& x) {
  std::vector<int> ids;
  ids.reserve(x.size());
  for (const Edge& e : x) {
    auto id = g.edge_id(e);
    if (!id) throw InputError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not in graph");
    ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

EdgeSet edges_of(const Graph& g, const std::vector<int>& ids) {
  EdgeSet out;
  for (int id : ids) {
    if (id < 0 || id >= g.size()) throw InputError("edge id " + std::to_string(id) + " out of range");
    out.insert(g.edge(id));
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(a.order() + b.order(), std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

}  // namespace fairrep
