#include "catrec/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "catrec/error.hpp"

namespace catrec {
namespace {

using AdjacencyList = std::vector<std::vector<int>>;

std::string encode_rooted(const AdjacencyList& adj, int root) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> parent(n, -1);
  std::vector<int> order;
  std::vector<int> stack{root};
  parent[root] = root;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : adj[v]) {
      if (parent[w] == -1) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::string> code(n);
  std::vector<std::string> children;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    children.clear();
    for (int w : adj[v]) {
      if (parent[w] == v) children.push_back(std::move(code[w]));
    }
    std::sort(children.begin(), children.end());
    std::string& out = code[v];
    out.push_back('(');
    for (const auto& c : children) out += c;
    out.push_back(')');
  }
  return code[root];
}

// Centers of a component (one or two vertices).
std::vector<int> component_centers(const AdjacencyList& adj, const std::vector<int>& component) {
  if (component.size() <= 2) return component;
  std::vector<int> degree(adj.size(), 0);
  std::vector<int> layer;
  for (int v : component) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = component.size();
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<int> next;
    for (int v : layer) {
      for (int w : adj[v]) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string encode_forest(const AdjacencyList& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> seen(n, 0);
  std::vector<std::string> words;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> component{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (int w : adj[component[i]]) {
        if (!seen[w]) {
          seen[w] = 1;
          component.push_back(w);
        }
      }
    }
    std::string best;
    for (int c : component_centers(adj, component)) {
      std::string word = encode_rooted(adj, c);
      if (best.empty() || word < best) best = std::move(word);
    }
    words.push_back(std::move(best));
  }
  std::sort(words.begin(), words.end());
  std::string out;
  for (const auto& w : words) out += w;
  return out;
}

AdjacencyList adjacency_of(const Graph& g) {
  AdjacencyList adj(g.order());
  for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
  return adj;
}

std::vector<int> interior_vertices(const Graph& t) {
  std::vector<int> out;
  for (int v = 0; v < t.order(); ++v) {
    if (t.degree(v) >= 2) out.push_back(v);
  }
  return out;
}

// Interior vertices in path order, or empty when the interior is not a path.
std::vector<int> spine_order(const Tree& t) {
  const auto inner = interior_vertices(t);
  if (inner.empty()) return {};
  std::vector<char> is_inner(t.order(), 0);
  for (int v : inner) is_inner[v] = 1;
  auto inner_degree = [&](int v) {
    int d = 0;
    for (int w : t.neighbors(v)) d += is_inner[w];
    return d;
  };
  int start = -1;
  for (int v : inner) {
    const int d = inner_degree(v);
    if (d > 2) return {};
    if (d <= 1 && start == -1) start = v;
  }
  if (start == -1) return {};
  std::vector<int> path{start};
  int prev = -1;
  int cur = start;
  while (true) {
    int next = -1;
    for (int w : t.neighbors(cur)) {
      if (is_inner[w] && w != prev) next = w;
    }
    if (next == -1) break;
    prev = cur;
    cur = next;
    path.push_back(cur);
  }
  if (path.size() != inner.size()) return {};
  return path;
}

}  // namespace

Graph::Graph(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "negative vertex count");
  adj_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = adj_.at(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::induced(std::span<const int> vertices) const {
  std::vector<int> pos(order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos.at(vertices[i]) = static_cast<int>(i);
  Graph out(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : adj_[vertices[i]]) {
      const int j = pos[w];
      if (j > static_cast<int>(i)) out.add_edge(static_cast<int>(i), j);
    }
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order() || v >= order()) {
    throw Error(ErrorKind::InvalidInput, "edge endpoint out of range");
  }
  if (u == v) throw Error(ErrorKind::InvalidInput, "self-loop");
  if (adjacent(u, v)) throw Error(ErrorKind::InvalidInput, "duplicate edge");
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++edge_count_;
}

bool is_forest(const Graph& g) {
  std::vector<int> root(g.order());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const auto& [u, v] : g.edges()) {
    const int a = find(u);
    const int b = find(v);
    if (a == b) return false;
    root[a] = b;
  }
  return true;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int w : g.neighbors(queue[i])) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return static_cast<int>(queue.size()) == g.order();
}

Tree::Tree(int n, std::span<const Edge> edges) : Tree(Graph(n, edges)) {}

Tree::Tree(Graph g) : Graph(std::move(g)) {
  if (order() == 0) throw Error(ErrorKind::InvalidInput, "tree needs at least one vertex");
  if (size() + 1 != static_cast<std::size_t>(order()) || !is_connected(*this)) {
    throw Error(ErrorKind::InvalidInput, "not a tree: needs connectivity and exactly n-1 edges");
  }
}

Tree make_path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return Tree(std::move(g));
}

Tree make_star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return Tree(std::move(g));
}

Tree make_spider(int legs, int leg_length) {
  Graph g(1 + legs * leg_length);
  int next = 1;
  for (int l = 0; l < legs; ++l) {
    int prev = 0;
    for (int d = 0; d < leg_length; ++d) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return Tree(std::move(g));
}

Tree tree_from_pruefer(std::span<const int> sequence) {
  const int n = static_cast<int>(sequence.size()) + 2;
  std::vector<int> degree(n, 1);
  for (int v : sequence) {
    if (v < 0 || v >= n) throw Error(ErrorKind::InvalidInput, "Pruefer label out of range");
    ++degree[v];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  Graph g(n);
  for (int v : sequence) {
    const int leaf = leaves.top();
    leaves.pop();
    g.add_edge(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  const int u = leaves.top();
  leaves.pop();
  g.add_edge(u, leaves.top());
  return Tree(std::move(g));
}

int ForestCode::order() const noexcept {
  return static_cast<int>(std::count(code.begin(), code.end(), '('));
}

Graph ForestCode::decode() const {
  Graph g(order());
  std::vector<int> stack;
  int next = 0;
  for (char c : code) {
    if (c == '(') {
      if (!stack.empty()) g.add_edge(stack.back(), next);
      stack.push_back(next++);
    } else if (c == ')') {
      if (stack.empty()) throw Error(ErrorKind::InvalidInput, "unbalanced forest code");
      stack.pop_back();
    } else {
      throw Error(ErrorKind::InvalidInput, "bad character in forest code");
    }
  }
  if (!stack.empty()) throw Error(ErrorKind::InvalidInput, "unbalanced forest code");
  return g;
}

ForestCode canonical_forest_code(const Graph& g) {
  if (!is_forest(g)) throw Error(ErrorKind::CycleDetected, "canonical codes exist only for forests");
  return ForestCode{encode_forest(adjacency_of(g))};
}

ForestCode induced_forest_code(const Graph& g, std::span<const int> vertices) {
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
  AdjacencyList adj(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : g.neighbors(vertices[i])) {
      if (pos[w] >= 0) adj[i].push_back(pos[w]);
    }
  }
  return ForestCode{encode_forest(adj)};
}

SpineFunction::SpineFunction(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorKind::InvalidInput, "spine function needs k >= 1");
  for (int v : values_) {
    if (v < 0) throw Error(ErrorKind::InvalidInput, "spine values must be non-negative");
  }
  std::vector<int> reversed(values_.rbegin(), values_.rend());
  if (reversed < values_) values_ = std::move(reversed);
}

int SpineFunction::vertex_count() const {
  return k() + 2 + std::accumulate(values_.begin(), values_.end(), 0);
}

bool SpineFunction::symmetric() const {
  return std::equal(values_.begin(), values_.end(), values_.rbegin());
}

Graph interior(const Graph& t) { return t.induced(interior_vertices(t)); }

bool is_caterpillar(const Tree& t) {
  if (interior_vertices(t).empty()) return true;
  return !spine_order(t).empty();
}

SpineFunction phi(const Tree& t) {
  if (t.order() < 3) throw Error(ErrorKind::NotCaterpillar, "caterpillar encoding needs n >= 3");
  const auto spine = spine_order(t);
  if (spine.empty()) throw Error(ErrorKind::NotCaterpillar, "interior is not a path");
  std::vector<int> values;
  values.reserve(spine.size());
  for (int v : spine) values.push_back(t.degree(v) - 2);
  return SpineFunction(std::move(values));
}

Tree phi_inverse(const SpineFunction& f) {
  const int k = f.k();
  Graph g(f.vertex_count());
  for (int i = 0; i <= k; ++i) g.add_edge(i, i + 1);
  int next = k + 2;
  for (int i = 1; i <= k; ++i) {
    for (int j = 0; j < f.values()[i - 1]; ++j) g.add_edge(i, next++);
  }
  return Tree(std::move(g));
}

AuxFunction aux(std::span<const int> values) {
  if (values.empty()) throw Error(ErrorKind::InvalidInput, "aux needs k >= 1");
  AuxFunction h;
  h.values.reserve(values.size() + 2);
  h.values.push_back(-1);
  for (int v : values) {
    if (v < 0) throw Error(ErrorKind::InvalidInput, "spine values must be non-negative");
    h.values.push_back(v);
  }
  h.values.push_back(-1);
  return h;
}

AuxFunction aux(const SpineFunction& f) { return aux(std::span<const int>(f.values())); }

std::vector<SpineFunction> enumerate_caterpillars(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "caterpillars need n >= 3");
  std::vector<SpineFunction> out;
  std::vector<int> parts;
  // Compositions of the leaf budget into k parts, in lexicographic order.
  auto fill = [&](auto&& self, int slot, int k, int budget) -> void {
    if (slot == k - 1) {
      parts[slot] = budget;
      std::vector<int> reversed(parts.rbegin(), parts.rend());
      if (parts <= reversed) out.emplace_back(parts);
      return;
    }
    for (int v = 0; v <= budget; ++v) {
      parts[slot] = v;
      self(self, slot + 1, k, budget - v);
    }
  };
  for (int k = 1; k <= n - 2; ++k) {
    parts.assign(k, 0);
    fill(fill, 0, k, n - k - 2);
  }
  return out;
}

std::vector<Tree> enumerate_trees(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "trees need n >= 1");
  std::map<ForestCode, Tree> level{{canonical_forest_code(Graph(1)), Tree(Graph(1))}};
  for (int m = 2; m <= n; ++m) {
    std::map<ForestCode, Tree> next;
    for (const auto& [code, tree] : level) {
      for (int v = 0; v < tree.order(); ++v) {
        Graph g(m, tree.edges());
        g.add_edge(v, m - 1);
        auto key = canonical_forest_code(g);
        if (!next.count(key)) next.emplace(std::move(key), Tree(std::move(g)));
      }
    }
    level = std::move(next);
  }
  std::vector<Tree> out;
  out.reserve(level.size());
  for (auto& [code, tree] : level) out.push_back(std::move(tree));
  return out;
}

}  // namespace catrec
