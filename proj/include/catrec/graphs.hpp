#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace catrec {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws InvalidInput on out-of-range endpoints, self-loops or duplicate edges.
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  bool adjacent(int u, int v) const;

  // Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  // Subgraph induced by `vertices`, relabeled 0..|vertices|-1 in the given order.
  Graph induced(std::span<const int> vertices) const;

  void add_edge(int u, int v);

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

bool is_forest(const Graph& g);
bool is_connected(const Graph& g);

// A graph validated to be a tree: connected with exactly n-1 edges.
class Tree : public Graph {
 public:
  Tree() = default;
  Tree(int n, std::span<const Edge> edges);
  explicit Tree(Graph g);
};

Tree make_path(int n);
// K_{1,leaves}; vertex 0 is the hub.
Tree make_star(int leaves);
// Spider with `legs` legs of `leg_length` edges each; vertex 0 is the body.
Tree make_spider(int legs, int leg_length);
// Decodes a Prüfer sequence over 0..n-1 (length n-2) into a labeled tree.
Tree tree_from_pruefer(std::span<const int> sequence);

// Canonical isomorphism code of an unlabeled forest. Each component is
// encoded as a balanced parenthesis word rooted at its center; words are
// concatenated in sorted order.
struct ForestCode {
  std::string code;

  int order() const noexcept;
  Graph decode() const;

  auto operator<=>(const ForestCode&) const = default;
};

// Throws CycleDetected when `g` is not a forest.
ForestCode canonical_forest_code(const Graph& g);
// Code of the subgraph of forest `g` induced by `vertices` (no cycle check).
ForestCode induced_forest_code(const Graph& g, std::span<const int> vertices);

// Vertex count n, spine length k >= 1, canonical orientation
// (values <= reversed values lexicographically).
class SpineFunction {
 public:
  SpineFunction() = default;
  // Canonicalizes the orientation. Throws InvalidInput on negative values or k = 0.
  explicit SpineFunction(std::vector<int> values);

  int k() const noexcept { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const noexcept { return values_; }
  int vertex_count() const;
  bool symmetric() const;

  auto operator<=>(const SpineFunction&) const = default;

 private:
  std::vector<int> values_;
};

// h(0) = -1 = h(k+1) and h restricted to [k] equals f.
struct AuxFunction {
  std::vector<int> values;  // h(0..k+1)

  int k() const noexcept { return static_cast<int>(values.size()) - 2; }
};

// Subgraph induced by the vertices of degree >= 2 (may be empty).
Graph interior(const Graph& t);
bool is_caterpillar(const Tree& t);
// Throws NotCaterpillar (also for n < 3).
SpineFunction phi(const Tree& t);
// Spine vertices 0..k+1 in path order, followed by the leaves.
Tree phi_inverse(const SpineFunction& f);
AuxFunction aux(const SpineFunction& f);
// Same, for a spine reading in the given orientation.
AuxFunction aux(std::span<const int> values);

// One canonical spine function per isomorphism class of n-vertex
// caterpillars, ordered by (k, values).
std::vector<SpineFunction> enumerate_caterpillars(int n);

// One tree per isomorphism class on n vertices, ordered by canonical code.
std::vector<Tree> enumerate_trees(int n);

}  // namespace catrec
