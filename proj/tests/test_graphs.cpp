#include <map>
#include <numeric>
#include <random>
#include <set>

#include "catrec/error.hpp"
#include "catrec/graphs.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace catrec;

namespace {

oracle::AdjMatrix as_matrix(const Graph& g) { return oracle::matrix(g.order(), g.edges()); }

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

bool is_path_graph(const Graph& g) {
  if (g.order() == 0) return true;
  if (!is_connected(g) || g.size() + 1 != static_cast<std::size_t>(g.order())) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

}  // namespace

TEST_CASE("graph validation") {
  const std::vector<Edge> loop{{0, 0}};
  CHECK_THROWS_AS(Graph(2, loop), Error);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph(2, dup), Error);
  const std::vector<Edge> cycle{{0, 1}, {1, 2}, {2, 0}};
  CHECK_THROWS_AS(Tree(3, cycle), Error);
  const std::vector<Edge> split{{0, 1}};
  CHECK_THROWS_AS(Tree(3, split), Error);
  CHECK(Tree(1, {}).order() == 1);
}

TEST_CASE("interior") {
  CHECK(is_path_graph(interior(make_path(5))));
  CHECK(interior(make_path(5)).order() == 3);
  CHECK(interior(make_star(4)).order() == 1);
  const Graph in = interior(phi_inverse(SpineFunction({1, 0, 2})));
  CHECK(in.order() == 3);
  CHECK(is_path_graph(in));
}

TEST_CASE("is_caterpillar") {
  CHECK(is_caterpillar(make_path(6)));
  CHECK_FALSE(is_caterpillar(make_spider(3, 2)));
  CHECK(make_spider(3, 2).order() == 7);
  CHECK(is_caterpillar(phi_inverse(SpineFunction({0, 3, 1}))));
  CHECK(is_caterpillar(make_star(5)));
  CHECK(is_caterpillar(make_path(2)));
}

TEST_CASE("phi") {
  CHECK(phi(make_path(5)).values() == std::vector<int>{0, 0, 0});
  CHECK(phi(make_star(3)).values() == std::vector<int>{1});
  // path v1..v5 with two extra leaves on v3
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {2, 6}};
  CHECK(phi(Tree(7, e)).values() == std::vector<int>{0, 2, 0});
  CHECK_THROWS_AS(phi(make_spider(3, 2)), Error);
  CHECK_THROWS_AS(phi(make_path(2)), Error);
  try {
    phi(make_spider(3, 2));
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotCaterpillar);
  }
}

TEST_CASE("phi_inverse") {
  CHECK(canonical_forest_code(phi_inverse(SpineFunction({0, 0, 0}))) == canonical_forest_code(make_path(5)));
  CHECK(canonical_forest_code(phi_inverse(SpineFunction({1}))) == canonical_forest_code(make_star(3)));
  const Tree t = phi_inverse(SpineFunction({2, 0, 1}));
  CHECK(t.order() == 8);
  CHECK(sorted_degrees(t) == std::vector<int>{1, 1, 1, 1, 1, 2, 3, 4});
  // spine vertices 0..k+1 form a path in order
  for (int v = 0; v + 1 < 5; ++v) CHECK(t.adjacent(v, v + 1));
}

TEST_CASE("aux") {
  CHECK(aux(SpineFunction({0, 0, 0})).values == std::vector<int>{-1, 0, 0, 0, -1});
  CHECK(aux(SpineFunction({1})).values == std::vector<int>{-1, 1, -1});
  const std::vector<int> raw{2, 0, 1};
  CHECK(aux(raw).values == std::vector<int>{-1, 2, 0, 1, -1});
  // the canonical orientation of (2,0,1) is (1,0,2)
  CHECK(aux(SpineFunction(raw)).values == std::vector<int>{-1, 1, 0, 2, -1});
  CHECK(aux(raw).k() == 3);
}

TEST_CASE("spine function canonical orientation") {
  CHECK(SpineFunction({1, 0}).values() == std::vector<int>{0, 1});
  CHECK(SpineFunction({0, 3, 1}) == SpineFunction({1, 3, 0}));
  CHECK(SpineFunction({2, 0, 2}).symmetric());
  CHECK_FALSE(SpineFunction({2, 0, 1}).symmetric());
  CHECK(SpineFunction({2, 0, 1}).vertex_count() == 8);
  CHECK_THROWS_AS(SpineFunction(std::vector<int>{}), Error);
  CHECK_THROWS_AS(SpineFunction({-1}), Error);
}

TEST_CASE("enumerate_caterpillars small cases") {
  auto values = [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& f : enumerate_caterpillars(n)) out.push_back(f.values());
    return out;
  };
  CHECK(values(3) == std::vector<std::vector<int>>{{0}});
  CHECK(values(4) == std::vector<std::vector<int>>{{1}, {0, 0}});
  CHECK(values(5) == std::vector<std::vector<int>>{{2}, {0, 1}, {0, 0, 0}});
}

TEST_CASE("enumerate_caterpillars counts and invariants") {
  for (int n = 4; n <= 14; ++n) {
    const auto cats = enumerate_caterpillars(n);
    // number of caterpillars on n >= 3 vertices: 2^(n-4) + 2^floor((n-4)/2)
    CHECK(cats.size() == (std::size_t{1} << (n - 4)) + (std::size_t{1} << ((n - 4) / 2)));
    std::set<SpineFunction> seen(cats.begin(), cats.end());
    CHECK(seen.size() == cats.size());
    CHECK(std::is_sorted(cats.begin(), cats.end(), [](const SpineFunction& a, const SpineFunction& b) {
      return std::pair(a.k(), a.values()) < std::pair(b.k(), b.values());
    }));
    for (const auto& f : cats) {
      const int sum = std::accumulate(f.values().begin(), f.values().end(), 0);
      CHECK(n == f.k() + 2 + sum);
      const Tree t = phi_inverse(f);
      int leaves = 0;
      for (int v = 0; v < t.order(); ++v) leaves += t.degree(v) == 1;
      CHECK(leaves == sum + 2);
    }
  }
}

TEST_CASE("canonical_forest_code") {
  const std::vector<Edge> a{{0, 1}, {1, 2}}, b{{2, 0}, {0, 1}};
  CHECK(canonical_forest_code(Graph(3, a)) == canonical_forest_code(Graph(3, b)));
  const std::vector<Edge> p3k1{{0, 1}, {1, 2}};
  CHECK(canonical_forest_code(Graph(4, p3k1)) != canonical_forest_code(make_path(4)));
  std::set<ForestCode> codes;
  const Tree p4 = make_path(4);
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<int> keep;
    for (int v = 0; v < 4; ++v)
      if (v != skip) keep.push_back(v);
    codes.insert(induced_forest_code(p4, keep));
  }
  CHECK(codes.size() == 2);
  const std::vector<Edge> tri{{0, 1}, {1, 2}, {2, 0}};
  CHECK_THROWS_AS(canonical_forest_code(Graph(3, tri)), Error);
  CHECK(canonical_forest_code(Graph(1)).code == "()");
  CHECK(canonical_forest_code(Graph(0)).code.empty());
}

TEST_CASE("forest codes decode to the same forest") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 11;
    Graph g(n);
    for (int v = 1; v < n; ++v) {
      if (rng() % 4 == 0) continue;  // leave some components apart
      g.add_edge(v, static_cast<int>(rng() % v));
    }
    const ForestCode code = canonical_forest_code(g);
    const Graph back = code.decode();
    CHECK(code.order() == n);
    CHECK(canonical_forest_code(back) == code);
    if (n <= 9) CHECK(oracle::isomorphic(as_matrix(back), as_matrix(g)));
  }
}

TEST_CASE("forest codes agree with brute-force isomorphism") {
  // All forests on 6 vertices obtained from random edge subsets of random trees,
  // compared pairwise: equal code iff isomorphic.
  std::mt19937 rng(11);
  std::vector<Graph> forests;
  for (int t = 0; t < 120; ++t) {
    const int n = 5 + t % 4;
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = static_cast<int>(rng() % n);
    const Tree tree = tree_from_pruefer(seq);
    Graph g(n);
    for (auto [u, v] : tree.edges())
      if (rng() % 3 != 0) g.add_edge(u, v);
    forests.push_back(g);
  }
  for (std::size_t i = 0; i < forests.size(); ++i) {
    for (std::size_t j = i + 1; j < forests.size(); ++j) {
      if (forests[i].order() != forests[j].order()) continue;
      const bool same = canonical_forest_code(forests[i]) == canonical_forest_code(forests[j]);
      CHECK(same == oracle::isomorphic(as_matrix(forests[i]), as_matrix(forests[j])));
    }
  }
}

TEST_CASE("codes are invariant under relabeling") {
  std::mt19937 rng(3);
  for (const Tree& t : enumerate_trees(9)) {
    std::vector<int> perm(t.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_forest_code(relabel(t, perm)) == canonical_forest_code(t));
  }
}

TEST_CASE("phi round trip and orientation") {
  std::mt19937 rng(5);
  for (int n = 3; n <= 12; ++n) {
    for (const auto& f : enumerate_caterpillars(n)) {
      const Tree t = phi_inverse(f);
      CHECK(phi(t) == f);
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const Tree shuffled(relabel(t, perm));
      CHECK(canonical_forest_code(phi_inverse(phi(shuffled))) == canonical_forest_code(t));
      // phi equals the smaller of the two spine readings
      CHECK(phi(shuffled).values() == oracle::spine_reading(as_matrix(shuffled)));
    }
  }
}

TEST_CASE("tree enumeration matches the unlabeled tree counts") {
  const std::vector<std::size_t> counts{1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 1; n <= 12; ++n) CHECK(enumerate_trees(n).size() == counts[n]);
}

TEST_CASE("tree enumeration matches Pruefer brute force") {
  for (int n = 3; n <= 9; ++n) {
    std::set<ForestCode> brute;
    std::vector<int> p(n - 2, 0);
    while (true) {
      const auto edges = oracle::pruefer_tree(p);
      brute.insert(canonical_forest_code(Graph(n, edges)));
      int i = 0;
      while (i < n - 2 && ++p[i] == n) p[i++] = 0;
      if (i == n - 2) break;
    }
    std::set<ForestCode> grown;
    for (const Tree& t : enumerate_trees(n)) grown.insert(canonical_forest_code(t));
    CHECK(brute == grown);
  }
}

TEST_CASE("library Pruefer decoding agrees with the oracle") {
  std::mt19937 rng(13);
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + t % 8;
    std::vector<int> p(n - 2);
    for (int& x : p) x = static_cast<int>(rng() % n);
    const Tree lib = tree_from_pruefer(p);
    const Graph ref(n, oracle::pruefer_tree(p));
    CHECK(lib.edges() == ref.edges());
  }
}

TEST_CASE("caterpillar enumeration matches filtered tree enumeration") {
  for (int n = 3; n <= 10; ++n) {
    std::set<SpineFunction> from_trees;
    for (const Tree& t : enumerate_trees(n))
      if (is_caterpillar(t)) from_trees.insert(phi(t));
    const auto cats = enumerate_caterpillars(n);
    CHECK(std::set<SpineFunction>(cats.begin(), cats.end()) == from_trees);
  }
}
