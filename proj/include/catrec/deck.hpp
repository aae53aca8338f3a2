#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "catrec/bigint.hpp"
#include "catrec/graphs.hpp"

namespace catrec {

// Multiset of induced subgraphs on `ell` vertices, keyed by canonical code.
// Total multiplicity is C(n, ell).
struct Deck {
  int n = 0;
  int ell = 0;
  std::map<ForestCode, BigInt> cards;

  BigInt total() const;
  bool operator==(const Deck&) const = default;
};

// Throws BadCardSize unless 1 <= ell <= n, CycleDetected if `g` is not a forest.
Deck ell_deck(const Graph& g, int ell);
bool deck_equal(const Deck& a, const Deck& b);

// Kelly counting over a fixed deck. Per-card induced-subgraph censuses are
// computed lazily and cached, so repeated queries against one deck are cheap.
// Not safe for concurrent use of a single instance.
class KellyCounter {
 public:
  explicit KellyCounter(Deck deck);

  const Deck& deck() const noexcept { return deck_; }

  // n_H(G) from the deck. Throws BadCardSize if |V(h)| > ell and
  // NonIntegerKellyQuotient if the card sum is not divisible.
  BigInt count(const Graph& pattern);
  BigInt count(const ForestCode& pattern);

 private:
  using Census = std::map<std::string, std::uint64_t>;
  const Census& census(const ForestCode& card, int size);

  Deck deck_;
  std::map<std::pair<std::string, int>, Census> censuses_;
};

BigInt kelly_count(const Deck& d, const Graph& pattern);

// Brute force over all |V(h)|-subsets of `t`. Patterns with a cycle never
// occur in a forest and count 0.
BigInt count_induced_direct(const Graph& t, const Graph& pattern);

// [m_0, ..., m_jmax] with m_0 = n, m_1 = 2 * (edge count) and
// m_j = n_{K_{1,j}} for j >= 2, so that m_j = sum over v of C(deg v, j).
std::vector<BigInt> star_moments(const Deck& d, int jmax);
std::vector<BigInt> star_moments(KellyCounter& counter, int jmax);

}  // namespace catrec
