#include "catrec/deck.hpp"

#include <numeric>
#include <string>

#include "catrec/error.hpp"

namespace catrec {
namespace {

// Calls fn(indices) for every size-r subset of 0..n-1, in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int r, Fn&& fn) {
  if (r < 0 || r > n) return;
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(static_cast<const std::vector<int>&>(idx));
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

BigInt Deck::total() const {
  BigInt sum = 0;
  for (const auto& [code, mult] : cards) sum += mult;
  return sum;
}

Deck ell_deck(const Graph& g, int ell) {
  if (ell < 1 || ell > g.order()) {
    throw Error(ErrorKind::BadCardSize, "card size " + std::to_string(ell) + " outside [1, " +
                                            std::to_string(g.order()) + "]");
  }
  if (!is_forest(g)) throw Error(ErrorKind::CycleDetected, "decks are computed for forests");
  std::map<std::string, std::uint64_t> counts;
  for_each_subset(g.order(), ell, [&](const std::vector<int>& subset) {
    ++counts[induced_forest_code(g, subset).code];
  });
  Deck d{g.order(), ell, {}};
  for (auto& [code, mult] : counts) d.cards.emplace(ForestCode{code}, BigInt(mult));
  return d;
}

bool deck_equal(const Deck& a, const Deck& b) { return a == b; }

KellyCounter::KellyCounter(Deck deck) : deck_(std::move(deck)) {}

const KellyCounter::Census& KellyCounter::census(const ForestCode& card, int size) {
  auto key = std::make_pair(card.code, size);
  auto it = censuses_.find(key);
  if (it != censuses_.end()) return it->second;
  const Graph g = card.decode();
  Census c;
  for_each_subset(g.order(), size, [&](const std::vector<int>& subset) {
    ++c[induced_forest_code(g, subset).code];
  });
  return censuses_.emplace(std::move(key), std::move(c)).first->second;
}

BigInt KellyCounter::count(const Graph& pattern) {
  if (pattern.order() > deck_.ell) {
    throw Error(ErrorKind::BadCardSize, "pattern has more vertices than the cards");
  }
  if (!is_forest(pattern)) return 0;
  return count(canonical_forest_code(pattern));
}

BigInt KellyCounter::count(const ForestCode& pattern) {
  const int size = pattern.order();
  if (size > deck_.ell) throw Error(ErrorKind::BadCardSize, "pattern has more vertices than the cards");
  BigInt sum = 0;
  for (const auto& [card, mult] : deck_.cards) {
    const auto& c = census(card, size);
    auto it = c.find(pattern.code);
    if (it != c.end()) sum += mult * it->second;
  }
  const BigInt divisor = binomial(deck_.n - size, deck_.ell - size);
  if (sum % divisor != 0) {
    throw Error(ErrorKind::NonIntegerKellyQuotient,
                "card sum " + sum.str() + " not divisible by " + divisor.str());
  }
  return sum / divisor;
}

BigInt kelly_count(const Deck& d, const Graph& pattern) {
  KellyCounter counter(d);
  return counter.count(pattern);
}

BigInt count_induced_direct(const Graph& t, const Graph& pattern) {
  if (pattern.order() > t.order() || !is_forest(pattern)) return 0;
  const ForestCode target = canonical_forest_code(pattern);
  std::uint64_t hits = 0;
  for_each_subset(t.order(), pattern.order(), [&](const std::vector<int>& subset) {
    if (induced_forest_code(t, subset) == target) ++hits;
  });
  return hits;
}

std::vector<BigInt> star_moments(KellyCounter& counter, int jmax) {
  if (jmax < 0) throw Error(ErrorKind::InvalidInput, "jmax must be non-negative");
  if (jmax >= 1 && jmax + 1 > counter.deck().ell) {
    throw Error(ErrorKind::BadCardSize, "star moments up to j need cards of size j+1");
  }
  std::vector<BigInt> m;
  m.push_back(counter.count(Graph(1)));
  if (jmax >= 1) m.push_back(2 * counter.count(make_path(2)));
  for (int j = 2; j <= jmax; ++j) m.push_back(counter.count(make_star(j)));
  return m;
}

std::vector<BigInt> star_moments(const Deck& d, int jmax) {
  KellyCounter counter(d);
  return star_moments(counter, jmax);
}

}  // namespace catrec
