#pragma once

#include <map>

#include "catrec/seqdeck.hpp"

namespace catrec {

// S-decks of one sequence for every canonical S (min S = 1) with |S| <= s
// and width <= ell. Lookups translate S to its canonical representative.
struct DeckMap {
  int k = 0;
  int s = 0;
  int ell = 0;
  std::map<IndexSet, TupleMultiset> decks;

  bool has(const IndexSet& S) const;
  // Throws InsufficientDeck when S is not covered.
  const TupleMultiset& at(const IndexSet& S) const;

  bool operator==(const DeckMap&) const = default;
};

using BinaryDeckMap = DeckMap;

// floor(k/2 - 1) + 1, which is floor(k/2) (0 for k = 1).
int literal_width(int k);
// Width at which the reconstruction below is certified: ceil(k/2), at least 1.
// Equals literal_width(k) for even k.
int certified_width(int k);

// Throws WidthCapExceedsLength when ell > k.
DeckMap script_deck(const Tuple& x, int s, int ell);

// {x|_S, x'|_S} for S of absolute positions. Needs |S| < s and max(S) + 1 <= ell.
TupleMultiset endpoint_restriction(const DeckMap& dm, const IndexSet& S);

// x(i) + x'(i) for i in [ell - 1].
int pair_sum(const DeckMap& dm, int i);

// {x(i)x(j), x'(i)x'(j)} as a multiset of 2-tuples, for distinct
// i, j in [C] u [k - C + 1, k] with C = ell - 1.
TupleMultiset pair_joint(const DeckMap& dm, int i, int j);

// Some y ~ x. Throws InconsistentDeck when no string has this deck map and
// InsufficientDeck when the map admits strings that are not reversals of each other.
Tuple reconstruct_binary(const DeckMap& dm);

// Some g ~ f from the S-decks of f in `dm`. Throws NoConsistentSequence.
Tuple reconstruct_sequence(const DeckMap& dm);

// Image of every deck under the value map v -> pi(v).
DeckMap project(const DeckMap& dm, const std::map<int, int>& pi);

// x ~ y: equal or reverses of each other.
bool equivalent(const Tuple& x, const Tuple& y);
Tuple canonical_orientation(const Tuple& x);

}  // namespace catrec
