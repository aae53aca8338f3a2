#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "catrec/binary.hpp"
#include "catrec/deck.hpp"
#include "catrec/graphs.hpp"
#include "catrec/seqdeck.hpp"

namespace catrec {

struct ReconstructionContext {
  Deck deck;
  int n = 0;
  int k = 0;
  std::vector<int> degree_sequence;  // sorted
  // T(D_S(h)) for canonical S, filled in order of increasing width.
  std::map<IndexSet, TupleMultiset> sdecks;
  KellyCounter counter;

  // Takes a known degree sequence; k is the number of non-leaves.
  ReconstructionContext(Deck d, std::vector<int> degrees);
  // Recovers the degree sequence from star counts in the deck.
  static ReconstructionContext from_deck(Deck d);
};

// Multiplicity of g in d(T(D_S(h))) for g with g(1), g(|S|) > 0, via one Kelly count.
// Throws CardBudgetExceeded when the deck cards are too small for g.
BigInt nondegen_moment(ReconstructionContext& ctx, const IndexSet& S, const Tuple& g);

// Multiset M with d(T(D_S(h)))(0, g') = d(M)(g'), built from the predecessor
// deck T(D_U(h)), U = (S \ {1}) u {2}. Throws MissingPredecessorDeck.
TupleMultiset degen_source(const ReconstructionContext& ctx, const IndexSet& S);
BigInt degen_moment(const ReconstructionContext& ctx, const IndexSet& S, const Tuple& g);
// Table with the degenerate entries filled and the others zero.
MomentTable degen_moments(const ReconstructionContext& ctx, const IndexSet& S, int budget);

// T(D_{1}(h)) from a caterpillar degree sequence: {d : deg d >= 2} twice each, plus four 1s. Throws NotCaterpillarDegrees.
TupleMultiset singleton_deck(const std::vector<int>& degrees, int k);

struct SDeckStep {
  IndexSet S;
  int budget = 0;
  MomentTable moments;
  TupleMultiset t_deck;  // T(D_S(h))
  TupleMultiset f_deck;  // D_S(f)
};

struct ReconstructionTrace {
  int n = 0;
  int ell = 0;
  int k = 0;
  int width = 0;
  std::vector<int> degree_sequence;
  std::vector<SDeckStep> steps;
  std::optional<SpineFunction> result;
};

// D_S(f) for every canonical S with |S| <= 3 and width <= certified_width(k).
DeckMap reconstruct_sdecks(ReconstructionContext& ctx, ReconstructionTrace* trace = nullptr);

SpineFunction reconstruct_caterpillar(const Deck& deck, ReconstructionTrace* trace = nullptr);

struct NydlPair {
  int n = 0;
  SpineFunction g1;  // leaf on a central vertex of P_{n-1}
  SpineFunction g2;  // leaf on a non-central neighbor of it
};

NydlPair nydl_pair(int n);

// Caterpillars on n vertices grouped by equal ell-deck; groups in order of
// their first member, members in enumeration order.
std::vector<std::vector<SpineFunction>> oracle_partition(int n, int ell);
// Least ell at which every group is a singleton.
int minimal_distinguishing_ell(int n);

// w + 3 gamma(18 (n - k) + 36, 3), the deck size sufficient in the worst case.
std::int64_t deck_size_bound(int n, int k);

}  // namespace catrec
