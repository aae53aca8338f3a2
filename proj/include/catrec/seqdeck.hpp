#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "catrec/bigint.hpp"

namespace catrec {

using Tuple = std::vector<int>;

Tuple reversed(Tuple t);

// Sorted set of distinct integers. Elements are normally positive; shifted
// sets such as {0} u S are allowed.
class IndexSet {
 public:
  IndexSet() = default;
  // Sorts and validates; throws BadPositionSet on empty input or duplicates.
  explicit IndexSet(std::vector<int> elements);
  IndexSet(std::initializer_list<int> elements) : IndexSet(std::vector<int>(elements)) {}

  const std::vector<int>& elements() const noexcept { return elems_; }
  int size() const noexcept { return static_cast<int>(elems_.size()); }
  int min() const { return elems_.front(); }
  int max() const { return elems_.back(); }
  int width() const { return max() - min() + 1; }
  bool contains(int x) const;

  IndexSet translated(int offset) const;
  // Translate so that min = 1.
  IndexSet canonical() const { return translated(1 - min()); }
  // {min + max - x : x in S}.
  IndexSet mirrored() const;

  auto operator<=>(const IndexSet&) const = default;

 private:
  std::vector<int> elems_;
};

// All canonical index sets (min = 1) with 1 <= |S| <= max_size and width <= max_width,
// ordered by (width, size, elements).
std::vector<IndexSet> canonical_index_sets(int max_size, int max_width);

// Finite multiset of s-tuples. Stored multiplicities are non-zero.
struct TupleMultiset {
  int s = 0;
  std::map<Tuple, BigInt> entries;

  TupleMultiset() = default;
  explicit TupleMultiset(int arity) : s(arity) {}

  // Adds `mult` copies (may be negative); drops keys that reach zero.
  void add(const Tuple& t, const BigInt& mult = 1);
  BigInt multiplicity(const Tuple& t) const;
  BigInt total() const;
  // Sum of mult * |c|_1 (mult taken as given, entries as given).
  BigInt mass() const;
  bool empty() const noexcept { return entries.empty(); }
  bool all_positive() const;

  bool operator==(const TupleMultiset&) const = default;
};

TupleMultiset operator+(const TupleMultiset& a, const TupleMultiset& b);
TupleMultiset operator-(const TupleMultiset& a, const TupleMultiset& b);

// Dense table of d(M)(g) for every g with |g|_1 <= ell, zeros stored.
class MomentTable {
 public:
  MomentTable() = default;
  MomentTable(int s, int ell);

  int s() const noexcept { return s_; }
  int ell() const noexcept { return ell_; }
  std::size_t size() const noexcept { return values_.size(); }

  // Lexicographic rank of g among tuples with |g|_1 <= ell.
  std::size_t rank(const Tuple& g) const;
  bool in_domain(const Tuple& g) const;

  const BigInt& at(const Tuple& g) const;
  BigInt& at(const Tuple& g);
  const BigInt& at_rank(std::size_t r) const { return values_[r]; }
  BigInt& at_rank(std::size_t r) { return values_[r]; }

  // Calls fn(g, value) for every g in lexicographic order.
  void for_each(const std::function<void(const Tuple&, const BigInt&)>& fn) const;

  bool operator==(const MomentTable&) const = default;

 private:
  int s_ = 0;
  int ell_ = 0;
  // count_[m][r] = number of m-tuples with sum <= r
  std::vector<std::vector<std::size_t>> count_;
  std::vector<BigInt> values_;
};

// Prod_i C(f(i), g(i)). Throws LengthMismatch.
BigInt f_embed(const Tuple& f, const Tuple& g);

// S-deck over the domain [1, f.size()]. Throws WidthExceedsDomain.
TupleMultiset s_deck(const Tuple& f, const IndexSet& S);

// d_ell(M). Entries equal to -1 are allowed and only meet g_i = 0.
MomentTable moments(const TupleMultiset& m, int ell);
// Adds mult * F(c, g) to every g in the table domain.
void accumulate_moments(MomentTable& table, const Tuple& c, const BigInt& mult);

TupleMultiset t_transform(const TupleMultiset& m);
// Throws NotInTImage when an endpoint would drop below 0 (below -1 with
// allow_negative, which undoes T on aux-function decks).
TupleMultiset t_inverse(const TupleMultiset& m, bool allow_negative = false);

bool is_degenerate(const Tuple& g);
std::pair<TupleMultiset, TupleMultiset> split_degenerate(const TupleMultiset& m);

// Coordinate restriction to the 1-based positions in E. Throws BadPositionSet.
TupleMultiset restrict_multiset(const TupleMultiset& m, const IndexSet& positions);

}  // namespace catrec
