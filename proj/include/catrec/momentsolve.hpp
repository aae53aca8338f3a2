#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "catrec/bigint.hpp"
#include "catrec/seqdeck.hpp"

namespace catrec {

// Finitely supported a : N^s -> Z. Stored values are non-zero.
struct SignedTupleFunction {
  int s = 0;
  std::map<Tuple, BigInt> entries;

  SignedTupleFunction() = default;
  explicit SignedTupleFunction(int arity) : s(arity) {}

  void add(const Tuple& x, const BigInt& value);
  bool is_zero() const noexcept { return entries.empty(); }
  // |a|_1 + sum over the support of |x|_1.
  BigInt mass() const;
};

SignedTupleFunction difference(const TupleMultiset& m, const TupleMultiset& n);

// ceil(2 sqrt(n) ln(n + 2)) + 8.
int gamma_bound(std::int64_t n, int s);

struct MassBounds {
  std::int64_t n = 0;  // bound on sum of mult * |c|_1
  int s = 1;
  int gamma = 0;
  // Optional bound on every entry of every card.
  std::optional<int> card_cap;

  static MassBounds make(std::int64_t n, int s, std::optional<int> card_cap = std::nullopt);
};

bool is_prime(std::int64_t p);

BigInt eta(const SignedTupleFunction& a, const Tuple& j, int p);
BigInt sigma(const SignedTupleFunction& a, const Tuple& i, const Tuple& j);
bool verify_appendix_identity(const SignedTupleFunction& a, int p, const Tuple& j);
bool is_p_good(const SignedTupleFunction& a, int p);
// Smallest prime p <= gamma_bound(mass(a), s) at which a is not p-good.
std::optional<int> find_separating_prime(const SignedTupleFunction& a);

// Multisets of non-negative tuples whose moments match `mt` on its whole
// domain and which respect `bounds`; stops after `limit` solutions.
// Throws SearchLimitExceeded after `node_limit` search nodes.
std::vector<TupleMultiset> solve_moments(const MomentTable& mt, const MassBounds& bounds,
                                         std::size_t limit = 2,
                                         std::uint64_t node_limit = 5'000'000);

// The unique solution. Throws Ambiguous or Inconsistent.
TupleMultiset invert_moments(const MomentTable& mt, const MassBounds& bounds);

// d_ell(M) != d_ell(N), without building both tables when a cheap witness exists.
bool moment_tables_differ(const TupleMultiset& m, const TupleMultiset& n, int ell);

// Sorted degree multiset of a tree from m_j = sum_v C(deg v, j), j = 0..m.size()-1.
// For n >= 2 every degree is taken to be at least 1.
std::vector<int> degree_sequence_from_moments(std::span<const BigInt> star_moments, int n);

}  // namespace catrec
