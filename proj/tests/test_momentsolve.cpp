#include <random>
#include <set>

#include "catrec/error.hpp"
#include "catrec/momentsolve.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace catrec;

namespace {

SignedTupleFunction fn(int s, std::initializer_list<std::pair<Tuple, int>> items) {
  SignedTupleFunction a(s);
  for (const auto& [x, v] : items) a.add(x, v);
  return a;
}

TupleMultiset ms(int s, std::initializer_list<std::pair<Tuple, int>> items) {
  TupleMultiset out(s);
  for (const auto& [t, mult] : items) out.add(t, mult);
  return out;
}

// Every multiset of s=1 tuples (values 0..max_value) with mass <= max_mass and at most max_count cards.
void all_multisets_1d(int max_value, int max_mass, int max_count, const std::function<void(const TupleMultiset&)>& fn) {
  TupleMultiset cur(1);
  std::function<void(int, int, int)> rec = [&](int v, int mass, int count) {
    if (v < 0) {
      fn(cur);
      return;
    }
    for (int c = 0; count + c <= max_count && mass + c * v <= max_mass; ++c) {
      if (c > 0) cur.add({v}, 1);
      rec(v - 1, mass + c * v, count + c);
    }
    int c = 0;
    while (count + c + 1 <= max_count && mass + (c + 1) * v <= max_mass) ++c;
    if (c > 0) cur.add({v}, -c);
  };
  rec(max_value, 0, 0);
}

TupleMultiset random_multiset(std::mt19937_64& rng, int s, int max_mass) {
  TupleMultiset m(s);
  int left = static_cast<int>(rng() % (max_mass + 1));
  do {
    Tuple c(s, 0);
    int budget = rng() % 4 == 0 ? 0 : static_cast<int>(rng() % (left + 1));
    while (budget-- > 0) ++c[rng() % s];
    for (int v : c) left -= v;
    m.add(c);
  } while (left > 0 && rng() % 4 != 0);
  return m;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

TEST_CASE("gamma_bound") {
  CHECK(gamma_bound(1, 1) == 11);  // ceil(2 ln 3) + 8
  CHECK(gamma_bound(100, 2) == 101);
  CHECK(gamma_bound(40, 3) == 56);
  for (int n = 1; n < 500; ++n) CHECK(gamma_bound(n, 2) <= gamma_bound(n + 1, 2));
  CHECK_THROWS_AS(gamma_bound(0, 1), Error);
}

TEST_CASE("eta and sigma") {
  CHECK(eta(fn(2, {{{2, 3}, 1}}), {0, 1}, 2) == 1);
  CHECK(eta(fn(2, {{{2, 3}, 1}}), {1, 1}, 2) == 0);
  CHECK(eta(fn(1, {{{0}, 1}, {{5}, -1}}), {0}, 5) == 0);
  CHECK_THROWS_AS(eta(fn(1, {{{0}, 1}}), {0}, 4), Error);
  CHECK(sigma(fn(1, {{{2}, 3}}), {2}, {0}) == 12);
  const SignedTupleFunction a = fn(2, {{{1, 4}, 3}, {{2, 0}, -5}});
  CHECK(sigma(a, {0, 0}, {0, 0}) == -2);
  CHECK(sigma(fn(2, {{{1, 1}, 1}}), {1, 1}, {1, 0}) == 0);
}

TEST_CASE("residue-sum identity") {
  CHECK(verify_appendix_identity(SignedTupleFunction(2), 3, {0, 0}));
  CHECK(verify_appendix_identity(fn(2, {{{3, 1}, 2}}), 3, {0, 1}));
  std::mt19937_64 rng(37);
  const int primes[] = {2, 3, 5, 7, 11, 13};
  for (int trial = 0; trial < 1000; ++trial) {
    const int s = 1 + trial % 3;
    SignedTupleFunction a(s);
    for (int t = 0; t < 5; ++t) {
      Tuple x(s);
      for (int& v : x) v = static_cast<int>(rng() % 25);
      a.add(x, static_cast<int>(rng() % 41) - 20);
    }
    const int p = primes[rng() % 6];
    Tuple j(s);
    for (int& v : j) v = static_cast<int>(rng() % p);
    CHECK(verify_appendix_identity(a, p, j));
  }
}

TEST_CASE("Fermat step") {
  std::mt19937_64 rng(41);
  const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
  for (int trial = 0; trial < 500; ++trial) {
    const int p = primes[rng() % 9];
    const std::int64_t x = static_cast<std::int64_t>(rng() % 1000);
    const auto r = mod_pow(x, p - 1, p);
    CHECK((r == 0 || r == 1));
    CHECK((r == 0) == (x % p == 0));
  }
}

TEST_CASE("is_p_good") {
  for (int p : {2, 3, 5, 7}) CHECK(is_p_good(SignedTupleFunction(1), p));
  for (int p : {2, 3, 5, 7}) CHECK_FALSE(is_p_good(fn(1, {{{0}, 1}}), p));
  CHECK(is_p_good(fn(1, {{{0}, 3}}), 3));
  CHECK_FALSE(is_p_good(fn(1, {{{0}, 3}}), 2));
}

TEST_CASE("find_separating_prime") {
  CHECK_FALSE(find_separating_prime(SignedTupleFunction(2)).has_value());
  CHECK(find_separating_prime(fn(1, {{{1}, 1}, {{2}, -1}})) == 2);
  // (1 - z)^4 is 2-good and 3-good; 5 separates it
  CHECK(find_separating_prime(fn(1, {{{0}, 1}, {{1}, -4}, {{2}, 6}, {{3}, -4}, {{4}, 1}})) == 5);
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const int s = 1 + trial % 3;
    SignedTupleFunction a(s);
    while (a.is_zero() || a.mass() > 200) {
      a = SignedTupleFunction(s);
      for (int t = 0; t < 4; ++t) {
        Tuple x(s);
        for (int& v : x) v = static_cast<int>(rng() % 15);
        a.add(x, static_cast<int>(rng() % 21) - 10);
      }
    }
    const auto p = find_separating_prime(a);
    REQUIRE(p.has_value());
    CHECK(*p <= gamma_bound(static_cast<std::int64_t>(a.mass()), s));
    CHECK_FALSE(is_p_good(a, *p));
  }
}

TEST_CASE("invert_moments examples") {
  CHECK(invert_moments(moments(ms(1, {{{2}, 1}, {{0}, 1}}), 2), MassBounds::make(4, 1)) ==
        ms(1, {{{2}, 1}, {{0}, 1}}));
  MomentTable zeros(2, 3);
  zeros.at({0, 0}) = 3;
  CHECK(invert_moments(zeros, MassBounds::make(10, 2)) == ms(2, {{{0, 0}, 3}}));
  const TupleMultiset a = ms(2, {{{1, 0}, 1}, {{0, 1}, 1}}), b = ms(2, {{{1, 1}, 1}, {{0, 0}, 1}});
  CHECK(moments(a, 2).at({1, 1}) == 0);
  CHECK(moments(b, 2).at({1, 1}) == 1);
  CHECK(invert_moments(moments(a, 2), MassBounds::make(2, 2)) == a);
  CHECK(invert_moments(moments(b, 2), MassBounds::make(2, 2)) == b);
}

TEST_CASE("invert_moments agrees with brute force over small multisets") {
  // Budget 2, s = 1: the solver's verdict must match the number of
  // multisets (values <= 4, mass <= 4) sharing the table.
  std::map<std::vector<std::int64_t>, std::vector<TupleMultiset>> by_table;
  all_multisets_1d(4, 4, 4, [&](const TupleMultiset& m) {
    if (m.empty()) return;
    std::vector<std::int64_t> key;
    moments(m, 2).for_each([&](const Tuple&, const BigInt& v) { key.push_back(static_cast<std::int64_t>(v)); });
    by_table[key].push_back(m);
  });
  for (const auto& [key, group] : by_table) {
    const MomentTable mt = moments(group.front(), 2);
    const MassBounds bounds{4, 1, gamma_bound(4, 1), 4};
    auto sols = solve_moments(mt, bounds, 10);
    std::set<std::map<Tuple, BigInt>> found, expected;
    for (const auto& s : sols) found.insert(s.entries);
    for (const auto& m : group) {
      if (static_cast<int>(m.total()) <= 4) expected.insert(m.entries);
    }
    CHECK(found == expected);
  }
}

TEST_CASE("invert_moments errors") {
  MomentTable t(1, 0);
  t.at({0}) = 1;
  try {
    invert_moments(t, MassBounds::make(2, 1));
    FAIL("expected Ambiguous");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Ambiguous);
  }
  MomentTable bad(1, 1);
  bad.at({0}) = 1;
  bad.at({1}) = -1;
  try {
    invert_moments(bad, MassBounds::make(2, 1));
    FAIL("expected Inconsistent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Inconsistent);
  }
}

TEST_CASE("invert_moments round trip") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 300; ++trial) {
    const int s = 1 + trial % 3;
    const TupleMultiset m = random_multiset(rng, s, 40);
    CHECK(invert_moments(moments(m, gamma_bound(40, s)), MassBounds::make(40, s)) == m);
  }
  // small budgets force the search above the table
  for (int trial = 0; trial < 200; ++trial) {
    const int s = 1 + trial % 2;
    const TupleMultiset m = random_multiset(rng, s, 12);
    const int ell = gamma_bound(static_cast<std::int64_t>(std::max<BigInt>(m.mass(), 1)), s) / 3;
    try {
      const TupleMultiset got = invert_moments(moments(m, ell), MassBounds::make(12, s));
      CHECK(moments(got, ell) == moments(m, ell));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Ambiguous);
    }
  }
}

TEST_CASE("injectivity, exhaustive for s = 1") {
  for (int mass = 1; mass <= 12; ++mass) {
    std::map<std::vector<std::string>, int> seen;
    const int ell = gamma_bound(mass, 1);
    int total = 0;
    all_multisets_1d(mass, mass, 6, [&](const TupleMultiset& m) {
      if (m.empty()) return;
      std::vector<std::string> key;
      moments(m, ell).for_each([&](const Tuple&, const BigInt& v) { key.push_back(v.str()); });
      ++seen[key];
      ++total;
    });
    CHECK(seen.size() == static_cast<std::size_t>(total));
  }
}

TEST_CASE("moment_tables_differ matches full tables") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 400; ++trial) {
    const int s = 1 + trial % 3;
    const TupleMultiset a = random_multiset(rng, s, 10);
    TupleMultiset b = trial % 5 == 0 ? a : random_multiset(rng, s, 10);
    const int ell = static_cast<int>(rng() % 6);
    CHECK(moment_tables_differ(a, b, ell) == (moments(a, ell) != moments(b, ell)));
  }
  // {0, 2} and {1, 1} agree up to budget 1
  CHECK_FALSE(moment_tables_differ(ms(1, {{{0}, 1}, {{2}, 1}}), ms(1, {{{1}, 2}}), 1));
  CHECK(moment_tables_differ(ms(1, {{{0}, 1}, {{2}, 1}}), ms(1, {{{1}, 2}}), 2));
}

TEST_CASE("degree_sequence_from_moments") {
  const std::vector<BigInt> p4{4, 6, 2};
  CHECK(degree_sequence_from_moments(p4, 4) == std::vector<int>{1, 1, 2, 2});
  const std::vector<BigInt> k13{4, 6, 3, 1};
  CHECK(degree_sequence_from_moments(k13, 4) == std::vector<int>{1, 1, 1, 3});
  for (int n = 3; n <= 12; ++n) {
    std::vector<BigInt> m{n, 2 * (n - 1), n - 2};
    std::vector<int> expect{1, 1};
    expect.insert(expect.end(), n - 2, 2);
    CHECK(degree_sequence_from_moments(m, n) == expect);
  }
  const std::vector<BigInt> wrong{5, 6, 2};
  CHECK_THROWS_AS(degree_sequence_from_moments(wrong, 4), Error);
}
