#include "catrec/seqdeck.hpp"

#include <algorithm>
#include <numeric>
#include <bit>
#include <string>

#include "catrec/error.hpp"

namespace catrec {

Tuple reversed(Tuple t) {
  std::reverse(t.begin(), t.end());
  return t;
}

IndexSet::IndexSet(std::vector<int> elements) : elems_(std::move(elements)) {
  if (elems_.empty()) throw Error(ErrorKind::BadPositionSet, "index set must be non-empty");
  std::sort(elems_.begin(), elems_.end());
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end()) {
    throw Error(ErrorKind::BadPositionSet, "index set has repeated elements");
  }
}

bool IndexSet::contains(int x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

IndexSet IndexSet::translated(int offset) const {
  std::vector<int> out = elems_;
  for (int& x : out) x += offset;
  return IndexSet(std::move(out));
}

IndexSet IndexSet::mirrored() const {
  std::vector<int> out;
  for (int x : elems_) out.push_back(min() + max() - x);
  return IndexSet(std::move(out));
}

std::vector<IndexSet> canonical_index_sets(int max_size, int max_width) {
  std::vector<IndexSet> out;
  for (int w = 1; w <= max_width; ++w) {
    // Sets with min 1 and max w; the interior is any subset of 2..w-1.
    std::vector<std::vector<int>> bucket;
    if (w == 1) {
      bucket.push_back({1});
    } else {
      const int inner = w - 2;
      for (unsigned mask = 0; mask < (1u << inner); ++mask) {
        if (std::popcount(mask) + 2 > max_size) continue;
        std::vector<int> e{1};
        for (int b = 0; b < inner; ++b) {
          if (mask & (1u << b)) e.push_back(b + 2);
        }
        e.push_back(w);
        bucket.push_back(std::move(e));
      }
    }
    std::sort(bucket.begin(), bucket.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (auto& e : bucket) {
      if (static_cast<int>(e.size()) <= max_size) out.emplace_back(std::move(e));
    }
  }
  return out;
}

void TupleMultiset::add(const Tuple& t, const BigInt& mult) {
  if (static_cast<int>(t.size()) != s) {
    throw Error(ErrorKind::LengthMismatch, "tuple arity " + std::to_string(t.size()) +
                                               " in multiset of arity " + std::to_string(s));
  }
  if (mult == 0) return;
  auto [it, inserted] = entries.try_emplace(t, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) entries.erase(it);
  }
}

BigInt TupleMultiset::multiplicity(const Tuple& t) const {
  auto it = entries.find(t);
  return it == entries.end() ? BigInt(0) : it->second;
}

BigInt TupleMultiset::total() const {
  BigInt sum = 0;
  for (const auto& [t, mult] : entries) sum += mult;
  return sum;
}

BigInt TupleMultiset::mass() const {
  BigInt sum = 0;
  for (const auto& [t, mult] : entries) {
    sum += mult * std::accumulate(t.begin(), t.end(), 0);
  }
  return sum;
}

bool TupleMultiset::all_positive() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.second > 0; });
}

TupleMultiset operator+(const TupleMultiset& a, const TupleMultiset& b) {
  TupleMultiset out = a;
  for (const auto& [t, mult] : b.entries) out.add(t, mult);
  return out;
}

TupleMultiset operator-(const TupleMultiset& a, const TupleMultiset& b) {
  TupleMultiset out = a;
  for (const auto& [t, mult] : b.entries) out.add(t, -mult);
  return out;
}

MomentTable::MomentTable(int s, int ell) : s_(s), ell_(ell) {
  if (s < 1 || ell < 0) throw Error(ErrorKind::InvalidInput, "moment table needs s >= 1, ell >= 0");
  // count_[m][r] = C(r + m, m)
  count_.assign(s + 2, std::vector<std::size_t>(ell + 2, 0));
  for (int m = 0; m <= s + 1; ++m) {
    for (int r = 0; r <= ell + 1; ++r) {
      count_[m][r] = (m == 0 || r == 0) ? 1 : count_[m - 1][r] + count_[m][r - 1];
    }
  }
  values_.assign(count_[s][ell], 0);
}

bool MomentTable::in_domain(const Tuple& g) const {
  if (static_cast<int>(g.size()) != s_) return false;
  int sum = 0;
  for (int x : g) {
    if (x < 0) return false;
    sum += x;
  }
  return sum <= ell_;
}

std::size_t MomentTable::rank(const Tuple& g) const {
  if (!in_domain(g)) throw Error(ErrorKind::InvalidInput, "tuple outside moment table domain");
  std::size_t r = 0;
  int rem = ell_;
  for (int i = 0; i < s_; ++i) {
    const int m = s_ - i - 1;
    // sum over v < g_i of C(rem - v + m, m) = C(rem + m + 1, m + 1) - C(rem - g_i + m + 1, m + 1)
    r += count_[m + 1][rem] - count_[m + 1][rem - g[i]];
    rem -= g[i];
  }
  return r;
}

const BigInt& MomentTable::at(const Tuple& g) const { return values_[rank(g)]; }
BigInt& MomentTable::at(const Tuple& g) { return values_[rank(g)]; }

void MomentTable::for_each(const std::function<void(const Tuple&, const BigInt&)>& fn) const {
  Tuple g(s_, 0);
  std::size_t r = 0;
  int sum = 0;
  while (true) {
    fn(g, values_[r++]);
    // Next tuple in lexicographic order with sum <= ell.
    if (sum < ell_) {
      ++g[s_ - 1];
      ++sum;
      continue;
    }
    int i = s_ - 1;
    while (i >= 0 && g[i] == 0) --i;
    if (i <= 0) return;
    sum -= g[i];
    g[i] = 0;
    ++g[i - 1];
    ++sum;
  }
}

BigInt f_embed(const Tuple& f, const Tuple& g) {
  if (f.size() != g.size()) throw Error(ErrorKind::LengthMismatch, "f_embed arguments differ in length");
  BigInt prod = 1;
  for (std::size_t i = 0; i < f.size(); ++i) {
    prod *= binomial(f[i], g[i]);
    if (prod == 0) break;
  }
  return prod;
}

TupleMultiset s_deck(const Tuple& f, const IndexSet& S) {
  const int m = static_cast<int>(f.size());
  if (S.width() > m) {
    throw Error(ErrorKind::WidthExceedsDomain,
                "width " + std::to_string(S.width()) + " exceeds length " + std::to_string(m));
  }
  const Tuple fr = reversed(f);
  TupleMultiset out(S.size());
  Tuple a(S.size()), b(S.size());
  for (int shift = 1 - S.min(); shift + S.max() <= m; ++shift) {
    for (int j = 0; j < S.size(); ++j) {
      a[j] = f[shift + S.elements()[j] - 1];
      b[j] = fr[shift + S.elements()[j] - 1];
    }
    out.add(a);
    out.add(b);
  }
  return out;
}

void accumulate_moments(MomentTable& table, const Tuple& c, const BigInt& mult) {
  const int s = table.s();
  if (static_cast<int>(c.size()) != s) throw Error(ErrorKind::LengthMismatch, "card arity mismatch");
  // Walk the box 0 <= g <= max(c, 0) with |g|_1 <= ell; entries of -1 only admit g_i = 0.
  Tuple hi(s);
  for (int i = 0; i < s; ++i) {
    if (c[i] < -1) throw Error(ErrorKind::InvalidInput, "card entries must be >= -1");
    hi[i] = std::max(c[i], 0);
  }
  Tuple g(s, 0);
  std::vector<BigInt> prefix(s + 1);
  prefix[0] = mult;
  int sum = 0;
  // Depth-first walk; prefix[i] = mult * prod_{j < i} C(c_j, g_j).
  std::function<void(int)> walk = [&](int i) {
    if (i == s) {
      table.at(g) += prefix[s];
      return;
    }
    for (int v = 0; v <= hi[i] && sum + v <= table.ell(); ++v) {
      g[i] = v;
      sum += v;
      prefix[i + 1] = prefix[i] * binomial(c[i], v);
      walk(i + 1);
      sum -= v;
    }
    g[i] = 0;
  };
  walk(0);
}

MomentTable moments(const TupleMultiset& m, int ell) {
  if (ell < 0) throw Error(ErrorKind::InvalidInput, "moment budget must be non-negative");
  MomentTable table(m.s, ell);
  for (const auto& [c, mult] : m.entries) accumulate_moments(table, c, mult);
  return table;
}

TupleMultiset t_transform(const TupleMultiset& m) {
  TupleMultiset out(m.s);
  for (const auto& [card, mult] : m.entries) {
    Tuple c = card;
    if (m.s == 1) {
      c[0] += 2;
    } else {
      ++c.front();
      ++c.back();
    }
    out.add(c, mult);
  }
  return out;
}

TupleMultiset t_inverse(const TupleMultiset& m, bool allow_negative) {
  const int floor = allow_negative ? -1 : 0;
  TupleMultiset out(m.s);
  for (const auto& [card, mult] : m.entries) {
    Tuple c = card;
    if (m.s == 1) {
      c[0] -= 2;
    } else {
      --c.front();
      --c.back();
    }
    if (c.front() < floor || c.back() < floor) {
      throw Error(ErrorKind::NotInTImage, "tuple endpoint too small to undo T");
    }
    out.add(c, mult);
  }
  return out;
}

bool is_degenerate(const Tuple& g) { return g.empty() || g.front() == 0 || g.back() == 0; }

std::pair<TupleMultiset, TupleMultiset> split_degenerate(const TupleMultiset& m) {
  std::pair<TupleMultiset, TupleMultiset> out{TupleMultiset(m.s), TupleMultiset(m.s)};
  for (const auto& [c, mult] : m.entries) (is_degenerate(c) ? out.first : out.second).add(c, mult);
  return out;
}

TupleMultiset restrict_multiset(const TupleMultiset& m, const IndexSet& positions) {
  if (positions.min() < 1 || positions.max() > m.s) {
    throw Error(ErrorKind::BadPositionSet, "positions must lie within [1, " + std::to_string(m.s) + "]");
  }
  TupleMultiset out(positions.size());
  Tuple r(positions.size());
  for (const auto& [c, mult] : m.entries) {
    for (int j = 0; j < positions.size(); ++j) r[j] = c[positions.elements()[j] - 1];
    out.add(r, mult);
  }
  return out;
}

}  // namespace catrec
