#include "catrec/momentsolve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "catrec/error.hpp"

namespace catrec {
namespace {

int l1(const Tuple& t) { return std::accumulate(t.begin(), t.end(), 0); }

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

// Non-negative residue of v mod p.
BigInt mod_positive(const BigInt& v, int p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r;
}

// Calls fn(g, F(c, g)) for every g <= c with |g|_1 <= ell; stops early when fn returns false.
template <typename Fn>
bool walk_box(const Tuple& c, int ell, Fn&& fn) {
  const int s = static_cast<int>(c.size());
  Tuple g(s, 0);
  std::vector<BigInt> prefix(s + 1, 1);
  int sum = 0;
  // Iterative odometer over the box, pruned by the budget.
  int i = 0;
  std::vector<int> state(s, -1);
  while (i >= 0) {
    if (i == s) {
      if (!fn(static_cast<const Tuple&>(g), static_cast<const BigInt&>(prefix[s]))) return false;
      --i;
      continue;
    }
    const int next = state[i] + 1;
    const int hi = std::max(c[i], 0);
    if (state[i] >= 0) sum -= g[i];
    if (next > hi || sum + next > ell) {
      state[i] = -1;
      g[i] = 0;
      --i;
      continue;
    }
    state[i] = next;
    g[i] = next;
    sum += next;
    prefix[i + 1] = prefix[i] * binomial(c[i], next);
    ++i;
  }
  return true;
}

class Solver {
 public:
  Solver(const MomentTable& mt, const MassBounds& bounds, std::size_t limit, std::uint64_t node_limit)
      : mt_(mt), bounds_(bounds), limit_(limit), node_limit_(node_limit), residual_(mt) {
    const int s = mt.s();
    mt.for_each([&](const Tuple& g, const BigInt&) { layered_.push_back(g); });
    std::stable_sort(layered_.begin(), layered_.end(),
                     [](const Tuple& a, const Tuple& b) { return l1(a) > l1(b); });

    // With ell >= 1 the table pins the total mass exactly.
    mass_cap_ = bounds.n;
    if (mt.ell() >= 1) {
      BigInt exact = 0;
      for (int i = 0; i < s; ++i) {
        Tuple e(s, 0);
        e[i] = 1;
        exact += mt.at(e);
      }
      if (exact < 0) {
        impossible_ = true;
        return;
      }
      if (exact < mass_cap_) mass_cap_ = static_cast<std::int64_t>(exact);
    }
    build_candidates();
  }

  std::vector<TupleMultiset> run() {
    if (!impossible_) dfs(0, mass_cap_);
    return std::move(solutions_);
  }

 private:
  void build_candidates() {
    const int s = mt_.s();
    const int L = mt_.ell();
    if (mass_cap_ <= L) return;
    const std::int64_t entry_cap =
        bounds_.card_cap ? std::min<std::int64_t>(*bounds_.card_cap, mass_cap_) : mass_cap_;
    Tuple c(s, 0);
    // Enumerate all tuples with entries <= entry_cap and L < |c| <= mass_cap.
    std::function<void(int, std::int64_t)> gen = [&](int i, std::int64_t sum) {
      if (i == s) {
        if (sum > L && viable(c)) candidates_.push_back(c);
        return;
      }
      for (std::int64_t v = 0; v <= entry_cap && sum + v <= mass_cap_; ++v) {
        c[i] = static_cast<int>(v);
        gen(i + 1, sum + v);
      }
      c[i] = 0;
    };
    gen(0, 0);
    std::sort(candidates_.begin(), candidates_.end(), [](const Tuple& a, const Tuple& b) {
      const int la = l1(a), lb = l1(b);
      return la != lb ? la > lb : a > b;
    });
  }

  // A single copy of c must fit under the original table.
  bool viable(const Tuple& c) const {
    return walk_box(c, mt_.ell(), [&](const Tuple& g, const BigInt& f) { return mt_.at(g) >= f; });
  }

  bool subtract_fits(const Tuple& c) {
    accumulate_moments(residual_, c, -1);
    const bool ok = walk_box(c, mt_.ell(), [&](const Tuple& g, const BigInt&) {
      return residual_.at(g) >= 0;
    });
    if (!ok) accumulate_moments(residual_, c, 1);
    return ok;
  }

  // Peels cards with |c| <= ell top-down; nullopt if a residual goes negative.
  std::optional<TupleMultiset> peel() const {
    MomentTable r = residual_;
    TupleMultiset low(mt_.s());
    for (const Tuple& g : layered_) {
      const BigInt v = r.at(g);
      if (v < 0) return std::nullopt;
      if (v == 0) continue;
      if (bounds_.card_cap && *std::max_element(g.begin(), g.end()) > *bounds_.card_cap) {
        return std::nullopt;
      }
      low.add(g, v);
      accumulate_moments(r, g, -v);
    }
    return low;
  }

  void dfs(std::size_t start, std::int64_t mass_left) {
    if (++nodes_ > node_limit_) {
      throw Error(ErrorKind::SearchLimitExceeded,
                  "moment inversion exceeded " + std::to_string(node_limit_) + " search nodes");
    }
    if (auto low = peel()) {
      TupleMultiset sol = *low;
      for (const Tuple& c : high_) sol.add(c, 1);
      if (sol.mass() <= bounds_.n) solutions_.push_back(std::move(sol));
      if (solutions_.size() >= limit_) return;
    }
    for (std::size_t idx = start; idx < candidates_.size(); ++idx) {
      const Tuple& c = candidates_[idx];
      if (l1(c) > mass_left) continue;
      if (!subtract_fits(c)) continue;
      high_.push_back(c);
      dfs(idx, mass_left - l1(c));
      high_.pop_back();
      accumulate_moments(residual_, c, 1);
      if (solutions_.size() >= limit_) return;
    }
  }

  const MomentTable& mt_;
  MassBounds bounds_;
  std::size_t limit_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  MomentTable residual_;
  std::vector<Tuple> layered_;
  std::vector<Tuple> candidates_;
  std::vector<Tuple> high_;
  std::vector<TupleMultiset> solutions_;
  std::int64_t mass_cap_ = 0;
  bool impossible_ = false;
};

}  // namespace

void SignedTupleFunction::add(const Tuple& x, const BigInt& value) {
  if (static_cast<int>(x.size()) != s) throw Error(ErrorKind::LengthMismatch, "tuple arity mismatch");
  if (value == 0) return;
  auto [it, inserted] = entries.try_emplace(x, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries.erase(it);
  }
}

BigInt SignedTupleFunction::mass() const {
  BigInt m = 0;
  for (const auto& [x, v] : entries) m += abs(v) + l1(x);
  return m;
}

SignedTupleFunction difference(const TupleMultiset& m, const TupleMultiset& n) {
  if (m.s != n.s) throw Error(ErrorKind::LengthMismatch, "multisets of different arity");
  SignedTupleFunction a(m.s);
  for (const auto& [c, mult] : m.entries) a.add(c, mult);
  for (const auto& [c, mult] : n.entries) a.add(c, -mult);
  return a;
}

int gamma_bound(std::int64_t n, int s) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "gamma_bound needs n >= 1");
  if (s < 1) throw Error(ErrorKind::InvalidInput, "gamma_bound needs s >= 1");
  const double x = 2.0 * std::sqrt(static_cast<double>(n)) * std::log(static_cast<double>(n) + 2.0);
  return static_cast<int>(std::ceil(x)) + 8;
}

MassBounds MassBounds::make(std::int64_t n, int s, std::optional<int> card_cap) {
  return MassBounds{n, s, gamma_bound(std::max<std::int64_t>(n, 1), s), card_cap};
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

BigInt eta(const SignedTupleFunction& a, const Tuple& j, int p) {
  require_prime(p);
  if (static_cast<int>(j.size()) != a.s) throw Error(ErrorKind::LengthMismatch, "class arity mismatch");
  BigInt sum = 0;
  for (const auto& [x, v] : a.entries) {
    bool same = true;
    for (int k = 0; k < a.s && same; ++k) same = ((x[k] - j[k]) % p) == 0;
    if (same) sum += v;
  }
  return sum;
}

BigInt sigma(const SignedTupleFunction& a, const Tuple& i, const Tuple& j) {
  if (static_cast<int>(i.size()) != a.s || static_cast<int>(j.size()) != a.s) {
    throw Error(ErrorKind::LengthMismatch, "exponent or shift arity mismatch");
  }
  BigInt sum = 0;
  for (const auto& [x, v] : a.entries) {
    BigInt term = v;
    for (int k = 0; k < a.s; ++k) {
      term *= boost::multiprecision::pow(BigInt(x[k] - j[k]), static_cast<unsigned>(i[k]));
    }
    sum += term;
  }
  return sum;
}

bool verify_appendix_identity(const SignedTupleFunction& a, int p, const Tuple& j) {
  require_prime(p);
  const BigInt lhs = mod_positive(eta(a, j, p), p);
  BigInt rhs = 0;
  for (unsigned mask = 0; mask < (1u << a.s); ++mask) {
    Tuple i(a.s, 0);
    for (int k = 0; k < a.s; ++k) {
      if (mask & (1u << k)) i[k] = p - 1;
    }
    const BigInt term = sigma(a, i, j);
    if (std::popcount(mask) % 2 == 0) {
      rhs += term;
    } else {
      rhs -= term;
    }
  }
  return lhs == mod_positive(rhs, p);
}

bool is_p_good(const SignedTupleFunction& a, int p) {
  require_prime(p);
  for (const auto& [x, v] : a.entries) {
    Tuple j(a.s);
    for (int k = 0; k < a.s; ++k) j[k] = ((x[k] % p) + p) % p;
    if (mod_positive(eta(a, j, p), p) != 0) return false;
  }
  return true;
}

std::optional<int> find_separating_prime(const SignedTupleFunction& a) {
  if (a.is_zero()) return std::nullopt;
  const BigInt mass = a.mass();
  const int bound = gamma_bound(static_cast<std::int64_t>(mass), a.s);
  for (int p = 2; p <= bound; ++p) {
    if (is_prime(p) && !is_p_good(a, p)) return p;
  }
  return std::nullopt;
}

std::vector<TupleMultiset> solve_moments(const MomentTable& mt, const MassBounds& bounds,
                                         std::size_t limit, std::uint64_t node_limit) {
  if (bounds.s != mt.s()) throw Error(ErrorKind::LengthMismatch, "bounds arity differs from table");
  Solver solver(mt, bounds, limit, node_limit);
  return solver.run();
}

TupleMultiset invert_moments(const MomentTable& mt, const MassBounds& bounds) {
  auto sols = solve_moments(mt, bounds, 2);
  if (sols.empty()) throw Error(ErrorKind::Inconsistent, "no multiset matches the moment table");
  if (sols.size() > 1) {
    throw Error(ErrorKind::Ambiguous,
                "at least two multisets match moments up to budget " + std::to_string(mt.ell()));
  }
  return std::move(sols.front());
}

bool moment_tables_differ(const TupleMultiset& m, const TupleMultiset& n, int ell) {
  const SignedTupleFunction a = difference(m, n);
  if (a.is_zero()) return false;
  // A support point of maximal |x|_1 is maximal in the product order, so its
  // moment equals a(x) != 0 whenever it lies inside the budget.
  int top = -1;
  for (const auto& [x, v] : a.entries) top = std::max(top, l1(x));
  if (top <= ell) return true;
  MomentTable d(a.s, ell);
  for (const auto& [x, v] : a.entries) accumulate_moments(d, x, v);
  bool differ = false;
  d.for_each([&](const Tuple&, const BigInt& v) { differ = differ || v != 0; });
  return differ;
}

std::vector<int> degree_sequence_from_moments(std::span<const BigInt> star_moments, int n) {
  if (star_moments.empty() || star_moments[0] != n) {
    throw Error(ErrorKind::InvalidInput, "star_moments[0] must equal n");
  }
  const int jmax = static_cast<int>(star_moments.size()) - 1;
  // Trees on n >= 2 vertices have no isolated vertex, so invert for deg - 1,
  // using C(d - 1, j) = sum over i <= j of (-1)^(j - i) C(d, i).
  const int shift = n >= 2 ? 1 : 0;
  MomentTable mt(1, jmax);
  for (int j = 0; j <= jmax; ++j) {
    BigInt v = 0;
    for (int i = 0; i <= j; ++i) {
      if (shift == 0 && i != j) continue;
      v += (j - i) % 2 ? -star_moments[i] : star_moments[i];
    }
    mt.at(Tuple{j}) = v;
  }
  std::int64_t mass = jmax >= 1 ? static_cast<std::int64_t>(star_moments[1]) - shift * n : 0;
  if (mass < 0) throw Error(ErrorKind::Inconsistent, "degree sum below n");
  const TupleMultiset degrees = invert_moments(mt, MassBounds::make(mass, 1, std::max(n - 1 - shift, 0)));
  std::vector<int> out;
  for (const auto& [c, mult] : degrees.entries) out.insert(out.end(), static_cast<int>(mult), c[0] + shift);
  return out;
}

}  // namespace catrec
