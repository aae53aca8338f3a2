#include "catrec/binary.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "catrec/error.hpp"

namespace catrec {
namespace {

TupleMultiset swap_pairs(const TupleMultiset& m) {
  TupleMultiset out(2);
  for (const auto& [t, mult] : m.entries) out.add(Tuple{t[1], t[0]}, mult);
  return out;
}

TupleMultiset flip_second(const TupleMultiset& m) {
  TupleMultiset out(2);
  for (const auto& [t, mult] : m.entries) out.add(Tuple{t[0], 1 - t[1]}, mult);
  return out;
}

bool same_decks(const DeckMap& dm, const Tuple& y) {
  return script_deck(y, dm.s, dm.ell).decks == dm.decks;
}

int ones_in(const Tuple& y) { return static_cast<int>(std::count(y.begin(), y.end(), 1)); }

// Fills positions marked -1 in `partial` with `ones` ones in every possible
// way, keeping strings whose deck map matches. Returns one string per class.
std::vector<Tuple> complete_by_search(const DeckMap& dm, const Tuple& partial, int ones) {
  std::vector<int> gap;
  for (int p = 0; p < static_cast<int>(partial.size()); ++p) {
    if (partial[p] < 0) gap.push_back(p);
  }
  std::set<Tuple> classes;
  if (ones < 0 || ones > static_cast<int>(gap.size())) return {};
  std::vector<int> pick(gap.size(), 0);
  std::fill(pick.end() - ones, pick.end(), 1);
  do {
    Tuple y = partial;
    for (std::size_t g = 0; g < gap.size(); ++g) y[gap[g]] = pick[g];
    if (same_decks(dm, y)) classes.insert(canonical_orientation(y));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return {classes.begin(), classes.end()};
}

}  // namespace

bool DeckMap::has(const IndexSet& S) const {
  return S.size() <= s && S.width() <= ell && decks.count(S.canonical()) > 0;
}

const TupleMultiset& DeckMap::at(const IndexSet& S) const {
  auto it = S.size() <= s && S.width() <= ell ? decks.find(S.canonical()) : decks.end();
  if (it == decks.end()) {
    throw Error(ErrorKind::InsufficientDeck, "deck map (s=" + std::to_string(s) + ", ell=" +
                                                 std::to_string(ell) + ") lacks a set of size " +
                                                 std::to_string(S.size()) + " and width " +
                                                 std::to_string(S.width()));
  }
  return it->second;
}

int literal_width(int k) {
  // floor((k - 2) / 2) + 1 with floor division
  const int t = k - 2;
  return (t >= 0 ? t / 2 : -((-t + 1) / 2)) + 1;
}

int certified_width(int k) { return std::max(1, (k + 1) / 2); }

DeckMap script_deck(const Tuple& x, int s, int ell) {
  const int k = static_cast<int>(x.size());
  if (ell > k) {
    throw Error(ErrorKind::WidthCapExceedsLength,
                "width cap " + std::to_string(ell) + " exceeds length " + std::to_string(k));
  }
  if (ell < 0 || s < 0) throw Error(ErrorKind::InvalidInput, "negative size or width cap");
  DeckMap dm{k, s, ell, {}};
  for (const IndexSet& S : canonical_index_sets(s, ell)) dm.decks.emplace(S, s_deck(x, S));
  return dm;
}

TupleMultiset endpoint_restriction(const DeckMap& dm, const IndexSet& S) {
  if (S.min() < 1 || S.max() > dm.k) {
    throw Error(ErrorKind::BadPositionSet, "positions must lie within [1, k]");
  }
  if (S.size() >= dm.s || S.max() + 1 > dm.ell) {
    throw Error(ErrorKind::InsufficientDeck, "endpoint restriction needs |S| < s and max(S) + 1 <= ell");
  }
  std::vector<int> e(S.size());
  for (int j = 0; j < S.size(); ++j) e[j] = j + 2;
  const IndexSet E(e);
  std::vector<int> with_zero{0};
  with_zero.insert(with_zero.end(), S.elements().begin(), S.elements().end());
  const TupleMultiset shifted = restrict_multiset(dm.at(IndexSet(with_zero)), E);
  TupleMultiset out(S.size());
  if (S.min() >= 2) {
    std::vector<int> with_one{1};
    with_one.insert(with_one.end(), S.elements().begin(), S.elements().end());
    out = restrict_multiset(dm.at(IndexSet(with_one)), E) - shifted;
  } else {
    out = dm.at(S) - shifted;
  }
  if (!out.all_positive() || out.total() != 2) {
    throw Error(ErrorKind::InconsistentDeck, "endpoint restriction is not a 2-element multiset");
  }
  return out;
}

int pair_sum(const DeckMap& dm, int i) {
  if (i < 1 || i > dm.ell - 1 || i > dm.k) {
    throw Error(ErrorKind::IndexOutOfCertifiedRange, "pair_sum index " + std::to_string(i) +
                                                         " outside [1, " + std::to_string(dm.ell - 1) + "]");
  }
  BigInt sum = 0;
  for (const auto& [t, mult] : endpoint_restriction(dm, IndexSet{i}).entries) sum += mult * t[0];
  return static_cast<int>(sum);
}

TupleMultiset pair_joint(const DeckMap& dm, int i, int j) {
  const int k = dm.k;
  const int C = dm.ell - 1;
  auto low = [&](int p) { return p >= 1 && p <= C; };
  auto high = [&](int p) { return p >= k - C + 1 && p <= k; };
  if (i == j || !(low(i) || high(i)) || !(low(j) || high(j))) {
    throw Error(ErrorKind::IndexOutOfCertifiedRange,
                "pair_joint(" + std::to_string(i) + ", " + std::to_string(j) + ") with C = " + std::to_string(C));
  }
  if (low(i) && low(j)) {
    if (i > j) return swap_pairs(pair_joint(dm, j, i));
    return endpoint_restriction(dm, IndexSet{i, j});
  }
  if (!low(i) && !low(j)) return pair_joint(dm, k - i + 1, k - j + 1);
  if (!low(i)) return swap_pairs(pair_joint(dm, j, i));
  // i low, j high only.
  const int jr = k - j + 1;
  if (jr == i) {
    // {x(i)x'(i), x'(i)x(i)}
    TupleMultiset out(2);
    switch (pair_sum(dm, i)) {
      case 0: out.add(Tuple{0, 0}, 2); break;
      case 2: out.add(Tuple{1, 1}, 2); break;
      default: out.add(Tuple{0, 1}); out.add(Tuple{1, 0}); break;
    }
    return out;
  }
  // pair_joint(i, jr) = {x(i)x'(j), x'(i)x(j)}.
  const TupleMultiset known = pair_joint(dm, i, jr);
  std::vector<Tuple> items;
  for (const auto& [t, mult] : known.entries) items.insert(items.end(), static_cast<int>(mult), t);
  if (items[0][0] == items[1][0] || items[0][1] == items[1][1]) return known;
  return flip_second(known);
}

Tuple reconstruct_binary(const DeckMap& dm) {
  const int k = dm.k;
  if (k == 0) return {};
  const TupleMultiset& singles = dm.at(IndexSet{1});
  BigInt twice_ones = 0;
  for (const auto& [t, mult] : singles.entries) {
    if (t[0] != 0 && t[0] != 1) throw Error(ErrorKind::InconsistentDeck, "deck map is not binary");
    if (t[0] == 1) twice_ones = mult;
  }
  if (twice_ones % 2 != 0 || singles.total() != 2 * k) {
    throw Error(ErrorKind::InconsistentDeck, "singleton deck has the wrong shape");
  }
  const int ones = static_cast<int>(twice_ones / 2);

  const int C = std::min(dm.ell - 1, k / 2);
  Tuple y(k, -1);
  std::vector<int> asym;
  for (int i = 1; i <= C; ++i) {
    const int sum = pair_sum(dm, i);
    if (sum == 1) {
      asym.push_back(i);
    } else {
      y[i - 1] = y[k - i] = sum / 2;
    }
  }
  if (!asym.empty()) {
    const int t0 = asym.front();
    y[t0 - 1] = 1;
    y[k - t0] = 0;
    for (std::size_t a = 1; a < asym.size(); ++a) {
      const int j = asym[a];
      const int bit = pair_joint(dm, t0, j).multiplicity(Tuple{1, 1}) > 0 ? 1 : 0;
      y[j - 1] = bit;
      y[k - j] = 1 - bit;
    }
  }

  const int gap = k - 2 * C;
  const int rest = ones - ones_in(y);
  if (rest < 0 || rest > gap) throw Error(ErrorKind::InconsistentDeck, "ones count does not fit");
  bool resolved = false;
  if (gap == 1) {
    y[C] = rest;
    resolved = true;
  } else if (gap == 2) {
    const int m = C + 1;  // positions m, m + 1 (1-based) are open
    if (rest != 1) {
      y[m - 1] = y[m] = rest / 2;
      resolved = true;
    } else if (asym.empty()) {
      y[m - 1] = 0;
      y[m] = 1;
      resolved = true;
    } else {
      // Decide between 01 and 10 with the deck of {i, m}, i the largest asymmetric index.
      const IndexSet S{asym.back(), m};
      if (dm.has(S)) {
        Tuple a = y, b = y;
        a[m - 1] = 0, a[m] = 1;
        b[m - 1] = 1, b[m] = 0;
        const bool fa = s_deck(a, S) == dm.at(S);
        const bool fb = s_deck(b, S) == dm.at(S);
        if (fa != fb) {
          y = fa ? a : b;
          resolved = true;
        }
      }
    }
  } else if (gap == 0) {
    resolved = true;
  }

  if (!resolved) {
    const auto found = complete_by_search(dm, y, rest);
    if (found.empty()) throw Error(ErrorKind::InconsistentDeck, "no binary string has this deck map");
    if (found.size() > 1) {
      throw Error(ErrorKind::InsufficientDeck,
                  std::to_string(found.size()) + " inequivalent strings share this deck map");
    }
    return found.front();
  }
  if (!same_decks(dm, y)) throw Error(ErrorKind::InconsistentDeck, "no binary string has this deck map");
  return y;
}

DeckMap project(const DeckMap& dm, const std::map<int, int>& pi) {
  DeckMap out{dm.k, dm.s, dm.ell, {}};
  for (const auto& [S, deck] : dm.decks) {
    TupleMultiset img(deck.s);
    for (const auto& [t, mult] : deck.entries) {
      Tuple u(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) {
        auto it = pi.find(t[i]);
        u[i] = it == pi.end() ? 0 : it->second;
      }
      img.add(u, mult);
    }
    out.decks.emplace(S, std::move(img));
  }
  return out;
}

bool equivalent(const Tuple& x, const Tuple& y) { return x == y || x == reversed(y); }

Tuple canonical_orientation(const Tuple& x) { return std::min(x, reversed(x)); }

Tuple reconstruct_sequence(const DeckMap& dm) {
  const int k = dm.k;
  if (k == 0) return {};
  std::vector<int> alphabet;
  try {
    for (const auto& [t, mult] : dm.at(IndexSet{1}).entries) {
      if (mult <= 0) throw Error(ErrorKind::InconsistentDeck, "non-positive multiplicity");
      alphabet.push_back(t[0]);
    }
  } catch (const Error& e) {
    throw Error(ErrorKind::NoConsistentSequence, e.what());
  }

  auto indicator = [&](std::initializer_list<int> values) {
    std::map<int, int> pi;
    for (int v : values) pi[v] = 1;
    return reconstruct_binary(project(dm, pi));
  };

  std::vector<Tuple> strings;
  std::vector<std::vector<Tuple>> options;
  try {
    for (int v : alphabet) strings.push_back(indicator({v}));
    // Orient each asymmetric indicator against a fixed asymmetric reference
    // through the indicator of the union of the two values.
    int ref = -1;
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      const Tuple& u = strings[a];
      const Tuple ur = reversed(u);
      if (u == ur) {
        options.push_back({u});
        continue;
      }
      if (ref < 0) {
        ref = static_cast<int>(a);
        options.push_back({u});
        continue;
      }
      const Tuple z = indicator({alphabet[ref], alphabet[a]});
      std::vector<Tuple> opts;
      for (const Tuple& o : {u, ur}) {
        Tuple both(k);
        for (int p = 0; p < k; ++p) both[p] = strings[ref][p] | o[p];
        if (equivalent(both, z)) opts.push_back(o);
      }
      options.push_back(std::move(opts));
    }
  } catch (const Error& e) {
    throw Error(ErrorKind::NoConsistentSequence, e.what());
  }

  std::set<Tuple> verified;
  std::vector<std::size_t> choice(alphabet.size(), 0);
  while (true) {
    Tuple f(k, -1);
    bool partition = true;
    for (std::size_t a = 0; a < alphabet.size() && partition && !options[a].empty(); ++a) {
      const Tuple& u = options[a][choice[a]];
      for (int p = 0; p < k; ++p) {
        if (u[p] != 1) continue;
        if (f[p] >= 0) partition = false;
        f[p] = alphabet[a];
      }
    }
    partition = partition && std::find(f.begin(), f.end(), -1) == f.end() &&
                std::none_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); });
    if (partition && same_decks(dm, f)) verified.insert(canonical_orientation(f));
    std::size_t a = 0;
    while (a < choice.size() && ++choice[a] >= std::max<std::size_t>(options[a].size(), 1)) choice[a++] = 0;
    if (a == choice.size()) break;
  }
  if (verified.empty()) throw Error(ErrorKind::NoConsistentSequence, "no sequence matches the decks");
  return *verified.begin();
}

}  // namespace catrec
