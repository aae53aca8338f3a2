#include "catrec/pipeline.hpp"

#include <algorithm>
#include <string>

#include "catrec/error.hpp"
#include "catrec/momentsolve.hpp"

namespace catrec {
namespace {

std::string show(const IndexSet& S) {
  std::string out = "{";
  for (int x : S.elements()) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

int leaves_of(const std::vector<int>& degrees) {
  return static_cast<int>(std::count(degrees.begin(), degrees.end(), 1));
}

}  // namespace

ReconstructionContext::ReconstructionContext(Deck d, std::vector<int> degrees)
    : deck(d), n(d.n), degree_sequence(std::move(degrees)), counter(std::move(d)) {
  std::sort(degree_sequence.begin(), degree_sequence.end());
  k = n - leaves_of(degree_sequence);
}

ReconstructionContext ReconstructionContext::from_deck(Deck d) {
  const int n = d.n;
  const int jmax = std::min(d.ell - 1, n - 1);
  KellyCounter counter(d);
  const auto m = star_moments(counter, jmax);
  auto degrees = degree_sequence_from_moments(m, n);
  return ReconstructionContext(std::move(d), std::move(degrees));
}

BigInt nondegen_moment(ReconstructionContext& ctx, const IndexSet& S0, const Tuple& g) {
  const IndexSet S = S0.canonical();
  if (S.size() < 2) throw Error(ErrorKind::InvalidInput, "nondegen_moment needs |S| >= 2");
  if (static_cast<int>(g.size()) != S.size()) throw Error(ErrorKind::LengthMismatch, "g does not match S");
  if (is_degenerate(g)) throw Error(ErrorKind::InvalidInput, "g is degenerate");
  const int delta = S.width();
  int weight = 0;
  for (int v : g) weight += v;
  if (delta + weight > ctx.n) return 0;
  if (delta + weight > ctx.deck.ell) {
    throw Error(ErrorKind::CardBudgetExceeded, "pattern on " + std::to_string(delta + weight) +
                                                   " vertices exceeds card size " +
                                                   std::to_string(ctx.deck.ell));
  }
  std::vector<int> f(delta, 0);
  for (int j = 0; j < S.size(); ++j) f[S.elements()[j] - 1] = g[j];
  --f.front();
  --f.back();
  const SpineFunction star(f);
  const BigInt count = ctx.counter.count(canonical_forest_code(phi_inverse(star)));
  return star.symmetric() ? 2 * count : count;
}

TupleMultiset degen_source(const ReconstructionContext& ctx, const IndexSet& S0) {
  const IndexSet S = S0.canonical();
  if (S.size() < 2) throw Error(ErrorKind::InvalidInput, "degenerate moments need |S| >= 2");
  std::vector<int> rest(S.elements().begin() + 1, S.elements().end());
  std::vector<int> u = rest;
  if (rest.front() != 2) u.insert(u.begin(), 2);
  const IndexSet U(u);
  auto it = ctx.sdecks.find(U.canonical());
  if (it == ctx.sdecks.end()) {
    throw Error(ErrorKind::MissingPredecessorDeck, "deck of " + show(U.canonical()) + " needed for " + show(S));
  }
  TupleMultiset d = t_inverse(it->second, true);
  if (U.size() >= 2) {
    // Drop the translate that starts at position 0 (one card per orientation).
    BigInt dropped = 0;
    for (auto e = d.entries.begin(); e != d.entries.end();) {
      if (e->first.front() == -1) {
        dropped += e->second;
        e = d.entries.erase(e);
      } else {
        ++e;
      }
    }
    if (dropped != 2) throw Error(ErrorKind::Inconsistent, "predecessor deck of " + show(U) + " is malformed");
  } else {
    if (d.multiplicity(Tuple{-1}) < 4) throw Error(ErrorKind::Inconsistent, "singleton deck is malformed");
    d.add(Tuple{-1}, -2);
  }
  std::vector<int> pos;
  for (int j = (rest.front() == 2 ? 1 : 2); j <= U.size(); ++j) pos.push_back(j);
  TupleMultiset restricted = restrict_multiset(d, IndexSet(pos));
  TupleMultiset out(restricted.s);
  for (const auto& [c, mult] : restricted.entries) {
    Tuple t = c;
    ++t.back();
    out.add(t, mult);
  }
  return out;
}

BigInt degen_moment(const ReconstructionContext& ctx, const IndexSet& S0, const Tuple& g) {
  const IndexSet S = S0.canonical();
  if (static_cast<int>(g.size()) != S.size()) throw Error(ErrorKind::LengthMismatch, "g does not match S");
  if (!is_degenerate(g)) throw Error(ErrorKind::InvalidInput, "g is not degenerate");
  if (g.front() != 0) return degen_moment(ctx, S.mirrored(), reversed(g));
  const TupleMultiset src = degen_source(ctx, S);
  const Tuple tail(g.begin() + 1, g.end());
  BigInt sum = 0;
  for (const auto& [c, mult] : src.entries) sum += mult * f_embed(c, tail);
  return sum;
}

MomentTable degen_moments(const ReconstructionContext& ctx, const IndexSet& S0, int budget) {
  const IndexSet S = S0.canonical();
  MomentTable out(S.size(), budget);
  const MomentTable front = moments(degen_source(ctx, S), budget);
  const MomentTable back = moments(degen_source(ctx, S.mirrored()), budget);
  std::vector<std::pair<Tuple, BigInt>> fill;
  out.for_each([&](const Tuple& g, const BigInt&) {
    if (!is_degenerate(g)) return;
    if (g.front() == 0) {
      fill.emplace_back(g, front.at(Tuple(g.begin() + 1, g.end())));
    } else {
      const Tuple r = reversed(g);
      fill.emplace_back(g, back.at(Tuple(r.begin() + 1, r.end())));
    }
  });
  for (auto& [g, v] : fill) out.at(g) = std::move(v);
  return out;
}

TupleMultiset singleton_deck(const std::vector<int>& degrees, int k) {
  const int n = static_cast<int>(degrees.size());
  int sum = 0;
  int interior = 0;
  for (int d : degrees) {
    if (d < 1) throw Error(ErrorKind::NotCaterpillarDegrees, "degree below 1");
    sum += d;
    if (d >= 2) ++interior;
  }
  if (sum != 2 * (n - 1) || interior != k || k < 1) {
    throw Error(ErrorKind::NotCaterpillarDegrees, "degrees do not describe a caterpillar with spine " +
                                                      std::to_string(k));
  }
  TupleMultiset out(1);
  for (int d : degrees) {
    if (d >= 2) out.add(Tuple{d}, 2);
  }
  // h(0) and h(k + 1), each read in both orientations
  out.add(Tuple{1}, 4);
  return out;
}

DeckMap reconstruct_sdecks(ReconstructionContext& ctx, ReconstructionTrace* trace) {
  const int n = ctx.n;
  const int k = ctx.k;
  const int w = certified_width(k);
  const int ell = ctx.deck.ell;
  if (w > ell) {
    throw Error(ErrorKind::CardBudgetExceeded, "width " + std::to_string(w) + " needs cards of size at least " +
                                                   std::to_string(w));
  }
  if (trace) {
    trace->n = n;
    trace->ell = ell;
    trace->k = k;
    trace->width = w;
    trace->degree_sequence = ctx.degree_sequence;
  }
  DeckMap dm{k, 3, w, {}};
  for (const IndexSet& S : canonical_index_sets(3, w)) {
    const int delta = S.width();
    const int s = S.size();
    const int budget = ell - delta;
    MomentTable table(s, budget);
    TupleMultiset tdeck(s);
    if (s == 1) {
      tdeck = singleton_deck(ctx.degree_sequence, k);
      table = moments(tdeck, budget);
    } else {
      table = degen_moments(ctx, S, budget);
      std::vector<std::pair<Tuple, BigInt>> fill;
      table.for_each([&](const Tuple& g, const BigInt&) {
        if (!is_degenerate(g)) fill.emplace_back(g, nondegen_moment(ctx, S, g));
      });
      for (auto& [g, v] : fill) table.at(g) = std::move(v);
      const std::int64_t cards = 2 * (k + 3 - delta);
      const std::int64_t mass = std::min<std::int64_t>(2LL * s * (n - k - 2) + 2 * cards, cards * (n - delta));
      try {
        tdeck = invert_moments(table, MassBounds::make(mass, s, n - delta));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::Ambiguous || e.kind() == ErrorKind::SearchLimitExceeded) {
          throw Error(ErrorKind::AmbiguousAtS, "S = " + show(S) + " at moment budget " + std::to_string(budget) +
                                                   ": " + e.what());
        }
        throw;
      }
    }
    ctx.sdecks[S] = tdeck;
    TupleMultiset fdeck(s);
    for (const auto& [c, mult] : t_inverse(tdeck, true).entries) {
      if (std::find(c.begin(), c.end(), -1) == c.end()) fdeck.add(c, mult);
    }
    if (fdeck.total() != 2 * (k - delta + 1)) {
      throw Error(ErrorKind::Inconsistent, "recovered deck of " + show(S) + " has the wrong size");
    }
    dm.decks.emplace(S, fdeck);
    if (trace) trace->steps.push_back(SDeckStep{S, budget, std::move(table), tdeck, std::move(fdeck)});
  }
  return dm;
}

SpineFunction reconstruct_caterpillar(const Deck& deck, ReconstructionTrace* trace) {
  const int n = deck.n;
  if (n < 3) throw Error(ErrorKind::NotACaterpillarDeck, "caterpillars here have at least 3 vertices");
  if (deck.ell < 2 || deck.ell > n) throw Error(ErrorKind::BadCardSize, "card size outside [2, n]");
  if (deck.total() != binomial(n, deck.ell)) {
    throw Error(ErrorKind::NotACaterpillarDeck, "card multiplicities do not add up to C(n, ell)");
  }
  for (const auto& [code, mult] : deck.cards) {
    if (code.order() != deck.ell || mult <= 0) throw Error(ErrorKind::NotACaterpillarDeck, "malformed card");
  }
  ReconstructionContext ctx = ReconstructionContext::from_deck(deck);
  int sum = 0;
  for (int d : ctx.degree_sequence) {
    if (d < 1) throw Error(ErrorKind::NotACaterpillarDeck, "isolated vertex in degree sequence");
    sum += d;
  }
  if (sum != 2 * (n - 1) || ctx.k < 1) {
    throw Error(ErrorKind::NotACaterpillarDeck, "degree sequence is not that of a tree with a spine");
  }
  if (deck.ell >= 7 && ctx.counter.count(make_spider(3, 2)) != 0) {
    throw Error(ErrorKind::NotACaterpillarDeck, "deck contains a subdivided claw");
  }
  const DeckMap dm = reconstruct_sdecks(ctx, trace);
  const SpineFunction f(reconstruct_sequence(dm));
  if (ell_deck(phi_inverse(f), deck.ell) != deck) {
    throw Error(ErrorKind::NotACaterpillarDeck, "recovered caterpillar does not reproduce the deck");
  }
  if (trace) trace->result = f;
  return f;
}

NydlPair nydl_pair(int n) {
  if (n < 4) throw Error(ErrorKind::InvalidInput, "nydl_pair needs n >= 4");
  const int c = n / 2;  // ceil((n - 1) / 2), a central vertex of v_1..v_{n-1}
  auto build = [&](int host) {
    Graph g(n);
    for (int v = 1; v < n - 1; ++v) g.add_edge(v - 1, v);
    g.add_edge(host - 1, n - 1);
    return phi(Tree(std::move(g)));
  };
  return NydlPair{n, build(c), build(c - 1)};
}

std::vector<std::vector<SpineFunction>> oracle_partition(int n, int ell) {
  std::map<Deck, std::size_t, bool (*)(const Deck&, const Deck&)> index(
      [](const Deck& a, const Deck& b) { return a.cards < b.cards; });
  std::vector<std::vector<SpineFunction>> groups;
  for (const SpineFunction& f : enumerate_caterpillars(n)) {
    Deck d = ell_deck(phi_inverse(f), ell);
    auto [it, inserted] = index.try_emplace(std::move(d), groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(f);
  }
  return groups;
}

int minimal_distinguishing_ell(int n) {
  for (int ell = 1; ell <= n; ++ell) {
    const auto groups = oracle_partition(n, ell);
    if (std::all_of(groups.begin(), groups.end(), [](const auto& g) { return g.size() == 1; })) return ell;
  }
  return n;
}

std::int64_t deck_size_bound(int n, int k) {
  return certified_width(k) + 3LL * gamma_bound(18LL * (n - k) + 36, 3);
}

}  // namespace catrec
