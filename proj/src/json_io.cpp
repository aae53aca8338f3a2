#include "catrec/json_io.hpp"

#include <string>

#include "catrec/error.hpp"

namespace catrec {
namespace {

Json tuple_json(const Tuple& t) { return Json(t); }

Json set_json(const IndexSet& S) { return Json(S.elements()); }

template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.order()}, {"edges", edges}};
}

Json to_json(const SpineFunction& f) { return Json{{"k", f.k()}, {"values", f.values()}}; }

Json to_json(const Deck& d) {
  Json cards = Json::array();
  for (const auto& [code, mult] : d.cards) cards.push_back(Json{{"code", code.code}, {"mult", to_decimal(mult)}});
  return Json{{"n", d.n}, {"ell", d.ell}, {"cards", cards}};
}

Json to_json(const TupleMultiset& m) {
  Json entries = Json::array();
  for (const auto& [t, mult] : m.entries) entries.push_back(Json{{"tuple", tuple_json(t)}, {"mult", to_decimal(mult)}});
  return Json{{"s", m.s}, {"entries", entries}};
}

Json to_json(const MomentTable& mt) {
  Json values = Json::array();
  mt.for_each([&](const Tuple& g, const BigInt& v) { values.push_back(Json{{"g", tuple_json(g)}, {"value", to_decimal(v)}}); });
  return Json{{"s", mt.s()}, {"ell", mt.ell()}, {"moments", values}};
}

Json to_json(const DeckMap& dm) {
  Json decks = Json::array();
  for (const auto& [S, deck] : dm.decks) decks.push_back(Json{{"S", set_json(S)}, {"deck", to_json(deck)}});
  return Json{{"k", dm.k}, {"s", dm.s}, {"ell", dm.ell}, {"decks", decks}};
}

Json to_json(const ReconstructionTrace& trace) {
  Json steps = Json::array();
  for (const SDeckStep& step : trace.steps) {
    steps.push_back(Json{{"S", set_json(step.S)},
                         {"budget", step.budget},
                         {"moments", to_json(step.moments)},
                         {"t_deck", to_json(step.t_deck)},
                         {"f_deck", to_json(step.f_deck)}});
  }
  Json out{{"n", trace.n},
           {"ell", trace.ell},
           {"k", trace.k},
           {"width", trace.width},
           {"degree_sequence", trace.degree_sequence},
           {"steps", steps}};
  if (trace.result) out["result"] = to_json(*trace.result);
  return out;
}

Tree tree_from_json(const Json& j) {
  return guarded([&] {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::InvalidInput, "edge must be a pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Tree(n, edges);
  });
}

SpineFunction spine_from_json(const Json& j) {
  return guarded([&] {
    auto values = j.at("values").get<std::vector<int>>();
    if (j.contains("k") && j.at("k").get<int>() != static_cast<int>(values.size())) {
      throw Error(ErrorKind::InvalidInput, "k does not match the number of values");
    }
    return SpineFunction(std::move(values));
  });
}

Deck deck_from_json(const Json& j) {
  return guarded([&] {
    Deck d{j.at("n").get<int>(), j.at("ell").get<int>(), {}};
    for (const auto& card : j.at("cards")) {
      ForestCode code{card.at("code").get<std::string>()};
      const auto& m = card.at("mult");
      const BigInt mult = m.is_string() ? parse_decimal(m.get<std::string>()) : BigInt(m.get<std::int64_t>());
      if (mult <= 0) throw Error(ErrorKind::InvalidInput, "card multiplicity must be positive");
      const Graph g = code.decode();  // validates the code
      if (canonical_forest_code(g) != code) throw Error(ErrorKind::InvalidInput, "card code is not canonical");
      d.cards[code] += mult;
    }
    return d;
  });
}

TupleMultiset multiset_from_json(const Json& j) {
  return guarded([&] {
    TupleMultiset m(j.at("s").get<int>());
    for (const auto& e : j.at("entries")) {
      const auto& v = e.at("mult");
      m.add(e.at("tuple").get<Tuple>(), v.is_string() ? parse_decimal(v.get<std::string>()) : BigInt(v.get<std::int64_t>()));
    }
    return m;
  });
}

}  // namespace catrec
