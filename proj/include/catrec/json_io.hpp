#pragma once

#include "json.hpp"

#include "catrec/binary.hpp"
#include "catrec/deck.hpp"
#include "catrec/graphs.hpp"
#include "catrec/pipeline.hpp"
#include "catrec/seqdeck.hpp"

namespace catrec {

using Json = nlohmann::ordered_json;

Json to_json(const Graph& g);
Json to_json(const SpineFunction& f);
Json to_json(const Deck& d);
Json to_json(const TupleMultiset& m);
Json to_json(const MomentTable& mt);
Json to_json(const DeckMap& dm);
Json to_json(const ReconstructionTrace& trace);

// All parsers throw InvalidInput on malformed documents.
Tree tree_from_json(const Json& j);
SpineFunction spine_from_json(const Json& j);
Deck deck_from_json(const Json& j);
TupleMultiset multiset_from_json(const Json& j);

}  // namespace catrec
