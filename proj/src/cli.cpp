#include "catrec/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "catrec/binary.hpp"
#include "catrec/error.hpp"
#include "catrec/json_io.hpp"
#include "catrec/momentsolve.hpp"
#include "catrec/parallel.hpp"
#include "catrec/pipeline.hpp"

namespace catrec {
namespace {

struct Options {
  int n = 0;
  int ell = 0;
  int check_ell = 0;
  std::string graph;
  std::string deck;
  std::string suite;
  bool trace = false;
  bool pretty = false;
  int jobs = 1;
  std::uint64_t seed = 20240601;
  int count = 0;
};

Json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

// A tree document, or a spine function document {"values": [...]}.
Tree graph_from_json(const Json& j) {
  if (j.is_object() && j.contains("values") && !j.contains("edges")) return phi_inverse(spine_from_json(j));
  return tree_from_json(j);
}

Json cmd_enumerate(const Options& o) {
  Json list = Json::array();
  for (const auto& f : enumerate_caterpillars(o.n)) list.push_back(to_json(f));
  return Json{{"n", o.n}, {"count", list.size()}, {"caterpillars", list}};
}

Json cmd_deck(const Options& o) { return to_json(ell_deck(graph_from_json(read_json_file(o.graph)), o.ell)); }

Json cmd_reconstruct(const Options& o) {
  const Deck deck = deck_from_json(read_json_file(o.deck));
  ReconstructionTrace trace;
  const SpineFunction f = reconstruct_caterpillar(deck, o.trace ? &trace : nullptr);
  Json out = to_json(f);
  if (o.trace) out["trace"] = to_json(trace);
  return out;
}

Json cmd_nydl(const Options& o) {
  const NydlPair p = nydl_pair(o.n);
  Json out{{"n", p.n}, {"g1", to_json(p.g1)}, {"g2", to_json(p.g2)}};
  if (o.check_ell > 0) {
    out["ell"] = o.check_ell;
    out["deck_equal"] = ell_deck(phi_inverse(p.g1), o.check_ell) == ell_deck(phi_inverse(p.g2), o.check_ell);
  }
  return out;
}

Json cmd_oracle(const Options& o) {
  const auto groups = oracle_partition(o.n, o.ell);
  Json shared = Json::array();
  std::size_t total = 0;
  for (const auto& g : groups) {
    total += g.size();
    if (g.size() < 2) continue;
    Json members = Json::array();
    for (const auto& f : g) members.push_back(to_json(f));
    shared.push_back(members);
  }
  return Json{{"n", o.n},
              {"ell", o.ell},
              {"caterpillars", total},
              {"groups", groups.size()},
              {"all_singletons", shared.empty()},
              {"minimal_ell", minimal_distinguishing_ell(o.n)},
              {"shared_decks", shared}};
}

SignedTupleFunction random_function(std::mt19937_64& rng, int s, int max_entry, int max_value) {
  SignedTupleFunction a(s);
  std::uniform_int_distribution<int> size(1, 6), entry(0, max_entry), value(-max_value, max_value);
  const int support = size(rng);
  for (int t = 0; t < support; ++t) {
    Tuple x(s);
    for (int& v : x) v = entry(rng);
    a.add(x, value(rng));
  }
  return a;
}

TupleMultiset random_multiset(std::mt19937_64& rng, int s, int max_mass) {
  TupleMultiset m(s);
  std::uniform_int_distribution<int> mass_dist(0, max_mass), coin(0, 3);
  int left = mass_dist(rng);
  do {
    Tuple c(s, 0);
    int budget = coin(rng) == 0 ? 0 : std::uniform_int_distribution<int>(0, left)(rng);
    while (budget-- > 0) ++c[std::uniform_int_distribution<int>(0, s - 1)(rng)];
    for (int v : c) left -= v;
    m.add(c);
  } while (left > 0 && coin(rng) != 0);
  return m;
}

Json cmd_verify(const Options& o) {
  std::mt19937_64 rng(o.seed);
  std::size_t passed = 0, failed = 0;
  Json failures = Json::array();
  auto record = [&](bool ok, Json what) {
    ok ? ++passed : ++failed;
    if (!ok && failures.size() < 20) failures.push_back(std::move(what));
  };
  if (o.suite == "appendix") {
    const int primes[] = {2, 3, 5, 7, 11, 13};
    const int count = o.count > 0 ? o.count : 1000;
    for (int t = 0; t < count; ++t) {
      const int s = std::uniform_int_distribution<int>(1, 3)(rng);
      const auto a = random_function(rng, s, 30, 20);
      const int p = primes[std::uniform_int_distribution<int>(0, 5)(rng)];
      Tuple j(s);
      for (int& v : j) v = std::uniform_int_distribution<int>(0, p - 1)(rng);
      record(verify_appendix_identity(a, p, j), Json{{"p", p}, {"j", j}});
    }
  } else if (o.suite == "moments") {
    const int count = o.count > 0 ? o.count : 200;
    for (int t = 0; t < count; ++t) {
      const int s = std::uniform_int_distribution<int>(1, 3)(rng);
      const TupleMultiset m = random_multiset(rng, s, 40);
      bool ok = false;
      try {
        ok = invert_moments(moments(m, gamma_bound(40, s)), MassBounds::make(40, s)) == m;
      } catch (const Error&) {
      }
      record(ok, to_json(m));
    }
  } else if (o.suite == "binary") {
    const int kmax = o.n > 0 ? o.n : 12;
    for (int k = 1; k <= kmax; ++k) {
      std::vector<char> ok(std::size_t{1} << k, 0);
      parallel_for(ok.size(), o.jobs, [&](std::size_t mask) {
        Tuple x(k);
        for (int i = 0; i < k; ++i) x[i] = (mask >> i) & 1;
        try {
          ok[mask] = equivalent(reconstruct_binary(script_deck(x, 3, certified_width(k))), x);
        } catch (const Error&) {
        }
      });
      for (std::size_t mask = 0; mask < ok.size(); ++mask) record(ok[mask], Json{{"k", k}, {"mask", mask}});
    }
  } else if (o.suite == "pipeline") {
    const int nmax = o.n > 0 ? o.n : 9;
    for (int n = 3; n <= nmax; ++n) {
      const auto cats = enumerate_caterpillars(n);
      std::vector<char> ok(cats.size(), 0);
      parallel_for(cats.size(), o.jobs, [&](std::size_t i) {
        try {
          ok[i] = reconstruct_caterpillar(ell_deck(phi_inverse(cats[i]), n)) == cats[i];
        } catch (const Error&) {
        }
      });
      for (std::size_t i = 0; i < cats.size(); ++i) record(ok[i], to_json(cats[i]));
    }
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown suite " + o.suite);
  }
  return Json{{"suite", o.suite}, {"seed", o.seed}, {"passed", passed}, {"failed", failed}, {"ok", failed == 0},
              {"failures", failures}};
}

void emit(std::ostream& out, const Json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << "\n"; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out) {
  Options o;
  CLI::App app{"Caterpillar reconstruction from induced-subgraph decks"};
  app.require_subcommand(1);
  app.add_flag("--pretty", o.pretty, "Indent JSON output");
  app.add_option("--jobs", o.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  auto* enumerate = app.add_subcommand("enumerate", "List caterpillars on n vertices");
  enumerate->add_option("--n", o.n)->required()->check(CLI::Range(3, 64));

  auto* deck = app.add_subcommand("deck", "Compute the ell-deck of a tree");
  deck->add_option("--graph", o.graph, "Tree JSON file, or spine function JSON; '-' for stdin")->required();
  deck->add_option("--ell", o.ell)->required()->check(CLI::PositiveNumber);

  auto* reconstruct = app.add_subcommand("reconstruct", "Recover a caterpillar from its deck");
  reconstruct->add_option("--deck", o.deck, "Deck JSON file; '-' for stdin")->required();
  reconstruct->add_flag("--trace", o.trace, "Include intermediate results");

  auto* nydl = app.add_subcommand("nydl", "Pair of caterpillars sharing the floor(n/2)-deck");
  nydl->add_option("--n", o.n)->required()->check(CLI::Range(4, 64));
  nydl->add_option("--check-ell", o.check_ell, "Compare the two decks at this card size")->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "Group caterpillars by equal ell-deck");
  oracle->add_option("--n", o.n)->required()->check(CLI::Range(3, 14));
  oracle->add_option("--ell", o.ell)->required()->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run a self-check suite");
  verify->add_option("--suite", o.suite)->required()->check(CLI::IsMember({"appendix", "moments", "binary", "pipeline"}));
  verify->add_option("--count", o.count, "Random cases for appendix/moments");
  verify->add_option("--n", o.n, "Largest k (binary) or n (pipeline)");

  for (auto* sub : {enumerate, deck, reconstruct, nydl, oracle, verify}) {
    sub->add_flag("--pretty", o.pretty, "Indent JSON output");
    sub->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", o.seed, "Random seed");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit(out, Json{{"error", "UsageError"}, {"message", e.what()}}, o.pretty);
    return 2;
  }

  try {
    Json result;
    if (*enumerate) result = cmd_enumerate(o);
    if (*deck) result = cmd_deck(o);
    if (*reconstruct) result = cmd_reconstruct(o);
    if (*nydl) result = cmd_nydl(o);
    if (*oracle) result = cmd_oracle(o);
    if (*verify) result = cmd_verify(o);
    emit(out, result, o.pretty);
    if (*verify && !result.at("ok").get<bool>()) return 1;
    return 0;
  } catch (const Error& e) {
    emit(out, Json{{"error", to_string(e.kind())}, {"message", e.what()}}, o.pretty);
    return 1;
  }
}

}  // namespace catrec
