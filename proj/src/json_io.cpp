#include "ncploc/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncploc {

using nlohmann::json;

namespace {

int int_field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name) ||
      !doc[name].is_number_integer()) {
    throw std::invalid_argument(std::string("expected integer field \"") +
                                name + "\"");
  }
  return doc[name].get<int>();
}

}  // namespace

json to_json(Interval y) { return json::array({y.a, y.b}); }

Interval interval_from_json(const json& doc) {
  if (!doc.is_array() || doc.size() != 2 || !doc[0].is_number_integer() ||
      !doc[1].is_number_integer()) {
    throw std::invalid_argument("interval must be a two-integer array [a,b]");
  }
  int a = doc[0].get<int>(), b = doc[1].get<int>();
  if (a < 1 || b < a) {
    throw std::invalid_argument("bad interval [" + std::to_string(a) + "," +
                                std::to_string(b) + "]: need 1 <= a <= b");
  }
  return Interval(a, b);
}

json to_json(const Box& box) {
  json members = json::array();
  for (auto [z, p] : box.members) {
    members.push_back(json::array({to_json(z), static_cast<int>(p)}));
  }
  return json{{"base", to_json(box.base)}, {"members", members}};
}

json to_json(const PLocalTuple& t) {
  json support = json::array();
  for (Interval y : t.support()) support.push_back(to_json(y));
  return json{{"n", t.space().points()}, {"support", support}};
}

PLocalTuple plocal_from_json(const json& doc) {
  int n = int_field(doc, "n");
  if (n < 1) throw std::invalid_argument("\"n\" must be at least 1");
  Space space(n);
  if (!doc.contains("support") || !doc["support"].is_array()) {
    throw std::invalid_argument("expected array field \"support\"");
  }
  std::uint64_t bits = 0;
  for (const json& item : doc["support"]) {
    Interval y = interval_from_json(item);
    if (y.b > n) {
      throw std::invalid_argument("support interval [" + std::to_string(y.a) +
                                  "," + std::to_string(y.b) +
                                  "] does not fit in n=" + std::to_string(n));
    }
    std::uint64_t bit = std::uint64_t{1} << interval_index(space, y);
    if (bits & bit) {
      throw std::invalid_argument("support lists interval [" +
                                  std::to_string(y.a) + "," +
                                  std::to_string(y.b) + "] twice");
    }
    bits |= bit;
  }
  return PLocalTuple(space, bits);
}

std::string interval_key(Interval y) {
  return std::to_string(y.a) + "-" + std::to_string(y.b);
}

Interval interval_from_key(const std::string& key) {
  auto dash = key.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 >= key.size()) {
    throw std::invalid_argument("bad interval key \"" + key +
                                "\": expected \"a-b\"");
  }
  int a, b;
  try {
    std::size_t used = 0;
    a = std::stoi(key.substr(0, dash), &used);
    if (used != dash) throw std::invalid_argument(key);
    b = std::stoi(key.substr(dash + 1), &used);
    if (used != key.size() - dash - 1) throw std::invalid_argument(key);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad interval key \"" + key +
                                "\": expected \"a-b\"");
  }
  if (a < 1 || b < a) {
    throw std::invalid_argument("bad interval key \"" + key +
                                "\": need 1 <= a <= b");
  }
  return Interval(a, b);
}

json to_json(const SupportTuple& t) {
  json universe = json::array();
  for (PrimeLabel p : t.universe()) universe.push_back(p.value());
  json sets = json::object();
  for (Interval y : enumerate_intervals(t.space())) {
    json primes = json::array();
    for (PrimeLabel p : t.set_of(y)) primes.push_back(p.value());
    sets[interval_key(y)] = primes;
  }
  return json{{"n", t.space().points()},
              {"universe", universe},
              {"sets", sets}};
}

SupportTuple support_from_json(const json& doc) {
  int n = int_field(doc, "n");
  if (n < 1) throw std::invalid_argument("\"n\" must be at least 1");
  Space space(n);
  if (!doc.contains("universe") || !doc["universe"].is_array()) {
    throw std::invalid_argument("expected array field \"universe\"");
  }
  std::vector<PrimeLabel> universe;
  for (const json& item : doc["universe"]) {
    if (!item.is_number_integer() ||
        !PrimeLabel::acceptable(item.get<int>())) {
      throw std::invalid_argument("universe entries must be 0 or primes");
    }
    universe.emplace_back(item.get<int>());
  }
  if (!doc.contains("sets") || !doc["sets"].is_object()) {
    throw std::invalid_argument("expected object field \"sets\"");
  }
  std::vector<std::uint64_t> slices(universe.size(), 0);
  // Missing interval keys mean empty sets; unknown keys are rejected.
  for (const auto& [key, value] : doc["sets"].items()) {
    Interval y = interval_from_key(key);
    if (y.b > n) {
      throw std::invalid_argument("interval key \"" + key +
                                  "\" does not fit in n=" + std::to_string(n));
    }
    if (!value.is_array()) {
      throw std::invalid_argument("sets[\"" + key + "\"] must be an array");
    }
    std::size_t idx = interval_index(space, y);
    for (const json& pv : value) {
      if (!pv.is_number_integer()) {
        throw std::invalid_argument("sets[\"" + key +
                                    "\"] entries must be integers");
      }
      auto it = std::find_if(universe.begin(), universe.end(),
                             [&](PrimeLabel p) {
                               return p.value() == pv.get<int>();
                             });
      if (it == universe.end()) {
        throw std::invalid_argument("sets[\"" + key + "\"] mentions " +
                                    pv.dump() + ", not in the universe");
      }
      slices[static_cast<std::size_t>(it - universe.begin())] |=
          std::uint64_t{1} << idx;
    }
  }
  return SupportTuple(space, std::move(universe), std::move(slices));
}

json to_json(const NoncrossingPartition& p) {
  json blocks = json::array();
  for (const auto& block : p.blocks()) blocks.push_back(block);
  return json{{"k", p.k()}, {"blocks", blocks}};
}

NoncrossingPartition ncp_from_json(const json& doc) {
  int k = int_field(doc, "k");
  if (!doc.contains("blocks") || !doc["blocks"].is_array()) {
    throw std::invalid_argument("expected array field \"blocks\"");
  }
  std::vector<std::vector<int>> blocks;
  for (const json& item : doc["blocks"]) {
    if (!item.is_array()) {
      throw std::invalid_argument("each block must be an array of integers");
    }
    std::vector<int> block;
    for (const json& x : item) {
      if (!x.is_number_integer()) {
        throw std::invalid_argument("each block must be an array of integers");
      }
      block.push_back(x.get<int>());
    }
    blocks.push_back(std::move(block));
  }
  return NoncrossingPartition::from_blocks(k, std::move(blocks));
}

json lattice_to_json(const FiniteLattice& l) {
  json elements = json::array();
  for (const std::string& key : l.keys()) {
    json parsed = json::parse(key, nullptr, false);
    if (parsed.is_discarded()) {
      elements.push_back(key);  // key was not itself a JSON document
    } else {
      elements.push_back(std::move(parsed));
    }
  }
  json covers = json::array();
  for (auto [lo, hi] : l.hasse_edges()) {
    covers.push_back(json::array({lo, hi}));
  }
  return json{{"elements", elements}, {"covers", covers}};
}

}  // namespace ncploc
