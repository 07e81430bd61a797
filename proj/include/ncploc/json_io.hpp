#pragma once

// Wire formats.  Intervals are [a,b]; tuples spell out their support; a
// support tuple maps "a-b" interval keys to prime lists; partitions list
// canonical blocks; a lattice is an adjacency document of elements plus
// cover pairs.  Parsers validate and throw std::invalid_argument with a
// reason.

#include <string>

#include <json.hpp>

#include "ncploc/intervals.hpp"
#include "ncploc/lattice.hpp"
#include "ncploc/ncp.hpp"
#include "ncploc/supports.hpp"

namespace ncploc {

nlohmann::json to_json(Interval y);
Interval interval_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const Box& box);

nlohmann::json to_json(const PLocalTuple& t);
PLocalTuple plocal_from_json(const nlohmann::json& doc);

// "a-b", e.g. "1-2".
std::string interval_key(Interval y);
Interval interval_from_key(const std::string& key);

nlohmann::json to_json(const SupportTuple& t);
SupportTuple support_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const NoncrossingPartition& p);
NoncrossingPartition ncp_from_json(const nlohmann::json& doc);

// {"elements": [...], "covers": [[lo,hi], ...]} with element keys parsed
// back into JSON values.
nlohmann::json lattice_to_json(const FiniteLattice& l);

}  // namespace ncploc
