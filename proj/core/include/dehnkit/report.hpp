#pragma once

// JSON reports. Keys keep insertion order so equal runs give identical
// bytes; rationals are written as "p/q" strings.

#include <string>

#include <json.hpp>

#include "dehnkit/shelah.hpp"

namespace dehnkit {

using Json = nlohmann::ordered_json;

const char* version() noexcept;

Json to_json(const FactorSystem& sys);
Json to_json(const FactorSystem& sys, const AmalgamWord& w);
Json to_json(const SymmetrizedSet& R, const PieceReport& report);
Json to_json(const SymmetrizedSet& R, const CPrimeResult& result);
Json to_json(const FactorSystem& sys, const DehnVerdict& verdict);
Json to_json(const ConditionReport& report);
Json to_json(const FactorSystem& sys, const TopologyBase& base);

// {schema: 1, version, command, config, result}.
Json envelope(const std::string& command, Json config, Json result);

}  // namespace dehnkit
