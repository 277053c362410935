#pragma once

#include <string>

#include <json.hpp>

#include "twotree/big_count.hpp"
#include "twotree/extremal.hpp"
#include "twotree/graph.hpp"

namespace twotree {

// JSON views of library results. Counts are always decimal strings.

nlohmann::json count_json(std::size_t n, const std::string& family, const BigCount& count);

nlohmann::json edge_json(const Edge& e);
nlohmann::json edges_json(std::span<const Edge> edges);

nlohmann::json to_json(const ExtremalSummary& summary);
nlohmann::json to_json(const SplitReport& report);
nlohmann::json to_json(const SurgeryReport& report);

}  // namespace twotree
