// JSON views of the library's result types. nlohmann::json keeps object keys
// sorted, so identical inputs serialize to identical bytes.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "wgc/codegen.hpp"
#include "wgc/distance.hpp"
#include "wgc/verify.hpp"

namespace wgc {

nlohmann::json system_to_json(const WhitemanSystem& sys, bool include_classes = false);

nlohmann::json classification_to_json(const ClassificationReport& rep);

// Needs the system for g and x, which the code record itself does not carry.
nlohmann::json code_to_json(const WhitemanSystem& sys, const CyclicCode& code);

nlohmann::json distance_to_json(const DistanceResult& res);

nlohmann::json cross_check_to_json(const WhitemanSystem& sys, const DiscrepancyReport& rep);

nlohmann::json checks_to_json(const std::vector<CheckResult>& checks);

// Flat "dotted.path = value" rendering for human output.
std::string render_table(const nlohmann::json& j);

}  // namespace wgc
