#pragma once

#include <json.hpp>

#include "graphlogic/coloring.hpp"
#include "graphlogic/domination.hpp"
#include "graphlogic/modification.hpp"
#include "graphlogic/recognition.hpp"

namespace graphlogic {

nlohmann::json to_json(const EdgeSet& es);
nlohmann::json to_json(const recognition::Violation& v);
nlohmann::json to_json(const modification::DeletionResult& r);
nlohmann::json to_json(const tw::DominationResult& r);
nlohmann::json to_json(const tw::ColoringResult& r);

}  // namespace graphlogic
