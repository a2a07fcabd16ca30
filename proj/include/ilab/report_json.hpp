#pragma once

#include <json.hpp>

#include "ilab/colouring.hpp"
#include "ilab/decompose.hpp"
#include "ilab/exact_search.hpp"
#include "ilab/graph.hpp"
#include "ilab/planar.hpp"
#include "ilab/randlab.hpp"

namespace ilab {

nlohmann::json to_json(const Graph& g);
// Colours shifted so the smallest is zero.
nlohmann::json to_json(const EdgeColouring& c);
nlohmann::json to_json(const EdgePartition& p);
nlohmann::json to_json(const ColouringReport& r);
nlohmann::json to_json(const ThicknessResult& r);
nlohmann::json to_json(const PeelSequence& p);
nlohmann::json to_json(const DecompositionReport& r);
nlohmann::json to_json(const ObjectiveReport& r);
nlohmann::json to_json(const ProbeReport& r);
nlohmann::json to_json(const SplitResult& r);
nlohmann::json to_json(const SparsityReport& r);
nlohmann::json to_json(const ColourBoundReport& r);

}  // namespace ilab
