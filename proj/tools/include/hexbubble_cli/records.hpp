#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hexbubble/singlebubble.hpp"
#include "hexbubble/solver.hpp"

namespace hexbubble::cli {

/// Decimal string with 12 significant digits; negative zero prints as "0".
std::string fmt12(double v);

nlohmann::json solution_record(const CaseSolution& s, double alpha);
nlohmann::json output_record(const DoubleBubbleResult& r);
nlohmann::json iso_record(double volume, const IsoperimetricOptimum& iso);

std::string text_report(const DoubleBubbleResult& r);

/// Header `alpha,case,perimeter,L1,L2` and one LF-terminated row per result.
std::string sweep_csv(const std::vector<DoubleBubbleResult>& rows);

}  // namespace hexbubble::cli
