#pragma once

#include "qpalign/alignment/scoring.hpp"
#include "qpalign/circuits/resources.hpp"
#include "qpalign/grover/driver.hpp"

#include "json.hpp"

namespace qpalign::cli::detail {

using nlohmann::ordered_json;

ordered_json params_json(const ProfitParams &p);
ordered_json resources_json(const circuits::ResourceEstimate &e);
ordered_json trace_json(const grover::SearchTrace &trace, std::size_t steps);

} // namespace qpalign::cli::detail
