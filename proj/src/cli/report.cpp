#include "report.hpp"

namespace qpalign::cli::detail {

namespace {

template <typename T> ordered_json optional_json(const std::optional<T> &v)
{
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

} // namespace

ordered_json params_json(const ProfitParams &p) { return {{"x", p.x}, {"y", p.y}, {"z", p.z}}; }

ordered_json resources_json(const circuits::ResourceEstimate &e)
{
    ordered_json j;
    j["m"] = e.m;
    j["n"] = e.n;
    j["t"] = e.t;
    j["node_count"] = e.node_count;
    j["step_qubits"] = e.step_qubits;
    j["counter_h_width"] = e.counter_h_width;
    j["counter_v_width"] = e.counter_v_width;
    j["max_profit"] = e.max_profit;
    j["profit_width"] = e.profit_width;
    j["char_mode"] = std::string(circuits::char_mode_name(e.char_mode));
    j["char_qubits"] = e.char_qubits;
    j["ancilla_qubits"] = e.ancilla_qubits;
    j["total_qubits"] = e.total_qubits;
    j["gate_count"] = optional_json(e.gate_count);
    j["depth"] = optional_json(e.depth);
    j["grover_iteration_gate_count"] = optional_json(e.grover_iteration_gate_count);
    return j;
}

ordered_json trace_json(const grover::SearchTrace &trace, std::size_t steps)
{
    ordered_json rounds = ordered_json::array();
    for (const auto &r : trace.rounds)
        rounds.push_back({{"iterations", r.iterations},
                          {"measured", TransitionString::from_step_bits(r.measured, steps).str()},
                          {"profit", r.profit},
                          {"valid", r.valid},
                          {"accepted", r.accepted},
                          {"threshold_after", r.threshold_after}});
    return {{"budget", trace.budget},
            {"total_iterations", trace.total_iterations},
            {"initial_sample", TransitionString::from_step_bits(trace.initial_sample, steps).str()},
            {"initial_threshold", trace.initial_threshold},
            {"round_count", trace.rounds.size()},
            {"rounds", std::move(rounds)}};
}

} // namespace qpalign::cli::detail
