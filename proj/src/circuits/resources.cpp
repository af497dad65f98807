#include "qpalign/circuits/resources.hpp"

#include "qpalign/grover/oracle.hpp"

#include <vector>

namespace qpalign::circuits {

namespace {

ResourceEstimate size_only(std::size_t m, std::size_t n, const ProfitParams &params, CharMode mode)
{
    ProfitCircuitOptions opts;
    opts.params = params;
    opts.char_mode = mode;
    const RegisterWidths w = register_widths(m, n, opts);
    const auto layout = make_profit_layout(m, n, opts, true);

    ResourceEstimate e;
    e.m = m;
    e.n = n;
    e.t = w.steps;
    e.node_count = GridModel{m, n}.node_count();
    e.step_qubits = 2 * w.steps;
    e.counter_h_width = w.counter_h;
    e.counter_v_width = w.counter_v;
    e.max_profit = max_profit_bound(m, n, params);
    e.profit_width = w.profit;
    e.char_qubits = mode == CharMode::Reuse ? (w.steps > 0 ? 4 : 0) : 4 * w.steps;
    e.ancilla_qubits = 3;
    e.total_qubits = layout.total_qubits();
    e.char_mode = mode;
    return e;
}

} // namespace

ResourceEstimate estimate_resources(const Sequence &horizontal, const Sequence &vertical, const ProfitParams &params,
                                    CharMode mode)
{
    ResourceEstimate e = size_only(horizontal.size(), vertical.size(), params, mode);
    if (e.t > kMaxBuiltSteps)
        return e;

    ProfitCircuitOptions opts;
    opts.params = params;
    opts.char_mode = mode;
    const CircuitSpec full = build_full_profit_circuit(horizontal, vertical, opts);
    e.gate_count = full.gate_count();
    e.depth = full.depth();
    const CircuitSpec oracle = grover::build_phase_oracle(horizontal, vertical, -1, opts);
    const CircuitSpec diffusion = grover::build_diffusion(oracle.layout);
    e.grover_iteration_gate_count = oracle.gate_count() + diffusion.gate_count();
    return e;
}

ResourceEstimate estimate_resources(std::size_t m, std::size_t n, const ProfitParams &params, CharMode mode)
{
    if (m + n > kMaxBuiltSteps)
        return size_only(m, n, params, mode);
    return estimate_resources(Sequence(std::vector<Base>(m, Base::T)), Sequence(std::vector<Base>(n, Base::T)),
                              params, mode);
}

} // namespace qpalign::circuits
