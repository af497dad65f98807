#include "qpalign/grover/oracle.hpp"

#include "qpalign/circuits/arithmetic.hpp"
#include "qpalign/error.hpp"

#include <numbers>

namespace qpalign::grover {

using circuits::CircuitBuilder;
using circuits::ScopedSection;
using qsim::Control;
using qsim::Qubit;

CircuitSpec build_phase_oracle(const Sequence &horizontal, const Sequence &vertical, long long threshold,
                               const circuits::ProfitCircuitOptions &opts)
{
    const auto layout = circuits::make_profit_layout(horizontal.size(), vertical.size(), opts, true);
    CircuitBuilder b(layout);
    if (threshold >= max_profit_bound(horizontal.size(), vertical.size(), opts.params))
        return std::move(b).build();

    CircuitBuilder compute(layout);
    circuits::emit_profit_computation(compute, horizontal, vertical, opts);
    const CircuitSpec forward = std::move(compute).build();

    const auto profit = layout.at("profit").qubits();
    const Qubit valid = layout.at("valid")[0];
    const Qubit flag = layout.at("flag")[0];
    const Qubit borrow = layout.at("borrow")[0];
    const Control on_valid = qsim::pos(valid);

    b.append(forward);
    {
        ScopedSection mark(b, "mark");
        circuits::emit_comparator_gt(b, profit, borrow, threshold, flag, std::span<const Control>(&on_valid, 1));
        b.phase(flag, std::numbers::pi);
        circuits::emit_comparator_gt(b, profit, borrow, threshold, flag, std::span<const Control>(&on_valid, 1));
    }
    b.append(forward.inverse());
    return std::move(b).build();
}

CircuitSpec build_diffusion(const qsim::RegisterLayout &layout, std::string_view register_name)
{
    const auto qubits = layout.at(register_name).qubits();
    CircuitBuilder b(layout);
    if (qubits.empty())
        return std::move(b).build();

    {
        ScopedSection section(b, "diffusion");
        for (Qubit q : qubits)
            b.h(q);
        for (Qubit q : qubits)
            b.x(q);
        std::vector<Control> rest;
        for (std::size_t i = 0; i + 1 < qubits.size(); ++i)
            rest.push_back(qsim::pos(qubits[i]));
        b.phase(qubits.back(), std::numbers::pi, std::move(rest));
        for (Qubit q : qubits)
            b.x(q);
        for (Qubit q : qubits)
            b.h(q);
        // Z X Z X = -I turns I - 2|s><s| into 2|s><s| - I.
        b.x(qubits.front());
        b.phase(qubits.front(), std::numbers::pi);
        b.x(qubits.front());
        b.phase(qubits.front(), std::numbers::pi);
    }
    return std::move(b).build();
}

CircuitSpec build_uniform_preparation(const qsim::RegisterLayout &layout, std::string_view register_name)
{
    CircuitBuilder b(layout);
    {
        ScopedSection section(b, "path_generation");
        for (Qubit q : layout.at(register_name).qubits())
            b.h(q);
    }
    return std::move(b).build();
}

void grover_iterate(qsim::QuantumState &state, const CircuitSpec &oracle, const CircuitSpec &diffusion,
                    std::size_t rounds)
{
    if (oracle.layout.total_qubits() != state.num_qubits() || diffusion.layout.total_qubits() != state.num_qubits())
        throw ContractViolation("oracle, diffusion and state disagree on qubit count");
    for (std::size_t r = 0; r < rounds; ++r) {
        qsim::apply_all(state, oracle.gates);
        qsim::apply_all(state, diffusion.gates);
    }
}

} // namespace qpalign::grover
