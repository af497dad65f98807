#pragma once

#include "qpalign/alignment/scoring.hpp"
#include "qpalign/alignment/sequence.hpp"
#include "qpalign/circuits/profit_circuit.hpp"

#include <cstddef>
#include <optional>

namespace qpalign::circuits {

/// Largest m + n for which estimate_resources materializes the circuits to count gates.
inline constexpr std::size_t kMaxBuiltSteps = 64;

struct ResourceEstimate {
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t t = 0;
    std::size_t node_count = 0;
    std::size_t step_qubits = 0;
    std::size_t counter_h_width = 0;
    std::size_t counter_v_width = 0;
    long long max_profit = 0;
    std::size_t profit_width = 0;
    std::size_t char_qubits = 0;
    /// valid, flag and the comparator's borrow qubit.
    std::size_t ancilla_qubits = 0;
    std::size_t total_qubits = 0;
    CharMode char_mode = CharMode::Reuse;
    /// Full profit circuit; empty when t exceeds kMaxBuiltSteps.
    std::optional<std::size_t> gate_count;
    std::optional<std::size_t> depth;
    /// One oracle call plus one diffusion.
    std::optional<std::size_t> grover_iteration_gate_count;
};

/// Sizes an instance from its lengths; gate counts use all-T sequences, the
/// densest qRAM tables.
ResourceEstimate estimate_resources(std::size_t m, std::size_t n, const ProfitParams &params = {},
                                    CharMode mode = CharMode::Reuse);

/// Sizes a concrete instance.
ResourceEstimate estimate_resources(const Sequence &horizontal, const Sequence &vertical,
                                    const ProfitParams &params = {}, CharMode mode = CharMode::Reuse);

} // namespace qpalign::circuits
