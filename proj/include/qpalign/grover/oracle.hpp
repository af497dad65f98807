#pragma once

#include "qpalign/alignment/sequence.hpp"
#include "qpalign/circuits/circuit.hpp"
#include "qpalign/circuits/profit_circuit.hpp"
#include "qpalign/qsim/state.hpp"

#include <cstddef>
#include <string_view>

namespace qpalign::grover {

using circuits::CircuitSpec;

/**
 * Phase oracle over the step register: computes the profit registers,
 * flips the phase of every branch with profit > threshold and valid = 1,
 * and uncomputes everything so all ancillas return to |0>.
 *
 * threshold < 0 marks every valid branch. A threshold at or above the
 * instance's profit bound marks nothing and yields an empty gate list.
 * The layout is make_profit_layout(..., oracle_ancillas = true).
 */
CircuitSpec build_phase_oracle(const Sequence &horizontal, const Sequence &vertical, long long threshold,
                               const circuits::ProfitCircuitOptions &opts = {});

/// Inversion about the mean, 2|s><s| - I, on `register_name`. Exact, including the global sign.
CircuitSpec build_diffusion(const qsim::RegisterLayout &layout, std::string_view register_name = "step");

/// Hadamards on every qubit of `register_name`.
CircuitSpec build_uniform_preparation(const qsim::RegisterLayout &layout, std::string_view register_name = "step");

/// Applies (oracle, then diffusion) `rounds` times.
void grover_iterate(qsim::QuantumState &state, const CircuitSpec &oracle, const CircuitSpec &diffusion,
                    std::size_t rounds);

} // namespace qpalign::grover
