#pragma once

#include "qpalign/alignment/scoring.hpp"
#include "qpalign/alignment/sequence.hpp"
#include "qpalign/alignment/transition.hpp"
#include "qpalign/circuits/arithmetic.hpp"
#include "qpalign/circuits/circuit.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace qpalign::circuits {

/**
 * Where loaded characters live. Reuse keeps one char_h/char_v pair and
 * unloads it after every step; PerStep gives each step its own pair and
 * leaves it loaded.
 */
enum class CharMode : std::uint8_t { Reuse, PerStep };

std::string_view char_mode_name(CharMode mode) noexcept;
/// Accepts "reuse" and "per-step". Throws ValidationError.
CharMode char_mode_from_name(std::string_view name);

struct ProfitCircuitOptions {
    CharMode char_mode = CharMode::Reuse;
    ProfitParams params;
    AdderKind counter_adder = AdderKind::Draper;
    /// Number of steps; defaults to m + n.
    std::optional<std::size_t> steps;
    /// Overrides the computed profit width; must be large enough.
    std::optional<std::size_t> profit_width;
};

struct RegisterWidths {
    std::size_t steps = 0;
    std::size_t counter_h = 0;
    std::size_t counter_v = 0;
    std::size_t profit = 0;
};

/// Bits needed to hold 0..value.
std::size_t bits_for(std::uint64_t value) noexcept;

/**
 * Register widths for an m x n instance. Counters hold 0..t so a walk can
 * never wrap; profit holds 0..max_profit_bound. Throws ValidationError
 * when an explicit profit width is too small.
 */
RegisterWidths register_widths(std::size_t m, std::size_t n, const ProfitCircuitOptions &opts = {});

/**
 * Registers, in qubit order: step(2t), counter_h, counter_v, profit, the
 * character registers (char_h, char_v or char_h_i, char_v_i per step),
 * valid(1) and, when `oracle_ancillas`, flag(1) and borrow(1).
 */
RegisterLayout make_profit_layout(std::size_t m, std::size_t n, const ProfitCircuitOptions &opts = {},
                                  bool oracle_ancillas = false);

/// Horizontal-bit and vertical-bit qubits of step i.
struct StepQubits {
    Qubit horizontal;
    Qubit vertical;
};
StepQubits step_qubits(const RegisterLayout &layout, std::size_t step_index);

/**
 * XORs char_h into char_v, runs `on_match` with the controls that fire when
 * the characters are equal (both XOR bits zero), then restores char_v.
 */
template <typename OnMatch>
void emit_char_match(CircuitBuilder &b, std::span<const Qubit> char_h, std::span<const Qubit> char_v,
                     OnMatch &&on_match)
{
    ScopedSection section(b, "char_match");
    for (std::size_t k = 0; k < char_v.size(); ++k)
        b.x(char_v[k], {pos(char_h[k])});
    std::vector<Control> match;
    for (Qubit q : char_v)
        match.push_back(neg(q));
    on_match(std::span<const Control>(match));
    for (std::size_t k = 0; k < char_v.size(); ++k)
        b.x(char_v[k], {pos(char_h[k])});
}

/// Layout: "char_h"(2), "char_v"(2), "match"(1); flips match when the characters agree.
CircuitSpec build_char_match();

/**
 * One step: H on the step pair (when `hadamards`), controlled counter
 * increments, indel profit, character loads addressed by the counters, the
 * diagonal match bonus, and (reuse mode) the unload. `layout` must come from
 * make_profit_layout for the same instance.
 */
void emit_step(CircuitBuilder &b, std::size_t step_index, const Sequence &horizontal, const Sequence &vertical,
               const ProfitCircuitOptions &opts, bool hadamards = true);

CircuitSpec build_step_circuit(std::size_t step_index, const Sequence &horizontal, const Sequence &vertical,
                               const ProfitCircuitOptions &opts = {});

/// Sets valid iff counter_h == m and counter_v == n.
void emit_validity(CircuitBuilder &b, std::size_t m, std::size_t n);

/**
 * Every step followed by the validity check, without the Hadamards: the
 * classical reversible map |s>|0> -> |s>|counters, profit, chars, valid>.
 */
void emit_profit_computation(CircuitBuilder &b, const Sequence &horizontal, const Sequence &vertical,
                             const ProfitCircuitOptions &opts);

/// Path generation and profit accumulation over all 4^t step branches.
CircuitSpec build_full_profit_circuit(const Sequence &horizontal, const Sequence &vertical,
                                      const ProfitCircuitOptions &opts = {});

/// Classical register contents of one step-basis branch.
struct BranchRegisters {
    std::uint64_t counter_h = 0;
    std::uint64_t counter_v = 0;
    std::uint64_t profit = 0;
    bool valid = false;

    friend bool operator==(const BranchRegisters &, const BranchRegisters &) = default;
};

/**
 * Register values a branch must carry after the full profit circuit,
 * computed by plain arithmetic: counters are total displacements, a step
 * past the end of a sequence reads the zero code, and profit is taken
 * modulo 2^profit_width.
 */
BranchRegisters expected_branch_registers(const TransitionString &path, const Sequence &horizontal,
                                          const Sequence &vertical, const ProfitParams &params,
                                          const RegisterWidths &widths);

BranchRegisters read_branch_registers(std::uint64_t basis, const RegisterLayout &layout);

} // namespace qpalign::circuits
