#pragma once

#include "qpalign/circuits/circuit.hpp"

#include <cstdint>
#include <span>

namespace qpalign::circuits {

enum class AdderKind : std::uint8_t { Draper, Ripple };

/// QFT on a little-endian register: H + controlled-phase ladder, then the
/// qubit-reversal swaps, so |a> maps to sum_k e^{2 pi i a k / 2^w} |k> / 2^{w/2}.
void emit_qft(CircuitBuilder &b, std::span<const Qubit> reg);
void emit_iqft(CircuitBuilder &b, std::span<const Qubit> reg);

/**
 * Draper constant adder: |a> -> |(a + c) mod 2^w>, applied only when all
 * `controls` fire. Emits QFT, one phase rotation per qubit whose angle
 * 2 pi (c 2^j mod 2^w) / 2^w is nonzero, and IQFT. Adding 0 emits nothing.
 */
void emit_add_const(CircuitBuilder &b, std::span<const Qubit> reg, std::uint64_t c,
                    std::span<const Control> controls = {});

/// Controlled +1 via a ladder of multi-controlled X gates.
void emit_ripple_increment(CircuitBuilder &b, std::span<const Qubit> reg, std::span<const Control> controls = {});

void emit_increment(CircuitBuilder &b, std::span<const Qubit> reg, std::span<const Control> controls,
                    AdderKind kind = AdderKind::Draper);

/**
 * Flips `flag` iff value(reg) > threshold and every `extra` control fires.
 *
 * Adds 2^w - threshold - 1 to reg extended by `borrow` as its top bit, copies
 * the top bit into `flag`, then subtracts the constant again, leaving reg and
 * borrow untouched. threshold < 0 accepts every value; threshold >= 2^w - 1
 * accepts none (nothing is emitted).
 */
void emit_comparator_gt(CircuitBuilder &b, std::span<const Qubit> reg, Qubit borrow, long long threshold,
                        Qubit flag, std::span<const Control> extra = {});

// Standalone circuits over their own layouts.

/// Layout: "q"(width).
CircuitSpec build_qft(std::size_t width);
CircuitSpec build_iqft(std::size_t width);
/// Layout: "q"(width), "ctrl"(num_controls).
CircuitSpec build_add_const(std::size_t width, std::uint64_t c, std::size_t num_controls = 0);
/// Layout: "q"(width), "ctrl"(1).
CircuitSpec build_incrementer(std::size_t width, AdderKind kind = AdderKind::Draper);
/// Layout: "profit"(width), "borrow"(1), "flag"(1).
CircuitSpec build_comparator_gt(std::size_t width, long long threshold);

} // namespace qpalign::circuits
