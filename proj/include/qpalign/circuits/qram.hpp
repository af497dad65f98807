#pragma once

#include "qpalign/circuits/circuit.hpp"

#include <cstdint>
#include <span>

namespace qpalign::circuits {

/**
 * Multiplexed qRAM emulation: for every address j whose word D_j is nonzero,
 * an MCX per set data bit, controlled on the address register matching j
 * (negative controls on the zero bits). Maps |j>|d> to |j>|d xor D_j>, so
 * applying it twice restores the data register. Addresses past the table
 * read as zero.
 *
 * Throws ContractViolation if the table does not fit the address register.
 */
void emit_qram_load(CircuitBuilder &b, std::span<const std::uint8_t> table, std::span<const Qubit> address,
                    std::span<const Qubit> data);

/// Layout: "addr"(address_width), "data"(2).
CircuitSpec build_qram_loader(std::span<const std::uint8_t> table, std::size_t address_width);

} // namespace qpalign::circuits
