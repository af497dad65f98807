#pragma once

#include "qpalign/circuits/circuit.hpp"

#include <string>
#include <string_view>

namespace qpalign::circuits {

enum class ExportFormat : std::uint8_t { PortableQasm, Json };

/// Accepts "portable-qasm" and "json". Throws ValidationError.
ExportFormat export_format_from_name(std::string_view name);
std::string_view export_format_name(ExportFormat f) noexcept;

/**
 * Serializes a circuit.
 *
 * Json mirrors CircuitSpec (see docs/circuit-schema.md). PortableQasm is
 * OpenQASM 3 with one `qubit[w] name;` declaration per non-empty register,
 * one gate per line, `ctrl`/`negctrl` modifiers for multi-controlled gates,
 * explicit angles printed to 17 significant digits, and sections as
 * `// begin` / `// end` comments.
 */
std::string export_circuit(const CircuitSpec &spec, ExportFormat format);

/// Parses either format back. Qasm import keeps layout and gates only.
/// Throws ValidationError on malformed input.
CircuitSpec import_circuit(std::string_view text, ExportFormat format);

} // namespace qpalign::circuits
