#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace qpalign::qsim {

using Qubit = std::uint32_t;

/**
 * Control on a qubit. A negative control fires when the qubit is |0>.
 */
struct Control {
    Qubit qubit = 0;
    bool positive = true;

    friend bool operator==(const Control &, const Control &) = default;
};

inline Control pos(Qubit q) { return {q, true}; }
inline Control neg(Qubit q) { return {q, false}; }

enum class GateKind : std::uint8_t { H, X, CX, MCX, CPhase, Swap };

std::string_view kind_name(GateKind kind) noexcept;
/// Throws ValidationError for unknown names.
GateKind kind_from_name(std::string_view name);

/**
 * A gate record.
 *
 *  - H, X: one target, no controls.
 *  - CX: one target, exactly one positive control.
 *  - MCX: one target, any controls with per-control polarity.
 *  - CPhase: multiplies by e^{i angle} when the target is |1> and every
 *    control fires. With no controls this is the single-qubit phase gate.
 *  - Swap: two targets, no controls.
 */
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<Qubit> targets;
    std::vector<Control> controls;
    double angle = 0.0;

    static Gate h(Qubit q);
    /// Picks X, CX or MCX from the shape of `controls`.
    static Gate x(Qubit target, std::vector<Control> controls = {});
    static Gate phase(Qubit target, double angle, std::vector<Control> controls = {});
    static Gate swap(Qubit a, Qubit b);

    [[nodiscard]] Gate inverse() const;
    /// Throws ContractViolation on a malformed record or an index >= total_qubits.
    void validate(std::size_t total_qubits) const;
    /// Highest referenced qubit index + 1.
    [[nodiscard]] std::size_t span() const noexcept;

    friend bool operator==(const Gate &, const Gate &) = default;
};

} // namespace qpalign::qsim
