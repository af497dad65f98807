#include "qpalign/qsim/gate.hpp"

#include "qpalign/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qpalign::qsim {

std::string_view kind_name(GateKind kind) noexcept
{
    switch (kind) {
    case GateKind::H:
        return "h";
    case GateKind::X:
        return "x";
    case GateKind::CX:
        return "cx";
    case GateKind::MCX:
        return "mcx";
    case GateKind::CPhase:
        return "cphase";
    case GateKind::Swap:
        return "swap";
    }
    return "?";
}

GateKind kind_from_name(std::string_view name)
{
    for (GateKind k : {GateKind::H, GateKind::X, GateKind::CX, GateKind::MCX, GateKind::CPhase, GateKind::Swap})
        if (kind_name(k) == name)
            return k;
    throw ValidationError("unknown gate kind '" + std::string(name) + "'");
}

Gate Gate::h(Qubit q) { return Gate{GateKind::H, {q}, {}, 0.0}; }

Gate Gate::x(Qubit target, std::vector<Control> controls)
{
    GateKind kind = GateKind::MCX;
    if (controls.empty())
        kind = GateKind::X;
    else if (controls.size() == 1 && controls.front().positive)
        kind = GateKind::CX;
    return Gate{kind, {target}, std::move(controls), 0.0};
}

Gate Gate::phase(Qubit target, double angle, std::vector<Control> controls)
{
    return Gate{GateKind::CPhase, {target}, std::move(controls), angle};
}

Gate Gate::swap(Qubit a, Qubit b) { return Gate{GateKind::Swap, {a, b}, {}, 0.0}; }

Gate Gate::inverse() const
{
    Gate out = *this;
    if (kind == GateKind::CPhase)
        out.angle = -angle;
    return out;
}

void Gate::validate(std::size_t total_qubits) const
{
    const std::size_t want_targets = kind == GateKind::Swap ? 2 : 1;
    if (targets.size() != want_targets)
        throw ContractViolation(std::string(kind_name(kind)) + " gate needs " + std::to_string(want_targets) +
                                " target(s)");
    switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Swap:
        if (!controls.empty())
            throw ContractViolation(std::string(kind_name(kind)) + " gate takes no controls");
        break;
    case GateKind::CX:
        if (controls.size() != 1 || !controls.front().positive)
            throw ContractViolation("cx gate needs exactly one positive control");
        break;
    case GateKind::MCX:
    case GateKind::CPhase:
        break;
    }
    if (!std::isfinite(angle))
        throw ContractViolation("gate angle must be finite");

    std::vector<Qubit> used(targets);
    for (const Control &c : controls)
        used.push_back(c.qubit);
    for (Qubit q : used)
        if (q >= total_qubits)
            throw ContractViolation("qubit index " + std::to_string(q) + " out of range (" +
                                    std::to_string(total_qubits) + " qubits)");
    std::sort(used.begin(), used.end());
    if (std::adjacent_find(used.begin(), used.end()) != used.end())
        throw ContractViolation(std::string(kind_name(kind)) + " gate references a qubit twice");
}

std::size_t Gate::span() const noexcept
{
    std::size_t hi = 0;
    for (Qubit q : targets)
        hi = std::max<std::size_t>(hi, q + 1);
    for (const Control &c : controls)
        hi = std::max<std::size_t>(hi, c.qubit + 1);
    return hi;
}

} // namespace qpalign::qsim
