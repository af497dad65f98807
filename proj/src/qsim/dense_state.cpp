#include "qpalign/qsim/dense_state.hpp"

#include "kernel_util.hpp"
#include "qpalign/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qpalign::qsim {

using detail::bit_of;
using detail::control_pattern;

namespace {

/**
 * Calls f(i) for every index below 2^n whose `fixed` bits equal `value`,
 * stepping through the free bits with a masked increment.
 */
template <typename F> inline void for_each_fixed(std::size_t n, std::uint64_t fixed, std::uint64_t value, F &&f)
{
    const std::uint64_t blocked = fixed | ~((n >= 64 ? 0 : (std::uint64_t{1} << n)) - 1);
    std::uint64_t free = 0;
    do {
        f(free | value);
        free = ((free | blocked) + 1) & ~blocked;
    } while (free != 0);
}

} // namespace

DenseState::DenseState(std::size_t num_qubits) : QuantumState(num_qubits)
{
    if (num_qubits > kMaxQubits)
        throw ContractViolation("dense backend limited to " + std::to_string(kMaxQubits) + " qubits, requested " +
                                std::to_string(num_qubits));
    amps_.assign(std::size_t{1} << num_qubits, Amplitude{});
    amps_[0] = 1.0;
}

void DenseState::apply(const Gate &gate)
{
    gate.validate(num_qubits());
    const auto ctrl = control_pattern(gate);
    const std::size_t n = num_qubits();

    switch (gate.kind) {
    case GateKind::H: {
        const std::uint64_t tb = bit_of(gate.targets[0]);
        const double s = std::numbers::sqrt2 / 2.0;
        for_each_fixed(n, tb, 0, [&](std::uint64_t i0) {
            const Amplitude a0 = amps_[i0];
            const Amplitude a1 = amps_[i0 | tb];
            amps_[i0] = s * (a0 + a1);
            amps_[i0 | tb] = s * (a0 - a1);
        });
        break;
    }
    case GateKind::X:
    case GateKind::CX:
    case GateKind::MCX: {
        const std::uint64_t tb = bit_of(gate.targets[0]);
        for_each_fixed(n, ctrl.mask | tb, ctrl.value, [&](std::uint64_t i0) { std::swap(amps_[i0], amps_[i0 | tb]); });
        break;
    }
    case GateKind::CPhase: {
        const std::uint64_t tb = bit_of(gate.targets[0]);
        const Amplitude factor = std::polar(1.0, gate.angle);
        for_each_fixed(n, ctrl.mask | tb, ctrl.value | tb, [&](std::uint64_t i1) { amps_[i1] *= factor; });
        break;
    }
    case GateKind::Swap: {
        const std::uint64_t a = bit_of(gate.targets[0]);
        const std::uint64_t b = bit_of(gate.targets[1]);
        for_each_fixed(n, a | b, a, [&](std::uint64_t i) { std::swap(amps_[i], amps_[i ^ a ^ b]); });
        break;
    }
    }
}

void DenseState::reset(std::uint64_t basis)
{
    check_index(basis);
    std::fill(amps_.begin(), amps_.end(), Amplitude{});
    amps_[basis] = 1.0;
}

Amplitude DenseState::amplitude(std::uint64_t basis) const
{
    check_index(basis);
    return amps_[basis];
}

void DenseState::for_each(const std::function<void(std::uint64_t, Amplitude)> &visit) const
{
    for (std::uint64_t i = 0; i < amps_.size(); ++i)
        visit(i, amps_[i]);
}

void DenseState::project(std::uint64_t mask, std::uint64_t value, double scale)
{
    for (std::uint64_t i = 0; i < amps_.size(); ++i)
        amps_[i] = (i & mask) == value ? amps_[i] * scale : Amplitude{};
}

std::unique_ptr<QuantumState> DenseState::clone() const { return std::make_unique<DenseState>(*this); }

} // namespace qpalign::qsim
