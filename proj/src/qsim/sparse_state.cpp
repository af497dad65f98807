#include "qpalign/qsim/sparse_state.hpp"

#include "kernel_util.hpp"
#include "qpalign/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qpalign::qsim {

using detail::bit_of;
using detail::control_pattern;

SparseState::SparseState(std::size_t num_qubits) : QuantumState(num_qubits)
{
    if (num_qubits > kMaxQubits)
        throw ContractViolation("sparse backend limited to " + std::to_string(kMaxQubits) + " qubits");
    entries_.push_back({0, Amplitude{1.0}});
}

void SparseState::apply(const Gate &gate)
{
    gate.validate(num_qubits());
    const auto ctrl = control_pattern(gate);

    switch (gate.kind) {
    case GateKind::H:
        apply_hadamard(bit_of(gate.targets[0]));
        break;
    case GateKind::X:
    case GateKind::CX:
    case GateKind::MCX: {
        const std::uint64_t tb = bit_of(gate.targets[0]);
        for (Entry &e : entries_)
            if (ctrl.fires(e.index))
                e.index ^= tb;
        break;
    }
    case GateKind::CPhase: {
        const std::uint64_t tb = bit_of(gate.targets[0]);
        const Amplitude factor = std::polar(1.0, gate.angle);
        for (Entry &e : entries_)
            if ((e.index & tb) && ctrl.fires(e.index))
                e.amplitude *= factor;
        break;
    }
    case GateKind::Swap: {
        const std::uint64_t a = bit_of(gate.targets[0]);
        const std::uint64_t b = bit_of(gate.targets[1]);
        for (Entry &e : entries_)
            if (((e.index & a) != 0) != ((e.index & b) != 0))
                e.index ^= a | b;
        break;
    }
    }
}

void SparseState::apply_hadamard(std::uint64_t bit)
{
    const double s = std::numbers::sqrt2 / 2.0;

    // Open-addressing index over the current support, keyed by basis index.
    std::size_t capacity = 16;
    while (capacity < 2 * entries_.size())
        capacity <<= 1;
    const std::size_t mask = capacity - 1;
    slots_.assign(capacity, kEmptySlot);
    auto home = [&](std::uint64_t key) { return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ull) >> 32) & mask; };
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        std::size_t h = home(entries_[i].index);
        while (slots_[h] != kEmptySlot)
            h = (h + 1) & mask;
        slots_[h] = static_cast<std::uint32_t>(i);
    }
    auto lookup = [&](std::uint64_t key) -> const Entry * {
        for (std::size_t h = home(key); slots_[h] != kEmptySlot; h = (h + 1) & mask)
            if (entries_[slots_[h]].index == key)
                return &entries_[slots_[h]];
        return nullptr;
    };

    scratch_.clear();
    scratch_.reserve(entries_.size() * 2);
    auto keep = [&](std::uint64_t index, Amplitude a) {
        if (std::abs(a) > kPruneThreshold)
            scratch_.push_back({index, a});
    };
    for (const Entry &e : entries_) {
        const bool high = (e.index & bit) != 0;
        const Entry *partner = lookup(e.index ^ bit);
        if (high && partner != nullptr)
            continue; // handled with its low partner
        const Amplitude a0 = high ? Amplitude{} : e.amplitude;
        const Amplitude a1 = high ? e.amplitude : (partner ? partner->amplitude : Amplitude{});
        keep(e.index & ~bit, s * (a0 + a1));
        keep(e.index | bit, s * (a0 - a1));
    }
    entries_.swap(scratch_);
}

void SparseState::reset(std::uint64_t basis)
{
    check_index(basis);
    entries_.assign(1, {basis, Amplitude{1.0}});
}

Amplitude SparseState::amplitude(std::uint64_t basis) const
{
    check_index(basis);
    for (const Entry &e : entries_)
        if (e.index == basis)
            return e.amplitude;
    return {};
}

void SparseState::for_each(const std::function<void(std::uint64_t, Amplitude)> &visit) const
{
    for (const Entry &e : entries_)
        visit(e.index, e.amplitude);
}

void SparseState::project(std::uint64_t mask, std::uint64_t value, double scale)
{
    std::erase_if(entries_, [&](const Entry &e) { return (e.index & mask) != value; });
    for (Entry &e : entries_)
        e.amplitude *= scale;
}

std::unique_ptr<QuantumState> SparseState::clone() const { return std::make_unique<SparseState>(*this); }

} // namespace qpalign::qsim
