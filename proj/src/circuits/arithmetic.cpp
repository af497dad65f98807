#include "qpalign/circuits/arithmetic.hpp"

#include "qpalign/error.hpp"

#include <numbers>
#include <vector>

namespace qpalign::circuits {

namespace {

std::vector<Control> with(std::span<const Control> base, std::initializer_list<Control> more)
{
    std::vector<Control> out(base.begin(), base.end());
    out.insert(out.end(), more);
    return out;
}

std::uint64_t low_mask(std::size_t width) noexcept
{
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

} // namespace

void emit_qft(CircuitBuilder &b, std::span<const Qubit> reg)
{
    const std::size_t w = reg.size();
    ScopedSection section(b, "qft");
    for (std::size_t j = w; j-- > 0;) {
        b.h(reg[j]);
        for (std::size_t k = j; k-- > 0;)
            b.phase(reg[j], std::numbers::pi / static_cast<double>(std::uint64_t{1} << (j - k)), {pos(reg[k])});
    }
    for (std::size_t i = 0; i < w / 2; ++i)
        b.swap(reg[i], reg[w - 1 - i]);
}

void emit_iqft(CircuitBuilder &b, std::span<const Qubit> reg)
{
    CircuitBuilder forward(b.layout());
    emit_qft(forward, reg);
    CircuitSpec inv = std::move(forward).build().inverse();
    ScopedSection section(b, "iqft");
    for (Gate &g : inv.gates)
        b.add(std::move(g));
}

void emit_add_const(CircuitBuilder &b, std::span<const Qubit> reg, std::uint64_t c, std::span<const Control> controls)
{
    const std::size_t w = reg.size();
    if (w == 0)
        return;
    const std::uint64_t mask = low_mask(w);
    c &= mask;
    if (c == 0)
        return;

    ScopedSection section(b, "add_const");
    emit_qft(b, reg);
    {
        ScopedSection rotations(b, "phase_add");
        const double modulus = static_cast<double>(mask) + 1.0;
        for (std::size_t j = 0; j < w; ++j) {
            const std::uint64_t turns = (j >= 64 ? 0 : (c << j)) & mask;
            if (turns == 0)
                continue;
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(turns) / modulus;
            b.phase(reg[j], angle, std::vector<Control>(controls.begin(), controls.end()));
        }
    }
    emit_iqft(b, reg);
}

void emit_ripple_increment(CircuitBuilder &b, std::span<const Qubit> reg, std::span<const Control> controls)
{
    ScopedSection section(b, "ripple_increment");
    for (std::size_t j = reg.size(); j-- > 0;) {
        std::vector<Control> cs(controls.begin(), controls.end());
        for (std::size_t k = 0; k < j; ++k)
            cs.push_back(pos(reg[k]));
        b.x(reg[j], std::move(cs));
    }
}

void emit_increment(CircuitBuilder &b, std::span<const Qubit> reg, std::span<const Control> controls,
                    AdderKind kind)
{
    if (kind == AdderKind::Ripple)
        emit_ripple_increment(b, reg, controls);
    else
        emit_add_const(b, reg, 1, controls);
}

void emit_comparator_gt(CircuitBuilder &b, std::span<const Qubit> reg, Qubit borrow, long long threshold,
                        Qubit flag, std::span<const Control> extra)
{
    const std::size_t w = reg.size();
    if (w >= 62)
        throw ContractViolation("comparator register too wide");
    const long long top = static_cast<long long>(low_mask(w));
    ScopedSection section(b, "comparator_gt");
    if (threshold < 0) {
        b.x(flag, std::vector<Control>(extra.begin(), extra.end()));
        return;
    }
    if (threshold >= top)
        return;

    std::vector<Qubit> extended(reg.begin(), reg.end());
    extended.push_back(borrow);
    const auto offset = static_cast<std::uint64_t>(top - threshold);
    const std::uint64_t modulus = std::uint64_t{1} << (w + 1);
    emit_add_const(b, extended, offset);
    b.x(flag, with(extra, {pos(borrow)}));
    emit_add_const(b, extended, modulus - offset);
}

CircuitSpec build_qft(std::size_t width)
{
    if (width == 0)
        throw ContractViolation("qft width must be at least 1");
    RegisterLayout layout;
    const auto q = layout.add("q", width).qubits();
    CircuitBuilder b(layout);
    emit_qft(b, q);
    return std::move(b).build();
}

CircuitSpec build_iqft(std::size_t width)
{
    if (width == 0)
        throw ContractViolation("qft width must be at least 1");
    RegisterLayout layout;
    const auto q = layout.add("q", width).qubits();
    CircuitBuilder b(layout);
    emit_iqft(b, q);
    return std::move(b).build();
}

CircuitSpec build_add_const(std::size_t width, std::uint64_t c, std::size_t num_controls)
{
    if (width == 0)
        throw ContractViolation("adder width must be at least 1");
    if (width < 64 && c >> width)
        throw ContractViolation("constant does not fit the register");
    RegisterLayout layout;
    const auto q = layout.add("q", width).qubits();
    const auto ctrl = layout.add("ctrl", num_controls).qubits();
    std::vector<Control> controls;
    for (Qubit c_q : ctrl)
        controls.push_back(pos(c_q));
    CircuitBuilder b(layout);
    emit_add_const(b, q, c, controls);
    return std::move(b).build();
}

CircuitSpec build_incrementer(std::size_t width, AdderKind kind)
{
    if (width == 0)
        throw ContractViolation("incrementer width must be at least 1");
    RegisterLayout layout;
    const auto q = layout.add("q", width).qubits();
    const Qubit ctrl = layout.add("ctrl", 1)[0];
    CircuitBuilder b(layout);
    const Control c = pos(ctrl);
    emit_increment(b, q, std::span<const Control>(&c, 1), kind);
    return std::move(b).build();
}

CircuitSpec build_comparator_gt(std::size_t width, long long threshold)
{
    RegisterLayout layout;
    const auto profit = layout.add("profit", width).qubits();
    const Qubit borrow = layout.add("borrow", 1)[0];
    const Qubit flag = layout.add("flag", 1)[0];
    CircuitBuilder b(layout);
    emit_comparator_gt(b, profit, borrow, threshold, flag);
    return std::move(b).build();
}

} // namespace qpalign::circuits
