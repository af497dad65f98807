#include "qpalign/circuits/profit_circuit.hpp"

#include "qpalign/circuits/qram.hpp"
#include "qpalign/error.hpp"

#include <string>
#include <vector>

namespace qpalign::circuits {

namespace {

std::string char_register(const char *axis, CharMode mode, std::size_t step)
{
    std::string name = std::string("char_") + axis;
    if (mode == CharMode::PerStep)
        name += "_" + std::to_string(step);
    return name;
}

/// Table indexed by counter value after the increment; entry 0 is padding.
std::vector<std::uint8_t> shifted_table(const Sequence &s)
{
    std::vector<std::uint8_t> table;
    table.reserve(s.size() + 1);
    table.push_back(0);
    for (std::uint8_t c : s.codes())
        table.push_back(c);
    return table;
}

std::uint64_t modular(long long value, std::size_t width)
{
    if (width == 0)
        return 0;
    const long long modulus = 1LL << width;
    long long r = value % modulus;
    if (r < 0)
        r += modulus;
    return static_cast<std::uint64_t>(r);
}

CharMode resolve_mode(const RegisterLayout &layout)
{
    return layout.contains("char_h") ? CharMode::Reuse : CharMode::PerStep;
}

} // namespace

std::string_view char_mode_name(CharMode mode) noexcept { return mode == CharMode::Reuse ? "reuse" : "per-step"; }

CharMode char_mode_from_name(std::string_view name)
{
    if (name == "reuse")
        return CharMode::Reuse;
    if (name == "per-step")
        return CharMode::PerStep;
    throw ValidationError("unknown character mode '" + std::string(name) + "' (expected reuse or per-step)");
}

std::size_t bits_for(std::uint64_t value) noexcept
{
    std::size_t bits = 0;
    while (bits < 64 && (value >> bits) != 0)
        ++bits;
    return bits;
}

RegisterWidths register_widths(std::size_t m, std::size_t n, const ProfitCircuitOptions &opts)
{
    opts.params.validate();
    RegisterWidths w;
    w.steps = opts.steps.value_or(m + n);
    w.counter_h = bits_for(w.steps);
    w.counter_v = bits_for(w.steps);
    const std::size_t needed = bits_for(static_cast<std::uint64_t>(max_profit_bound(m, n, opts.params)));
    w.profit = opts.profit_width.value_or(needed);
    if (w.profit < needed)
        throw ValidationError("profit register of " + std::to_string(w.profit) + " qubits overflows; need " +
                              std::to_string(needed));
    return w;
}

RegisterLayout make_profit_layout(std::size_t m, std::size_t n, const ProfitCircuitOptions &opts,
                                  bool oracle_ancillas)
{
    const RegisterWidths w = register_widths(m, n, opts);
    RegisterLayout layout;
    layout.add("step", 2 * w.steps);
    layout.add("counter_h", w.counter_h);
    layout.add("counter_v", w.counter_v);
    layout.add("profit", w.profit);
    if (opts.char_mode == CharMode::Reuse) {
        const std::size_t width = w.steps > 0 ? 2 : 0;
        layout.add("char_h", width);
        layout.add("char_v", width);
    } else {
        for (std::size_t i = 0; i < w.steps; ++i) {
            layout.add(char_register("h", CharMode::PerStep, i), 2);
            layout.add(char_register("v", CharMode::PerStep, i), 2);
        }
    }
    layout.add("valid", 1);
    if (oracle_ancillas) {
        layout.add("flag", 1);
        layout.add("borrow", 1);
    }
    return layout;
}

StepQubits step_qubits(const RegisterLayout &layout, std::size_t step_index)
{
    const auto &step = layout.at("step");
    if (2 * step_index + 1 >= step.width)
        throw ContractViolation("step " + std::to_string(step_index) + " outside the step register");
    return {step[2 * step_index + 1], step[2 * step_index]};
}

CircuitSpec build_char_match()
{
    RegisterLayout layout;
    const auto ch = layout.add("char_h", 2).qubits();
    const auto cv = layout.add("char_v", 2).qubits();
    const Qubit match = layout.add("match", 1)[0];
    CircuitBuilder b(layout);
    emit_char_match(b, ch, cv, [&](std::span<const Control> fire) {
        b.x(match, std::vector<Control>(fire.begin(), fire.end()));
    });
    return std::move(b).build();
}

void emit_step(CircuitBuilder &b, std::size_t step_index, const Sequence &horizontal, const Sequence &vertical,
               const ProfitCircuitOptions &opts, bool hadamards)
{
    const RegisterLayout &layout = b.layout();
    const CharMode mode = resolve_mode(layout);
    const StepQubits sq = step_qubits(layout, step_index);
    const auto counter_h = layout.at("counter_h").qubits();
    const auto counter_v = layout.at("counter_v").qubits();
    const auto profit = layout.at("profit").qubits();
    const auto char_h = layout.at(char_register("h", mode, step_index)).qubits();
    const auto char_v = layout.at(char_register("v", mode, step_index)).qubits();
    const ProfitParams &p = opts.params;
    const std::size_t pw = profit.size();

    const Control on_h = pos(sq.horizontal);
    const Control on_v = pos(sq.vertical);
    const std::vector<Control> on_diag{on_h, on_v};
    const auto table_h = shifted_table(horizontal);
    const auto table_v = shifted_table(vertical);

    ScopedSection step(b, "step_" + std::to_string(step_index));
    if (hadamards) {
        ScopedSection gen(b, "path_generation");
        b.h(sq.horizontal);
        b.h(sq.vertical);
    }
    {
        ScopedSection counters(b, "counter_increment");
        emit_increment(b, counter_h, std::span<const Control>(&on_h, 1), opts.counter_adder);
        emit_increment(b, counter_v, std::span<const Control>(&on_v, 1), opts.counter_adder);
    }
    {
        ScopedSection indel(b, "indel_profit");
        emit_add_const(b, profit, modular(p.x, pw), std::span<const Control>(&on_h, 1));
        emit_add_const(b, profit, modular(p.x, pw), std::span<const Control>(&on_v, 1));
        if (p.y != p.x)
            emit_add_const(b, profit, modular(p.y - p.x, pw), on_diag);
    }
    {
        ScopedSection load(b, "char_load");
        emit_qram_load(b, table_h, counter_h, char_h);
        emit_qram_load(b, table_v, counter_v, char_v);
    }
    emit_char_match(b, char_h, char_v, [&](std::span<const Control> fire) {
        ScopedSection bonus(b, "match_profit");
        std::vector<Control> controls = on_diag;
        controls.insert(controls.end(), fire.begin(), fire.end());
        emit_add_const(b, profit, modular(p.z - p.y, pw), controls);
    });
    if (mode == CharMode::Reuse) {
        ScopedSection unload(b, "char_unload");
        emit_qram_load(b, table_v, counter_v, char_v);
        emit_qram_load(b, table_h, counter_h, char_h);
    }
}

CircuitSpec build_step_circuit(std::size_t step_index, const Sequence &horizontal, const Sequence &vertical,
                               const ProfitCircuitOptions &opts)
{
    CircuitBuilder b(make_profit_layout(horizontal.size(), vertical.size(), opts));
    emit_step(b, step_index, horizontal, vertical, opts);
    return std::move(b).build();
}

void emit_validity(CircuitBuilder &b, std::size_t m, std::size_t n)
{
    const RegisterLayout &layout = b.layout();
    const auto &ch = layout.at("counter_h");
    const auto &cv = layout.at("counter_v");
    const Qubit valid = layout.at("valid")[0];
    if ((ch.width < 64 && (m >> ch.width) != 0) || (cv.width < 64 && (n >> cv.width) != 0))
        throw ContractViolation("counter registers cannot hold the sequence lengths");

    ScopedSection section(b, "validity");
    auto mark = [&] {
        for (std::size_t i = 0; i < ch.width; ++i)
            if ((m >> i) & 1U)
                b.x(ch[i]);
        for (std::size_t i = 0; i < cv.width; ++i)
            if ((n >> i) & 1U)
                b.x(cv[i]);
    };
    mark();
    std::vector<Control> all_zero;
    for (Qubit q : ch.qubits())
        all_zero.push_back(neg(q));
    for (Qubit q : cv.qubits())
        all_zero.push_back(neg(q));
    b.x(valid, std::move(all_zero));
    mark();
}

void emit_profit_computation(CircuitBuilder &b, const Sequence &horizontal, const Sequence &vertical,
                             const ProfitCircuitOptions &opts)
{
    const std::size_t t = b.layout().at("step").width / 2;
    ScopedSection section(b, "profit_computation");
    for (std::size_t i = 0; i < t; ++i)
        emit_step(b, i, horizontal, vertical, opts, false);
    emit_validity(b, horizontal.size(), vertical.size());
}

CircuitSpec build_full_profit_circuit(const Sequence &horizontal, const Sequence &vertical,
                                      const ProfitCircuitOptions &opts)
{
    CircuitBuilder b(make_profit_layout(horizontal.size(), vertical.size(), opts));
    const std::size_t t = b.layout().at("step").width / 2;
    {
        ScopedSection section(b, "profit_accumulation");
        for (std::size_t i = 0; i < t; ++i)
            emit_step(b, i, horizontal, vertical, opts, true);
    }
    emit_validity(b, horizontal.size(), vertical.size());
    return std::move(b).build();
}

BranchRegisters expected_branch_registers(const TransitionString &path, const Sequence &horizontal,
                                          const Sequence &vertical, const ProfitParams &params,
                                          const RegisterWidths &widths)
{
    auto read = [](const Sequence &s, std::uint64_t counter) {
        return counter >= 1 && counter <= s.size() ? s[counter - 1] : Base::A;
    };
    BranchRegisters out;
    long long profit = 0;
    for (Direction d : path.steps()) {
        const bool h = moves_horizontal(d);
        const bool v = moves_vertical(d);
        out.counter_h += h;
        out.counter_v += v;
        if (h && v)
            profit += read(horizontal, out.counter_h) == read(vertical, out.counter_v) ? params.x + params.z
                                                                                        : params.x + params.y;
        else if (h || v)
            profit += params.x;
    }
    out.counter_h = modular(static_cast<long long>(out.counter_h), widths.counter_h);
    out.counter_v = modular(static_cast<long long>(out.counter_v), widths.counter_v);
    out.profit = modular(profit, widths.profit);
    out.valid = is_valid_path(path, horizontal.size(), vertical.size());
    return out;
}

BranchRegisters read_branch_registers(std::uint64_t basis, const RegisterLayout &layout)
{
    return {layout.at("counter_h").read(basis), layout.at("counter_v").read(basis), layout.at("profit").read(basis),
            layout.at("valid").read(basis) == 1};
}

} // namespace qpalign::circuits
