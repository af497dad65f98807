#include "qpalign/circuits/arithmetic.hpp"
#include "qpalign/circuits/export.hpp"
#include "qpalign/circuits/profit_circuit.hpp"
#include "qpalign/circuits/qram.hpp"
#include "qpalign/circuits/resources.hpp"
#include "qpalign/error.hpp"
#include "qpalign/qsim/state.hpp"

#include "../support/reference.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

using namespace qpalign;
using namespace qpalign::circuits;
using qsim::Amplitude;
using qsim::Backend;

namespace {

/// Runs `spec` on |input> and returns the single basis state it lands on, or -1.
long long classical_image(const CircuitSpec &spec, std::uint64_t input)
{
    auto s = qsim::make_state(Backend::Sparse, spec.layout.total_qubits());
    s->reset(input);
    qsim::apply_all(*s, spec.gates);
    long long out = -1;
    s->for_each([&](std::uint64_t basis, Amplitude a) {
        if (std::norm(a) > 1.0 - 1e-9)
            out = static_cast<long long>(basis);
    });
    return out;
}

void check_classical_track(const std::string &sa, const std::string &sb, CharMode mode)
{
    CAPTURE(sa);
    CAPTURE(sb);
    const auto a = Sequence::parse(sa);
    const auto b = Sequence::parse(sb);
    ProfitCircuitOptions opts;
    opts.char_mode = mode;
    const auto spec = build_full_profit_circuit(a, b, opts);
    const std::size_t t = sa.size() + sb.size();
    const std::size_t lo = std::min(sa.size(), sb.size());
    const std::size_t pw = ref::bits_for(3 * lo + (sa.size() + sb.size() - 2 * lo));
    CHECK(spec.layout.at("profit").width == pw);
    CHECK(spec.layout.at("counter_h").width == ref::bits_for(t));

    auto s = qsim::make_state(Backend::Sparse, spec.layout.total_qubits());
    qsim::apply_all(*s, spec.gates);
    const auto &step = spec.layout.at("step");
    std::size_t seen = 0;
    s->for_each([&](std::uint64_t basis, Amplitude amp) {
        ++seen;
        const std::string letters = ref::letters_from_bits(step.read(basis), t);
        const ref::BranchModel want = ref::branch_model(letters, sa, sb, pw);
        const BranchRegisters got = read_branch_registers(basis, spec.layout);
        CAPTURE(letters);
        CHECK(std::norm(amp) == doctest::Approx(std::ldexp(1.0, -static_cast<int>(2 * t))).epsilon(1e-9));
        CHECK(got.counter_h == want.counter_h);
        CHECK(got.counter_v == want.counter_v);
        CHECK(got.profit == want.profit);
        CHECK(got.valid == want.valid);
        if (want.valid)
            CHECK(static_cast<int>(got.profit) == path_profit(TransitionString::parse(letters), a, b).profit);
    });
    CHECK(seen == (std::size_t{1} << (2 * t)));
}

} // namespace

TEST_CASE("QFT matches the discrete Fourier transform")
{
    for (std::size_t w = 1; w <= 4; ++w) {
        const auto spec = build_qft(w);
        CHECK(spec.count_sections("qft") == 1);
        const std::uint64_t dim = std::uint64_t{1} << w;
        for (std::uint64_t a = 0; a < dim; ++a) {
            auto s = qsim::make_state(Backend::Dense, w);
            s->reset(a);
            qsim::apply_all(*s, spec.gates);
            for (std::uint64_t k = 0; k < dim; ++k) {
                const Amplitude want =
                    std::polar(1.0 / std::sqrt(double(dim)), 2.0 * std::numbers::pi * double(a * k) / double(dim));
                CHECK(std::abs(s->amplitude(k) - want) < 1e-12);
            }
            qsim::apply_all(*s, build_iqft(w).gates);
            CHECK(std::abs(s->amplitude(a) - Amplitude{1.0}) < 1e-12);
        }
    }
    CHECK_THROWS_AS(build_qft(0), ContractViolation);
}

TEST_CASE("constant adder is modular addition at widths 1-5")
{
    for (std::size_t w = 1; w <= 5; ++w) {
        const std::uint64_t dim = std::uint64_t{1} << w;
        for (std::uint64_t c = 0; c < dim; ++c) {
            const auto spec = build_add_const(w, c, 1);
            for (std::uint64_t a = 0; a < dim; ++a) {
                CHECK(classical_image(spec, a) == static_cast<long long>(a));
                CHECK(classical_image(spec, a | dim) == static_cast<long long>(((a + c) % dim) | dim));
            }
        }
    }
    CHECK(build_add_const(3, 0).gate_count() == 0);
    CHECK_THROWS_AS(build_add_const(3, 8), ContractViolation);
}

TEST_CASE("incrementers add one modulo 2^w when controlled")
{
    for (AdderKind kind : {AdderKind::Draper, AdderKind::Ripple})
        for (std::size_t w = 1; w <= 5; ++w) {
            const auto spec = build_incrementer(w, kind);
            const std::uint64_t dim = std::uint64_t{1} << w;
            for (std::uint64_t a = 0; a < dim; ++a) {
                CHECK(classical_image(spec, a) == static_cast<long long>(a));
                CHECK(classical_image(spec, a | dim) == static_cast<long long>(((a + 1) % dim) | dim));
            }
        }
}

TEST_CASE("incrementer sections: QFT, two controlled rotations, inverse QFT")
{
    const auto spec = build_incrementer(2);
    CHECK(spec.count_sections("qft") == 1);
    CHECK(spec.count_sections("phase_add") == 1);
    CHECK(spec.count_sections("iqft") == 1);
    for (const Section &s : spec.sections)
        if (s.name == "phase_add") {
            CHECK(s.end - s.begin == 2);
            for (std::size_t i = s.begin; i < s.end; ++i) {
                CHECK(spec.gates[i].kind == qsim::GateKind::CPhase);
                CHECK(spec.gates[i].controls.size() == 1);
            }
        }
}

TEST_CASE("comparator_gt is strict comparison at width 4")
{
    for (long long thr = -3; thr <= 18; ++thr) {
        const auto spec = build_comparator_gt(4, thr);
        for (std::uint64_t v = 0; v < 16; ++v) {
            const std::uint64_t flag_bit = std::uint64_t{1} << 5;
            const long long want = static_cast<long long>(v | (static_cast<long long>(v) > thr ? flag_bit : 0));
            CHECK(classical_image(spec, v) == want);
            CHECK(classical_image(spec, v | flag_bit) == (want ^ static_cast<long long>(flag_bit)));
        }
    }
}

TEST_CASE("qRAM loader XORs the addressed word")
{
    const std::vector<std::uint8_t> table{0, 3, 1, 2, 3};
    const auto spec = build_qram_loader(table, 3);
    for (std::uint64_t addr = 0; addr < 8; ++addr)
        for (std::uint64_t data = 0; data < 4; ++data) {
            const std::uint64_t word = addr < table.size() ? table[addr] : 0;
            CHECK(classical_image(spec, addr | (data << 3)) == static_cast<long long>(addr | ((data ^ word) << 3)));
        }
    CHECK_THROWS_AS(build_qram_loader(table, 2), ContractViolation);
}

TEST_CASE("character match flips only on equal characters")
{
    const auto spec = build_char_match();
    for (std::uint64_t h = 0; h < 4; ++h)
        for (std::uint64_t v = 0; v < 4; ++v) {
            const std::uint64_t in = h | (v << 2);
            CHECK(classical_image(spec, in) == static_cast<long long>(in | (h == v ? 16u : 0u)));
        }
}

TEST_CASE("classical track: every branch of every 1x1 instance")
{
    for (const char *a : {"A", "C", "G", "T"})
        for (const char *b : {"A", "C", "G", "T"}) {
            check_classical_track(a, b, CharMode::Reuse);
            check_classical_track(a, b, CharMode::PerStep);
        }
}

TEST_CASE("classical track: random instances up to 2x2")
{
    std::mt19937 gen(8);
    for (int trial = 0; trial < 20; ++trial)
        check_classical_track(ref::random_dna(gen, gen() % 3), ref::random_dna(gen, gen() % 3),
                              trial % 2 ? CharMode::PerStep : CharMode::Reuse);
}

TEST_CASE("counters never wrap, so overrunning walks stay invalid")
{
    // With 1-bit counters the walk DDH on a 1x2 grid would wrap back to (1, 2).
    const auto a = Sequence::parse("A");
    const auto b = Sequence::parse("AA");
    const auto spec = build_full_profit_circuit(a, b);
    auto s = qsim::make_state(Backend::Sparse, spec.layout.total_qubits());
    qsim::apply_all(*s, spec.gates);
    const auto bits = TransitionString::parse("DDH").to_step_bits();
    s->for_each([&](std::uint64_t basis, Amplitude) {
        if (spec.layout.at("step").read(basis) == bits) {
            const auto r = read_branch_registers(basis, spec.layout);
            CHECK(r.counter_h == 3);
            CHECK(r.counter_v == 2);
            CHECK_FALSE(r.valid);
        }
    });
}

TEST_CASE("step circuit sections")
{
    const auto a = Sequence::parse("AC");
    const auto b = Sequence::parse("G");
    const auto step = build_step_circuit(1, a, b);
    for (const char *name : {"step_1", "path_generation", "counter_increment", "indel_profit", "char_load",
                             "char_match", "char_unload"})
        CHECK(step.count_sections(name) == 1);
    ProfitCircuitOptions per_step;
    per_step.char_mode = CharMode::PerStep;
    CHECK(build_step_circuit(1, a, b, per_step).count_sections("char_unload") == 0);
    const auto full = build_full_profit_circuit(a, b);
    CHECK(full.count_sections("validity") == 1);
    CHECK(full.count_sections("path_generation") == 3);
}

TEST_CASE("layout register order and widths")
{
    const auto layout = make_profit_layout(2, 1, {}, true);
    std::vector<std::string> names;
    for (const auto &r : layout.registers())
        names.push_back(r.name);
    CHECK(names == std::vector<std::string>{"step", "counter_h", "counter_v", "profit", "char_h", "char_v", "valid",
                                            "flag", "borrow"});
    CHECK(layout.at("step").width == 6);
    CHECK(layout.at("counter_h").width == 2);
    CHECK(layout.at("profit").width == 3);
    ProfitCircuitOptions opts;
    opts.profit_width = 2;
    CHECK_THROWS_AS(make_profit_layout(2, 1, opts), ValidationError);
    CHECK(char_mode_from_name("per-step") == CharMode::PerStep);
    CHECK_THROWS_AS(char_mode_from_name("shared"), ValidationError);
}

TEST_CASE("resource estimates")
{
    const auto e = estimate_resources(9, 6);
    CHECK(e.node_count == 70);
    CHECK(e.step_qubits == 30);
    CHECK(e.max_profit == 21);
    CHECK(e.t == 15);
    CHECK(e.profit_width == 5);
    CHECK(e.counter_h_width == 4);
    CHECK(e.total_qubits == 30 + 4 + 4 + 5 + 4 + 3);
    REQUIRE(e.gate_count.has_value());
    CHECK(*e.gate_count > 0);

    CHECK(estimate_resources(2, 2).profit_width == 3);
    const auto empty = estimate_resources(0, 0);
    CHECK(empty.t == 0);
    CHECK(empty.total_qubits == empty.ancilla_qubits);

    const auto per_step = estimate_resources(3, 2, {}, CharMode::PerStep);
    CHECK(per_step.char_qubits == 4 * 5);
    CHECK_FALSE(estimate_resources(40, 40).gate_count.has_value());

    const auto concrete = estimate_resources(Sequence::parse("AC"), Sequence::parse("G"));
    CHECK(*concrete.gate_count == build_full_profit_circuit(Sequence::parse("AC"), Sequence::parse("G")).gate_count());
}

TEST_CASE("circuit inverse mirrors gates and sections")
{
    const auto spec = build_incrementer(3);
    const auto inv = spec.inverse();
    REQUIRE(inv.gate_count() == spec.gate_count());
    CHECK(inv.gates.front() == spec.gates.back().inverse());
    CHECK(inv.count_sections("qft_inverse") == 1);
    CHECK(spec.depth() <= spec.gate_count());
    CHECK(spec.depth() > 0);
}

TEST_CASE("export round trips for both formats")
{
    const auto a = Sequence::parse("AC");
    const auto b = Sequence::parse("G");
    const std::vector<CircuitSpec> corpus{build_qft(3), build_incrementer(2), build_comparator_gt(4, 5),
                                          build_qram_loader(std::vector<std::uint8_t>{1, 2, 3}, 2),
                                          build_full_profit_circuit(a, b)};
    for (const auto &spec : corpus) {
        const auto j = import_circuit(export_circuit(spec, ExportFormat::Json), ExportFormat::Json);
        CHECK(j.layout == spec.layout);
        CHECK(j.gates == spec.gates);
        CHECK(j.sections == spec.sections);
        const auto q = import_circuit(export_circuit(spec, ExportFormat::PortableQasm), ExportFormat::PortableQasm);
        CHECK(q.gates == spec.gates);
    }
}

TEST_CASE("portable qasm declares the profit registers")
{
    const auto spec = build_full_profit_circuit(Sequence::parse("A"), Sequence::parse("C"));
    const std::string text = export_circuit(spec, ExportFormat::PortableQasm);
    CHECK(text.rfind("OPENQASM 3.0;", 0) == 0);
    for (const char *reg : {"step", "counter_h", "counter_v", "profit", "char_h", "char_v", "valid"})
        CHECK(text.find("] " + std::string(reg) + ";") != std::string::npos);
    CHECK(text.find("// begin validity") != std::string::npos);
    CHECK(text.find("negctrl") != std::string::npos);

    const std::string inc = export_circuit(build_incrementer(2), ExportFormat::PortableQasm);
    for (const char *sec : {"// begin qft", "// begin phase_add", "// begin iqft"})
        CHECK(inc.find(sec) != std::string::npos);
}

TEST_CASE("malformed circuit documents are rejected")
{
    CHECK_THROWS_AS(import_circuit("{", ExportFormat::Json), ValidationError);
    CHECK_THROWS_AS(import_circuit(R"({"format":"other","version":1})", ExportFormat::Json), ValidationError);
    CHECK_THROWS_AS(import_circuit(R"({"format":"qpalign-circuit","version":1,"layout":[{"name":"q","width":1}],
        "gates":[{"kind":"x","targets":[3],"controls":[],"polarities":[]}]})",
                                   ExportFormat::Json),
                    ValidationError);
    CHECK_THROWS_AS(import_circuit("OPENQASM 3.0;\nqubit[1] q;\nrz(0.1) q[0];\n", ExportFormat::PortableQasm),
                    ValidationError);
    CHECK_THROWS_AS(import_circuit("qubit[1] q;\nx r[0];\n", ExportFormat::PortableQasm), ValidationError);
    CHECK_THROWS_AS(import_circuit("qubit[1] q;\nx q[1];\n", ExportFormat::PortableQasm), ValidationError);
    CHECK_THROWS_AS(import_circuit("qubit[1] q;\nx q[0]\n", ExportFormat::PortableQasm), ValidationError);
    CHECK_THROWS_AS(export_format_from_name("qasm2"), ValidationError);
}
