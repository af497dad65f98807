// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "qpalign/alignment/alignment.hpp"
#include "qpalign/circuits/arithmetic.hpp"
#include "qpalign/circuits/profit_circuit.hpp"
#include "qpalign/circuits/qram.hpp"
#include "qpalign/cli/commands.hpp"
#include "qpalign/grover/driver.hpp"
#include "qpalign/grover/oracle.hpp"
#include "qpalign/oracles/classical.hpp"
#include "qpalign/qsim/state.hpp"

#include "reference.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace qpalign;
using nlohmann::ordered_json;
using qsim::Amplitude;
using qsim::Backend;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool passed = false;
    std::string detail;
};

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string fmt(const char *format, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

struct CliRun {
    int code;
    std::string out;
};

CliRun cli_run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str() + err.str()};
}

long long classical_image(const circuits::CircuitSpec &spec, std::uint64_t input)
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

circuits::CircuitSpec scramble(const qsim::RegisterLayout &layout)
{
    circuits::CircuitBuilder b(layout);
    for (qsim::Qubit q = 0; q < layout.total_qubits(); ++q) {
        b.h(q);
        b.phase(q, 0.29 * (q + 1));
    }
    return std::move(b).build();
}

double dense_sparse_gap(const circuits::CircuitSpec &spec, const circuits::CircuitSpec &prefix)
{
    auto dense = qsim::make_state(Backend::Dense, spec.layout.total_qubits());
    auto sparse = qsim::make_state(Backend::Sparse, spec.layout.total_qubits());
    for (auto *s : {dense.get(), sparse.get()}) {
        qsim::apply_all(*s, prefix.gates);
        qsim::apply_all(*s, spec.gates);
    }
    return qsim::max_amplitude_difference(*dense, *sparse);
}

// 1 -------------------------------------------------------------------
Verdict worked_example()
{
    const auto start = Clock::now();
    const auto r = cli_run({"align", "--seq-a", "ATGGTCAGC", "--seq-b", "ACGGTC", "--mode", "dp"});
    const double elapsed = seconds_since(start);
    const long long brute =
        oracles::brute_force_max(Sequence::parse("ATGGTCAGC"), Sequence::parse("ACGGTC")).max_profit;
    const bool ok = r.code == 0 && r.out.find("profit: 20\nATGGTCAGC\nACGGTC___\n") != std::string::npos &&
                    brute == 20 && ref::best_score("ATGGTCAGC", "ACGGTC") == 20 && elapsed < 1.0;
    return {ok, fmt("exit %d, brute-force referee %lld, %.3f s", r.code, brute, elapsed)};
}

// 2 -------------------------------------------------------------------
Verdict resource_formulas()
{
    const auto r = cli_run({"resources", "--m", "9", "--n", "6", "--json"});
    if (r.code != 0)
        return {false, "resources exited " + std::to_string(r.code)};
    const auto j = ordered_json::parse(r.out)["resources"];
    const bool ok = j["node_count"] == 70 && j["step_qubits"] == 30 && j["max_profit"] == 21;
    return {ok, fmt("node_count %s, step_qubits %s, max_profit %s", j["node_count"].dump().c_str(),
                    j["step_qubits"].dump().c_str(), j["max_profit"].dump().c_str())};
}

// 3 -------------------------------------------------------------------
Verdict classical_track()
{
    const auto start = Clock::now();
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const char *a : {"A", "C", "G", "T"})
        for (const char *b : {"A", "C", "G", "T"})
            pairs.emplace_back(a, b);
    std::mt19937 gen(2718);
    for (int i = 0; i < 50; ++i)
        pairs.emplace_back(ref::random_dna(gen, gen() % 3), ref::random_dna(gen, gen() % 3));

    std::size_t branches = 0, mismatches = 0;
    for (const auto &[sa, sb] : pairs) {
        const auto a = Sequence::parse(sa);
        const auto b = Sequence::parse(sb);
        const auto spec = circuits::build_full_profit_circuit(a, b);
        const auto widths = circuits::register_widths(a.size(), b.size());
        const std::size_t t = sa.size() + sb.size();
        const std::size_t lo = std::min(sa.size(), sb.size());
        const std::size_t pw = ref::bits_for(3 * lo + (t - 2 * lo));
        auto s = qsim::make_state(Backend::Sparse, spec.layout.total_qubits());
        qsim::apply_all(*s, spec.gates);
        const auto &step = spec.layout.at("step");
        const double prob = std::ldexp(1.0, -static_cast<int>(2 * t));
        std::size_t seen = 0;
        s->for_each([&](std::uint64_t basis, Amplitude amp) {
            ++seen;
            const std::string letters = ref::letters_from_bits(step.read(basis), t);
            const auto model = ref::branch_model(letters, sa, sb, pw);
            const auto mirror = circuits::expected_branch_registers(TransitionString::parse(letters), a, b, {}, widths);
            const auto got = circuits::read_branch_registers(basis, spec.layout);
            const bool ok = got.counter_h == model.counter_h && got.counter_v == model.counter_v &&
                            got.profit == model.profit && got.valid == model.valid && got == mirror &&
                            std::abs(std::norm(amp) - prob) < 1e-12;
            mismatches += ok ? 0 : 1;
        });
        branches += seen;
        mismatches += seen == (std::size_t{1} << (2 * t)) ? 0 : 1;
    }
    const double elapsed = seconds_since(start);
    return {mismatches == 0 && elapsed < 60.0,
            fmt("%zu instances, %zu branches, %zu mismatches, %.2f s", pairs.size(), branches, mismatches, elapsed)};
}

// 4 -------------------------------------------------------------------
Verdict arithmetic()
{
    std::size_t cases = 0, mismatches = 0;
    for (std::size_t w = 1; w <= 5; ++w) {
        const std::uint64_t dim = std::uint64_t{1} << w;
        for (std::uint64_t c = 0; c < dim; ++c) {
            const auto spec = circuits::build_add_const(w, c, 1);
            for (std::uint64_t a = 0; a < dim; ++a) {
                cases += 2;
                mismatches += classical_image(spec, a) != static_cast<long long>(a);
                mismatches += classical_image(spec, a | dim) != static_cast<long long>(((a + c) % dim) | dim);
            }
        }
        for (auto kind : {circuits::AdderKind::Draper, circuits::AdderKind::Ripple}) {
            const auto inc = circuits::build_incrementer(w, kind);
            for (std::uint64_t a = 0; a < dim; ++a) {
                cases += 2;
                mismatches += classical_image(inc, a) != static_cast<long long>(a);
                mismatches += classical_image(inc, a | dim) != static_cast<long long>(((a + 1) % dim) | dim);
            }
        }
    }
    for (long long thr = -1; thr <= 16; ++thr) {
        const auto cmp = circuits::build_comparator_gt(4, thr);
        for (std::uint64_t v = 0; v < 16; ++v) {
            ++cases;
            const std::uint64_t flag = static_cast<long long>(v) > thr ? (1u << 5) : 0;
            mismatches += classical_image(cmp, v) != static_cast<long long>(v | flag);
        }
    }
    return {mismatches == 0, fmt("%zu cases, %zu mismatches", cases, mismatches)};
}

// 5 -------------------------------------------------------------------
Verdict backend_equivalence()
{
    const auto start = Clock::now();
    std::vector<std::pair<std::string, circuits::CircuitSpec>> corpus;
    for (std::size_t w = 1; w <= 5; ++w) {
        corpus.emplace_back("qft_" + std::to_string(w), circuits::build_qft(w));
        corpus.emplace_back("add_const_" + std::to_string(w), circuits::build_add_const(w, (1u << w) - 1, 1));
        corpus.emplace_back("incrementer_" + std::to_string(w), circuits::build_incrementer(w));
    }
    corpus.emplace_back("qram", circuits::build_qram_loader(std::vector<std::uint8_t>{0, 2, 1, 3, 3, 1}, 3));
    std::mt19937 gen(141);
    for (std::size_t m = 0; m <= 2; ++m)
        for (std::size_t n = 0; n <= 2; ++n) {
            const auto a = Sequence::parse(ref::random_dna(gen, m));
            const auto b = Sequence::parse(ref::random_dna(gen, n));
            corpus.emplace_back("profit_" + a.str() + "/" + b.str(), circuits::build_full_profit_circuit(a, b));
        }
    for (const auto &[sa, sb] : {std::pair{"A", "C"}, std::pair{"GA", "G"}}) {
        const auto a = Sequence::parse(sa);
        const auto b = Sequence::parse(sb);
        const auto oracle = grover::build_phase_oracle(a, b, 1);
        circuits::CircuitBuilder round(oracle.layout);
        round.append(grover::build_uniform_preparation(oracle.layout));
        round.append(oracle);
        round.append(grover::build_diffusion(oracle.layout));
        corpus.emplace_back(std::string("grover_round_") + sa + "/" + sb, std::move(round).build());
    }

    double worst = 0.0;
    for (const auto &[name, spec] : corpus) {
        // Profit circuits and Grover rounds run on their real input |0>; the
        // arithmetic blocks on a scrambled superposition.
        const bool from_zero = name.rfind("profit_", 0) == 0 || name.rfind("grover_round_", 0) == 0;
        const auto prefix = from_zero ? circuits::CircuitBuilder(spec.layout).build() : scramble(spec.layout);
        worst = std::max(worst, dense_sparse_gap(spec, prefix));
    }
    return {worst <= 1e-10,
            fmt("%zu circuits, max |dense - sparse| = %.3g, %.1f s", corpus.size(), worst, seconds_since(start))};
}

// 6 -------------------------------------------------------------------
Verdict closed_form()
{
    struct Config {
        const char *a;
        const char *b;
        long long threshold;
    };
    const Config configs[] = {{"A", "", -1}, {"A", "C", -1}, {"A", "A", 2},  {"C", "C", -1},
                              {"AC", "G", 2}, {"AC", "G", 3}, {"G", "TG", 3}, {"TA", "A", -1}};
    std::size_t points = 0;
    double worst = 0.0;
    bool certain_case = false;
    for (const Config &c : configs) {
        const auto a = Sequence::parse(c.a);
        const auto b = Sequence::parse(c.b);
        const auto marked = ref::marked_branches(c.a, c.b, c.threshold);
        const std::size_t t = a.size() + b.size();
        const double n = std::ldexp(1.0, static_cast<int>(2 * t));
        const auto oracle = grover::build_phase_oracle(a, b, c.threshold);
        const auto diffusion = grover::build_diffusion(oracle.layout);
        const auto &step = oracle.layout.at("step");
        for (unsigned r = 0; r <= 4; ++r) {
            auto s = qsim::make_state(Backend::Sparse, oracle.layout.total_qubits());
            qsim::apply_all(*s, grover::build_uniform_preparation(oracle.layout).gates);
            grover::grover_iterate(*s, oracle, diffusion, r);
            const double p = qsim::expect_basis(*s, [&](std::uint64_t basis) {
                return std::find(marked.begin(), marked.end(), step.read(basis)) != marked.end();
            });
            const double want = ref::grover_success(double(marked.size()), n, r);
            worst = std::max(worst, std::abs(p - want));
            ++points;
            if (marked.size() == 1 && n == 4.0 && r == 1 && std::abs(p - 1.0) <= 1e-9)
                certain_case = true;
        }
    }
    return {worst <= 1e-9 && certain_case,
            fmt("%zu (k, N, r) points, max deviation %.3g, k=1 N=4 r=1 certain: %s", points, worst,
                certain_case ? "yes" : "no")};
}

// 7 and 8 -------------------------------------------------------------
struct SearchCampaign {
    std::size_t runs = 0, optimal = 0, unsound = 0, over_budget = 0, max_iterations = 0;
    double seconds = 0.0;
};

const SearchCampaign &search_campaign()
{
    static const SearchCampaign campaign = [] {
        SearchCampaign c;
        const auto start = Clock::now();
        std::mt19937 gen(314159);
        std::vector<std::pair<Sequence, Sequence>> instances;
        for (int i = 0; i < 10; ++i)
            instances.emplace_back(Sequence::parse(ref::random_dna(gen, 1 + gen() % 2)),
                                   Sequence::parse(ref::random_dna(gen, 1 + gen() % 2)));
        for (std::size_t run = 0; run < 50; ++run) {
            const auto &[a, b] = instances[run % instances.size()];
            grover::SearchConfig cfg;
            cfg.budget_c = 3.0;
            cfg.seed = 1000 + run;
            const auto [result, trace] = grover::find_max(a, b, cfg);
            ++c.runs;
            if (result.found) {
                const PathScore s = path_profit(result.path, a, b);
                const Alignment al = decode_alignment(result.path, a, b);
                const bool sound = s.valid && s.profit == result.profit && al == result.alignment &&
                                   ref::score_alignment(al.top, al.bottom) == result.profit;
                c.unsound += !sound;
                c.optimal += sound && result.profit == oracles::dp_max(a, b).max_profit;
            }
            const double t = double(a.size() + b.size());
            c.over_budget += double(trace.total_iterations) > 3.0 * std::sqrt(std::pow(4.0, t));
            c.max_iterations = std::max(c.max_iterations, trace.total_iterations);
        }
        c.seconds = seconds_since(start);
        return c;
    }();
    return campaign;
}

Verdict quantum_success()
{
    const auto &c = search_campaign();
    const bool ok = c.optimal * 10 >= c.runs * 9 && c.unsound == 0 && c.seconds < 300.0;
    return {ok, fmt("%zu/%zu runs optimal over 10 instances, %zu unsound, %.1f s", c.optimal, c.runs, c.unsound,
                    c.seconds)};
}

Verdict iteration_budget()
{
    const auto &c = search_campaign();
    return {c.over_budget == 0,
            fmt("linear-time claim not reproduced (search space is 4^t); substitute check: %zu/%zu runs within "
                "c*sqrt(4^t), max %zu iterations",
                c.runs - c.over_budget, c.runs, c.max_iterations)};
}

// 9 -------------------------------------------------------------------
Verdict reproducibility()
{
    const std::vector<std::string> args{"verify", "--max-len", "2", "--trials", "50", "--seed", "1", "--json"};
    const auto first = cli_run(args);
    const auto second = cli_run(args);
    if (first.code != 0 || second.code != 0)
        return {false, fmt("verify exited %d and %d", first.code, second.code)};
    const auto a = cli::strip_wall_time(ordered_json::parse(first.out)).dump();
    const auto b = cli::strip_wall_time(ordered_json::parse(second.out)).dump();
    return {a == b, fmt("two verify reports, %zu bytes each without wall time, identical: %s", a.size(),
                        a == b ? "yes" : "no")};
}

} // namespace

int main()
{
    const std::pair<const char *, std::function<Verdict()>> criteria[] = {
        {"worked example via align --mode dp", worked_example},
        {"resource formulas for m=9, n=6", resource_formulas},
        {"classical-track equivalence", classical_track},
        {"arithmetic exhaustiveness", arithmetic},
        {"dense/sparse backend equivalence", backend_equivalence},
        {"Grover closed form", closed_form},
        {"end-to-end quantum success", quantum_success},
        {"iteration budget", iteration_budget},
        {"reproducible verify reports", reproducibility},
    };
    int failed = 0;
    int index = 0;
    for (const auto &[name, check] : criteria) {
        ++index;
        Verdict v;
        try {
            v = check();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::printf("criterion %d: %s  %s  (%s)\n", index, v.passed ? "PASS" : "FAIL", name, v.detail.c_str());
        std::fflush(stdout);
        failed += !v.passed;
    }
    std::printf("%d of %d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
