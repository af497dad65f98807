#include "qpalign/cli/commands.hpp"

#include "qpalign/alignment/alignment.hpp"
#include "qpalign/circuits/arithmetic.hpp"
#include "qpalign/circuits/qram.hpp"
#include "qpalign/error.hpp"
#include "qpalign/grover/oracle.hpp"
#include "qpalign/oracles/classical.hpp"
#include "qpalign/qsim/state.hpp"

#include <algorithm>
#include <cmath>

namespace qpalign::cli {

using nlohmann::ordered_json;

namespace {

constexpr double kAmplitudeTolerance = 1e-10;
constexpr double kRequiredSuccessRate = 0.9;
constexpr std::size_t kMinQuantumInstances = 10;
constexpr std::size_t kDenseInstances = 3;
constexpr std::size_t kDenseQubitLimit = 22;

struct Instance {
    Sequence a;
    Sequence b;
};

std::string label(const Instance &inst) { return inst.a.str() + "/" + inst.b.str(); }

Sequence random_sequence(qsim::Rng &rng, std::size_t length)
{
    std::vector<Base> bases;
    for (std::size_t i = 0; i < length; ++i)
        bases.push_back(decode_base(static_cast<std::uint8_t>(rng.below(4))));
    return Sequence(std::move(bases));
}

Instance random_instance(qsim::Rng &rng, std::size_t min_len, std::size_t max_len)
{
    const auto span = max_len - min_len + 1;
    const std::size_t m = min_len + rng.below(span);
    const std::size_t n = min_len + rng.below(span);
    Sequence a = random_sequence(rng, m);
    Sequence b = random_sequence(rng, n);
    return {std::move(a), std::move(b)};
}

CheckResult classical_track(const std::vector<Instance> &instances, const VerifyConfig &cfg)
{
    circuits::ProfitCircuitOptions circuit_opts;
    circuit_opts.char_mode = cfg.char_mode;
    if (cfg.tamper_profit)
        circuit_opts.params.z = 3;
    const ProfitParams model;

    std::size_t branches = 0;
    std::size_t mismatches = 0;
    ordered_json first_mismatch = nullptr;
    for (const Instance &inst : instances) {
        const auto spec = circuits::build_full_profit_circuit(inst.a, inst.b, circuit_opts);
        const auto widths = circuits::register_widths(inst.a.size(), inst.b.size(), circuit_opts);
        const auto &step = spec.layout.at("step");
        auto state = qsim::make_state(qsim::Backend::Sparse, spec.layout.total_qubits());
        qsim::apply_all(*state, spec.gates);

        const double expected_prob = std::ldexp(1.0, -static_cast<int>(step.width));
        std::size_t seen = 0;
        state->for_each([&](std::uint64_t basis, qsim::Amplitude amp) {
            ++seen;
            const auto path = TransitionString::from_step_bits(step.read(basis), widths.steps);
            const auto want = circuits::expected_branch_registers(path, inst.a, inst.b, model, widths);
            const auto got = circuits::read_branch_registers(basis, spec.layout);
            const PathScore score = path_profit(path, inst.a, inst.b, model);
            const bool ok = want == got && std::abs(std::norm(amp) - expected_prob) <= kAmplitudeTolerance &&
                            got.valid == score.valid &&
                            (!score.valid || got.profit == static_cast<std::uint64_t>(score.profit));
            if (!ok) {
                if (mismatches == 0)
                    first_mismatch = {{"instance", label(inst)},
                                      {"path", path.str()},
                                      {"expected_profit", want.profit},
                                      {"circuit_profit", got.profit}};
                ++mismatches;
            }
        });
        branches += seen;
        if (seen != (std::size_t{1} << step.width))
            ++mismatches;
    }
    return {"classical_track",
            mismatches == 0,
            {{"instances", instances.size()},
             {"branches", branches},
             {"mismatches", mismatches},
             {"first_mismatch", first_mismatch}}};
}

double run_both(const circuits::CircuitSpec &spec, const circuits::CircuitSpec *prefix = nullptr)
{
    auto dense = qsim::make_state(qsim::Backend::Dense, spec.layout.total_qubits());
    auto sparse = qsim::make_state(qsim::Backend::Sparse, spec.layout.total_qubits());
    for (auto *s : {dense.get(), sparse.get()}) {
        if (prefix != nullptr)
            qsim::apply_all(*s, prefix->gates);
        qsim::apply_all(*s, spec.gates);
    }
    return qsim::max_amplitude_difference(*dense, *sparse);
}

/// Hadamard and a distinct phase on every qubit, so no amplitude is trivially zero.
circuits::CircuitSpec scramble(const qsim::RegisterLayout &layout)
{
    circuits::CircuitBuilder b(layout);
    for (qsim::Qubit q = 0; q < layout.total_qubits(); ++q) {
        b.h(q);
        b.phase(q, 0.37 * (q + 1));
    }
    return std::move(b).build();
}

CheckResult backend_equivalence(const std::vector<Instance> &instances, const VerifyConfig &cfg)
{
    circuits::ProfitCircuitOptions opts;
    opts.char_mode = cfg.char_mode;
    std::vector<std::pair<std::string, double>> cases;

    auto scrambled = [](const circuits::CircuitSpec &spec) {
        const auto prefix = scramble(spec.layout);
        return run_both(spec, &prefix);
    };
    cases.emplace_back("qft_4", scrambled(circuits::build_qft(4)));
    cases.emplace_back("iqft_4", scrambled(circuits::build_iqft(4)));
    cases.emplace_back("add_const_4_plus_5", scrambled(circuits::build_add_const(4, 5, 1)));
    cases.emplace_back("incrementer_4", scrambled(circuits::build_incrementer(4)));
    const std::vector<std::uint8_t> table{0, 1, 2, 3, 2};
    cases.emplace_back("qram_loader", scrambled(circuits::build_qram_loader(table, 3)));

    // The widest instances that still fit the dense backend.
    std::vector<std::pair<std::size_t, const Instance *>> by_width;
    for (const Instance &inst : instances)
        by_width.emplace_back(circuits::make_profit_layout(inst.a.size(), inst.b.size(), opts).total_qubits(), &inst);
    std::stable_sort(by_width.begin(), by_width.end(), [](const auto &l, const auto &r) { return l.first > r.first; });
    std::size_t dense_profit = 0;
    for (const auto &[width, inst] : by_width) {
        if (width > kDenseQubitLimit)
            continue;
        if (dense_profit++ == kDenseInstances)
            break;
        cases.emplace_back("profit_" + label(*inst), run_both(circuits::build_full_profit_circuit(inst->a, inst->b, opts)));
    }
    for (const auto &[width, inst] : by_width) {
        if (grover::search_qubits(inst->a.size(), inst->b.size(), opts) > kDenseQubitLimit || inst->a.empty() ||
            inst->b.empty())
            continue;
        const auto oracle = grover::build_phase_oracle(inst->a, inst->b, -1, opts);
        const auto round = [&] {
            circuits::CircuitBuilder b(oracle.layout);
            b.append(oracle);
            b.append(grover::build_diffusion(oracle.layout));
            return std::move(b).build();
        }();
        const auto prepare = grover::build_uniform_preparation(oracle.layout);
        cases.emplace_back("grover_round_" + label(*inst), run_both(round, &prepare));
        break;
    }

    double worst = 0.0;
    ordered_json detail_cases = ordered_json::array();
    for (const auto &[name, diff] : cases) {
        worst = std::max(worst, diff);
        detail_cases.push_back({{"circuit", name}, {"max_difference", diff}});
    }
    return {"backend_equivalence",
            worst <= kAmplitudeTolerance,
            {{"tolerance", kAmplitudeTolerance}, {"max_difference", worst}, {"cases", detail_cases}}};
}

CheckResult dp_brute_agreement(const std::vector<Instance> &instances)
{
    std::size_t disagreements = 0;
    for (const Instance &inst : instances) {
        const auto dp = oracles::dp_max(inst.a, inst.b);
        const auto brute = oracles::brute_force_max(inst.a, inst.b);
        const PathScore rescored = path_profit(dp.path, inst.a, inst.b);
        if (dp.max_profit != brute.max_profit || !rescored.valid || rescored.profit != dp.max_profit)
            ++disagreements;
    }
    return {"dp_brute_agreement",
            disagreements == 0,
            {{"instances", instances.size()}, {"disagreements", disagreements}}};
}

struct QuantumOutcome {
    CheckResult success;
    CheckResult budget;
};

QuantumOutcome quantum_runs(const std::vector<Instance> &instances, qsim::Rng &rng, const VerifyConfig &cfg)
{
    std::size_t optimal = 0;
    std::size_t unsound = 0;
    std::size_t over_budget = 0;
    std::size_t max_iterations = 0;
    for (std::size_t run = 0; run < cfg.trials; ++run) {
        const Instance &inst = instances[run % instances.size()];
        grover::SearchConfig sc;
        sc.budget_c = cfg.budget_c;
        sc.seed = rng.next();
        sc.circuit.char_mode = cfg.char_mode;
        sc.max_qubits = cfg.max_qubits;
        const auto [result, trace] = grover::find_max(inst.a, inst.b, sc);

        const long long best = oracles::dp_max(inst.a, inst.b).max_profit;
        if (result.found) {
            const PathScore rescored = path_profit(result.path, inst.a, inst.b);
            const bool sound = rescored.valid && rescored.profit == result.profit &&
                               path_of(result.alignment) == result.path &&
                               result.alignment.profit == result.profit;
            unsound += sound ? 0 : 1;
            optimal += sound && result.profit == best ? 1 : 0;
        }
        const auto t = static_cast<double>(inst.a.size() + inst.b.size());
        const double allowed = cfg.budget_c * std::sqrt(std::pow(4.0, t));
        if (static_cast<double>(trace.total_iterations) > allowed)
            ++over_budget;
        max_iterations = std::max(max_iterations, trace.total_iterations);
    }
    const double rate = static_cast<double>(optimal) / static_cast<double>(cfg.trials);
    return {{"quantum_success",
             rate >= kRequiredSuccessRate && unsound == 0,
             {{"runs", cfg.trials},
              {"instances", instances.size()},
              {"optimal", optimal},
              {"success_rate", rate},
              {"required_rate", kRequiredSuccessRate},
              {"unsound", unsound}}},
            {"iteration_budget",
             over_budget == 0,
             {{"budget_c", cfg.budget_c}, {"runs_over_budget", over_budget}, {"max_total_iterations", max_iterations}}}};
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyConfig &cfg)
{
    if (cfg.max_len == 0)
        throw ValidationError("--max-len must be at least 1");
    if (cfg.trials == 0)
        throw ValidationError("--trials must be at least 1");
    circuits::ProfitCircuitOptions opts;
    opts.char_mode = cfg.char_mode;
    if (grover::search_qubits(cfg.max_len, cfg.max_len, opts) > cfg.max_qubits)
        throw InstanceTooLarge("instance too large for full quantum verification: length " +
                               std::to_string(cfg.max_len) + " needs " +
                               std::to_string(grover::search_qubits(cfg.max_len, cfg.max_len, opts)) +
                               " qubits, limit " + std::to_string(cfg.max_qubits));

    qsim::Rng rng(cfg.seed);
    std::vector<Instance> track;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            track.push_back({Sequence({decode_base(static_cast<std::uint8_t>(a))}),
                             Sequence({decode_base(static_cast<std::uint8_t>(b))})});
    for (std::size_t i = 0; i < cfg.trials; ++i)
        track.push_back(random_instance(rng, 0, cfg.max_len));

    std::vector<Instance> search;
    const std::size_t count = std::min(cfg.trials, std::max(kMinQuantumInstances, (cfg.trials + 4) / 5));
    for (std::size_t i = 0; i < count; ++i)
        search.push_back(random_instance(rng, 1, cfg.max_len));

    std::vector<CheckResult> checks;
    checks.push_back(classical_track(track, cfg));
    checks.push_back(backend_equivalence(std::vector<Instance>(track.begin() + 16, track.end()), cfg));
    checks.push_back(dp_brute_agreement(track));
    auto [success, budget] = quantum_runs(search, rng, cfg);
    checks.push_back(std::move(success));
    checks.push_back(std::move(budget));
    return checks;
}

} // namespace qpalign::cli
