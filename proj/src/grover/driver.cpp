#include "qpalign/grover/driver.hpp"

#include "qpalign/error.hpp"
#include "qpalign/grover/oracle.hpp"

#include <cmath>
#include <map>
#include <string>

namespace qpalign::grover {

void SearchConfig::validate() const
{
    if (!(budget_c > 0.0) || !std::isfinite(budget_c))
        throw ValidationError("budget multiplier must be positive");
    if (!(growth > 1.0 && growth <= 4.0 / 3.0))
        throw ValidationError("schedule growth must lie in (1, 4/3]");
    circuit.params.validate();
}

std::size_t search_qubits(std::size_t m, std::size_t n, const circuits::ProfitCircuitOptions &opts)
{
    return circuits::make_profit_layout(m, n, opts, true).total_qubits();
}

std::pair<AlignmentResult, SearchTrace> find_max(const Sequence &horizontal, const Sequence &vertical,
                                                 const SearchConfig &config)
{
    config.validate();
    const std::size_t m = horizontal.size();
    const std::size_t n = vertical.size();
    const auto layout = circuits::make_profit_layout(m, n, config.circuit, true);
    if (layout.total_qubits() > config.max_qubits)
        throw InstanceTooLarge("instance needs " + std::to_string(layout.total_qubits()) +
                               " qubits; the simulation limit is " + std::to_string(config.max_qubits));

    const std::size_t t = layout.at("step").width / 2;
    const double sqrt_n = std::ldexp(1.0, static_cast<int>(t));
    const auto budget = static_cast<std::size_t>(std::floor(config.budget_c * sqrt_n));
    const std::size_t max_rounds = config.max_rounds != 0 ? config.max_rounds : 2 * budget + 8;
    const long long ceiling = max_profit_bound(m, n, config.circuit.params);
    const auto step_qubits = layout.at("step").qubits();
    const ProfitParams &params = config.circuit.params;

    qsim::Rng rng(config.seed);
    SearchTrace trace;
    trace.budget = budget;
    AlignmentResult result;
    result.step_count = t;
    result.qubits = layout.total_qubits();

    std::uint64_t best = 0;
    auto consider = [&](std::uint64_t bits, long long threshold, SearchRound *round) {
        const auto path = TransitionString::from_step_bits(bits, t);
        const PathScore score = path_profit(path, horizontal, vertical, params);
        const bool improves = score.valid && score.profit > threshold;
        if (round != nullptr) {
            round->measured = bits;
            round->profit = score.profit;
            round->valid = score.valid;
            round->accepted = improves;
        }
        if (improves) {
            best = bits;
            result.found = true;
        }
        return improves ? static_cast<long long>(score.profit) : threshold;
    };

    const std::uint64_t branches = std::uint64_t{1} << (2 * t);
    trace.initial_sample = rng.below(branches);
    long long threshold = consider(trace.initial_sample, -1, nullptr);
    trace.initial_threshold = threshold;

    const CircuitSpec prepare = build_uniform_preparation(layout);
    const CircuitSpec diffusion = build_diffusion(layout);
    std::map<long long, CircuitSpec> oracles;
    double bound = 1.0;

    while (trace.rounds.size() < max_rounds && trace.total_iterations < budget && threshold < ceiling) {
        SearchRound round;
        const auto limit = static_cast<std::uint64_t>(std::ceil(bound));
        round.iterations = static_cast<std::size_t>(rng.below(limit));
        round.iterations = std::min(round.iterations, budget - trace.total_iterations);

        auto it = oracles.find(threshold);
        if (it == oracles.end())
            it = oracles.emplace(threshold, build_phase_oracle(horizontal, vertical, threshold, config.circuit))
                     .first;

        auto state = qsim::make_state(config.backend, layout.total_qubits());
        qsim::apply_all(*state, prepare.gates);
        grover_iterate(*state, it->second, diffusion, round.iterations);
        const auto outcome = qsim::measure(*state, step_qubits, rng);
        trace.total_iterations += round.iterations;

        const long long next = consider(outcome.outcome, threshold, &round);
        if (round.accepted) {
            threshold = next;
            bound = 1.0;
        } else {
            bound = std::min(bound * config.growth, sqrt_n);
        }
        round.threshold_after = threshold;
        trace.rounds.push_back(round);
    }

    if (result.found) {
        const auto path = TransitionString::from_step_bits(best, t);
        result.profit = threshold;
        result.path = path.canonical();
        result.alignment = decode_alignment(path, horizontal, vertical, params);
    }
    return {std::move(result), std::move(trace)};
}

} // namespace qpalign::grover
