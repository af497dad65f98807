#pragma once

#include "qpalign/alignment/alignment.hpp"
#include "qpalign/alignment/sequence.hpp"
#include "qpalign/alignment/transition.hpp"
#include "qpalign/circuits/profit_circuit.hpp"
#include "qpalign/qsim/state.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace qpalign::grover {

inline constexpr std::size_t kDefaultMaxQubits = 28;

/**
 * Maximum-finding driver settings.
 *
 * The run spends at most floor(budget_c * sqrt(N)) Grover iterations, N = 4^t.
 * Each round draws its iteration count uniformly below the schedule bound,
 * which grows by `growth` after a failed round and resets to 1 after an
 * improvement.
 */
struct SearchConfig {
    double budget_c = 3.0;
    double growth = 8.0 / 7.0;
    std::uint64_t seed = 0;
    /// 0 selects 2 * budget + 8.
    std::size_t max_rounds = 0;
    circuits::ProfitCircuitOptions circuit;
    qsim::Backend backend = qsim::Backend::Sparse;
    std::size_t max_qubits = kDefaultMaxQubits;

    /// Throws ValidationError.
    void validate() const;
};

struct SearchRound {
    std::size_t iterations = 0;
    /// Measured step register, packed as in TransitionString::to_step_bits.
    std::uint64_t measured = 0;
    long long profit = 0;
    bool valid = false;
    bool accepted = false;
    long long threshold_after = -1;

    friend bool operator==(const SearchRound &, const SearchRound &) = default;
};

struct SearchTrace {
    std::uint64_t initial_sample = 0;
    long long initial_threshold = -1;
    std::vector<SearchRound> rounds;
    std::size_t total_iterations = 0;
    std::size_t budget = 0;

    friend bool operator==(const SearchTrace &, const SearchTrace &) = default;
};

struct AlignmentResult {
    /// False only if no valid path was ever observed.
    bool found = false;
    long long profit = 0;
    /// Canonical (None-free) winning path.
    TransitionString path;
    Alignment alignment;
    std::size_t step_count = 0;
    std::size_t qubits = 0;
};

/// Qubits the search needs for this instance.
std::size_t search_qubits(std::size_t m, std::size_t n, const circuits::ProfitCircuitOptions &opts = {});

/**
 * Grover maximum finding over the 4^t step branches.
 *
 * The threshold starts at the classical score of one uniformly drawn
 * branch (-1 if that branch is invalid). Every measured branch is
 * re-scored classically and accepted only if it is valid and beats the
 * threshold. Stops when the iteration budget or round limit is exhausted,
 * or once the threshold reaches the instance's profit bound.
 *
 * Throws InstanceTooLarge above `max_qubits`, ValidationError on a bad config.
 */
std::pair<AlignmentResult, SearchTrace> find_max(const Sequence &horizontal, const Sequence &vertical,
                                                 const SearchConfig &config = {});

} // namespace qpalign::grover
