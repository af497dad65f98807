#pragma once

#include "qpalign/alignment/scoring.hpp"
#include "qpalign/alignment/sequence.hpp"
#include "qpalign/alignment/transition.hpp"

#include <cstdint>
#include <vector>

namespace qpalign::oracles {

/// Default ceiling on the number of monotone paths brute_force_max will enumerate.
inline constexpr std::uint64_t kBruteForceLimit = 10'000'000;

struct OracleResult {
    long long max_profit = 0;
    /// Canonical (None-free) maximizers in lexicographic order.
    std::vector<TransitionString> optimal_paths;
    std::uint64_t path_count_examined = 0;
};

/**
 * Exhaustive search over every monotone {H, V, D} path from (0,0) to (m,n).
 * Throws InstanceTooLarge when count_paths(m, n) exceeds `limit`.
 */
OracleResult brute_force_max(const Sequence &horizontal, const Sequence &vertical, const ProfitParams &p = {},
                             std::uint64_t limit = kBruteForceLimit);

struct DpResult {
    long long max_profit = 0;
    TransitionString path;
};

/**
 * Needleman-Wunsch style maximizer over the (m+1) x (n+1) grid.
 *
 * The traceback walks forward from (0,0) and prefers D, then H, then V
 * among moves that still reach the optimum.
 */
DpResult dp_max(const Sequence &horizontal, const Sequence &vertical, const ProfitParams &p = {});

/// Delannoy number D(m, n). Saturates at UINT64_MAX.
std::uint64_t count_paths(std::size_t m, std::size_t n);

/// Levenshtein distance with unit costs.
std::size_t edit_distance(const Sequence &a, const Sequence &b);

} // namespace qpalign::oracles
