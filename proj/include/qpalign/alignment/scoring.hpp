#pragma once

#include "qpalign/alignment/sequence.hpp"
#include "qpalign/alignment/transition.hpp"

#include <cstddef>
#include <optional>

namespace qpalign {

/**
 * Additive step profits: an indel earns `x`, a diagonal mismatch `x + y`
 * and a diagonal match `x + z`. Requires x > 0, y > 0, z > y.
 */
struct ProfitParams {
    int x = 1;
    int y = 1;
    int z = 2;

    /// Throws ValidationError when the constraints do not hold.
    void validate() const;

    friend bool operator==(const ProfitParams &, const ProfitParams &) = default;
};

/// Profit of a single move. `ch`/`cv` are the characters consumed on each axis.
/// A diagonal without both characters is a ContractViolation.
int step_profit(Direction tr, std::optional<Base> ch, std::optional<Base> cv, const ProfitParams &p = {});

struct PathScore {
    int profit = 0;
    bool valid = false;

    friend bool operator==(const PathScore &, const PathScore &) = default;
};

/**
 * Scores `path` over the grid of `horizontal` x `vertical`.
 *
 * Scoring stops at the first step that would leave the grid; such a path is
 * reported invalid together with the profit accumulated before the overrun.
 * A path that stays inside but does not end at (m, n) is also invalid.
 */
PathScore path_profit(const TransitionString &path, const Sequence &horizontal, const Sequence &vertical,
                      const ProfitParams &p = {});

/// True iff `path` ends at (m, n) and never overruns either axis.
bool is_valid_path(const TransitionString &path, std::size_t m, std::size_t n) noexcept;

struct TransitionBounds {
    std::size_t t_min = 0;
    std::size_t t_max = 0;

    friend bool operator==(const TransitionBounds &, const TransitionBounds &) = default;
};

/// Fewest and most moves any alignment of lengths m and n needs.
TransitionBounds transition_bounds(std::size_t m, std::size_t n) noexcept;

/**
 * Upper bound on the profit of any valid path.
 *
 * For z >= x this is min(m,n)(x+z) + |m-n|x; with the defaults it reduces to
 * 3n + (m-n) for m >= n. For z < x pairing characters never pays, and the
 * bound becomes (m+n)x.
 */
long long max_profit_bound(std::size_t m, std::size_t n, const ProfitParams &p = {});

struct GridModel {
    std::size_t m = 0;
    std::size_t n = 0;

    [[nodiscard]] std::size_t node_count() const noexcept { return (m + 1) * (n + 1); }
};

} // namespace qpalign
