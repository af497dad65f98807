#include "qpalign/alignment/scoring.hpp"

#include "qpalign/error.hpp"

#include <algorithm>
#include <string>

namespace qpalign {

void ProfitParams::validate() const
{
    if (x <= 0 || y <= 0 || z <= 0)
        throw ValidationError("profit parameters must be positive (x=" + std::to_string(x) +
                              ", y=" + std::to_string(y) + ", z=" + std::to_string(z) + ")");
    if (z <= y)
        throw ValidationError("profit parameter z must exceed y");
}

int step_profit(Direction tr, std::optional<Base> ch, std::optional<Base> cv, const ProfitParams &p)
{
    switch (tr) {
    case Direction::None:
        return 0;
    case Direction::Horizontal:
    case Direction::Vertical:
        return p.x;
    case Direction::Diagonal:
        if (!ch || !cv)
            throw ContractViolation("diagonal step needs both characters");
        return *ch == *cv ? p.x + p.z : p.x + p.y;
    }
    return 0;
}

PathScore path_profit(const TransitionString &path, const Sequence &horizontal, const Sequence &vertical,
                      const ProfitParams &p)
{
    const std::size_t m = horizontal.size();
    const std::size_t n = vertical.size();
    std::size_t h = 0;
    std::size_t v = 0;
    PathScore score;
    for (Direction d : path.steps()) {
        const std::size_t nh = h + moves_horizontal(d);
        const std::size_t nv = v + moves_vertical(d);
        if (nh > m || nv > n)
            return score;
        std::optional<Base> ch;
        std::optional<Base> cv;
        if (moves_horizontal(d))
            ch = horizontal[h];
        if (moves_vertical(d))
            cv = vertical[v];
        score.profit += step_profit(d, ch, cv, p);
        h = nh;
        v = nv;
    }
    score.valid = h == m && v == n;
    return score;
}

bool is_valid_path(const TransitionString &path, std::size_t m, std::size_t n) noexcept
{
    std::size_t h = 0;
    std::size_t v = 0;
    for (Direction d : path.steps()) {
        h += moves_horizontal(d);
        v += moves_vertical(d);
        if (h > m || v > n)
            return false;
    }
    return h == m && v == n;
}

TransitionBounds transition_bounds(std::size_t m, std::size_t n) noexcept { return {std::max(m, n), m + n}; }

long long max_profit_bound(std::size_t m, std::size_t n, const ProfitParams &p)
{
    const auto lo = static_cast<long long>(std::min(m, n));
    const auto total = static_cast<long long>(m + n);
    return total * p.x + lo * std::max(0, p.z - p.x);
}

} // namespace qpalign
