#include "qpalign/oracles/classical.hpp"

#include "qpalign/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace qpalign::oracles {

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) noexcept
{
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    return a > max - b ? max : a + b;
}

class Enumerator {
  public:
    Enumerator(const Sequence &h, const Sequence &v, const ProfitParams &p) : h_(h), v_(v), p_(p) {}

    OracleResult run()
    {
        walk(0, 0, 0);
        std::sort(result_.optimal_paths.begin(), result_.optimal_paths.end());
        return std::move(result_);
    }

  private:
    void walk(std::size_t i, std::size_t j, long long profit)
    {
        if (i == h_.size() && j == v_.size()) {
            ++result_.path_count_examined;
            if (result_.path_count_examined == 1 || profit > result_.max_profit) {
                result_.max_profit = profit;
                result_.optimal_paths.clear();
            }
            if (profit == result_.max_profit)
                result_.optimal_paths.emplace_back(stack_);
            return;
        }
        if (i < h_.size() && j < v_.size()) {
            stack_.push_back(Direction::Diagonal);
            walk(i + 1, j + 1, profit + step_profit(Direction::Diagonal, h_[i], v_[j], p_));
            stack_.pop_back();
        }
        if (i < h_.size()) {
            stack_.push_back(Direction::Horizontal);
            walk(i + 1, j, profit + p_.x);
            stack_.pop_back();
        }
        if (j < v_.size()) {
            stack_.push_back(Direction::Vertical);
            walk(i, j + 1, profit + p_.x);
            stack_.pop_back();
        }
    }

    const Sequence &h_;
    const Sequence &v_;
    const ProfitParams &p_;
    std::vector<Direction> stack_;
    OracleResult result_;
};

} // namespace

OracleResult brute_force_max(const Sequence &horizontal, const Sequence &vertical, const ProfitParams &p,
                             std::uint64_t limit)
{
    const std::uint64_t paths = count_paths(horizontal.size(), vertical.size());
    if (paths > limit)
        throw InstanceTooLarge("brute force would enumerate " + std::to_string(paths) + " paths (limit " +
                               std::to_string(limit) + ")");
    return Enumerator(horizontal, vertical, p).run();
}

DpResult dp_max(const Sequence &horizontal, const Sequence &vertical, const ProfitParams &p)
{
    const std::size_t m = horizontal.size();
    const std::size_t n = vertical.size();
    const std::size_t stride = n + 1;
    // best[i*stride + j]: maximum profit from node (i, j) to (m, n).
    std::vector<long long> best((m + 1) * stride, 0);
    auto at = [&](std::size_t i, std::size_t j) -> long long & { return best[i * stride + j]; };
    auto diag = [&](std::size_t i, std::size_t j) {
        return static_cast<long long>(step_profit(Direction::Diagonal, horizontal[i], vertical[j], p));
    };

    for (std::size_t i = m + 1; i-- > 0;) {
        for (std::size_t j = n + 1; j-- > 0;) {
            if (i == m && j == n)
                continue;
            long long value = std::numeric_limits<long long>::min();
            if (i < m && j < n)
                value = std::max(value, at(i + 1, j + 1) + diag(i, j));
            if (i < m)
                value = std::max(value, at(i + 1, j) + p.x);
            if (j < n)
                value = std::max(value, at(i, j + 1) + p.x);
            at(i, j) = value;
        }
    }

    DpResult out;
    out.max_profit = at(0, 0);
    std::vector<Direction> steps;
    steps.reserve(m + n);
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < m || j < n) {
        const long long here = at(i, j);
        if (i < m && j < n && at(i + 1, j + 1) + diag(i, j) == here) {
            steps.push_back(Direction::Diagonal);
            ++i;
            ++j;
        } else if (i < m && at(i + 1, j) + p.x == here) {
            steps.push_back(Direction::Horizontal);
            ++i;
        } else {
            steps.push_back(Direction::Vertical);
            ++j;
        }
    }
    out.path = TransitionString(std::move(steps));
    return out;
}

std::uint64_t count_paths(std::size_t m, std::size_t n)
{
    if (m < n)
        std::swap(m, n);
    std::vector<std::uint64_t> row(n + 1, 1);
    for (std::size_t i = 1; i <= m; ++i) {
        std::uint64_t diag = row[0];
        for (std::size_t j = 1; j <= n; ++j) {
            const std::uint64_t up = row[j];
            row[j] = saturating_add(saturating_add(up, row[j - 1]), diag);
            diag = up;
        }
    }
    return row[n];
}

std::size_t edit_distance(const Sequence &a, const Sequence &b)
{
    std::vector<std::size_t> row(b.size() + 1);
    std::iota(row.begin(), row.end(), std::size_t{0});
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            row[j] = std::min({up + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

} // namespace qpalign::oracles
