#pragma once

#include "qpalign/qsim/gate.hpp"

#include <cstdint>

namespace qpalign::qsim::detail {

/// A gate's controls folded into "(index & mask) == value".
struct ControlPattern {
    std::uint64_t mask = 0;
    std::uint64_t value = 0;

    [[nodiscard]] bool fires(std::uint64_t index) const noexcept { return (index & mask) == value; }
};

inline ControlPattern control_pattern(const Gate &g) noexcept
{
    ControlPattern p;
    for (const Control &c : g.controls) {
        const std::uint64_t bit = std::uint64_t{1} << c.qubit;
        p.mask |= bit;
        if (c.positive)
            p.value |= bit;
    }
    return p;
}

inline std::uint64_t bit_of(Qubit q) noexcept { return std::uint64_t{1} << q; }

} // namespace qpalign::qsim::detail
