#pragma once

#include "qpalign/alignment/scoring.hpp"
#include "qpalign/alignment/sequence.hpp"
#include "qpalign/alignment/transition.hpp"

#include <string>

namespace qpalign {

inline constexpr char kGap = '_';

/// Two gapped rows of equal length; `top` is the horizontal sequence.
struct Alignment {
    std::string top;
    std::string bottom;
    int profit = 0;

    friend bool operator==(const Alignment &, const Alignment &) = default;
};

/**
 * Renders a valid path as a gapped alignment. None steps are skipped, so
 * paths that differ only by None padding decode identically.
 * Throws ValidationError if the path does not terminate at (m, n).
 */
Alignment decode_alignment(const TransitionString &path, const Sequence &horizontal, const Sequence &vertical,
                           const ProfitParams &p = {});

/// Recovers the canonical path of an alignment. Throws ValidationError on a gap/gap column
/// or mismatched row lengths.
TransitionString path_of(const Alignment &alignment);

} // namespace qpalign
