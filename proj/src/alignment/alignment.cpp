#include "qpalign/alignment/alignment.hpp"

#include "qpalign/error.hpp"

namespace qpalign {

Alignment decode_alignment(const TransitionString &path, const Sequence &horizontal, const Sequence &vertical,
                           const ProfitParams &p)
{
    if (!is_valid_path(path, horizontal.size(), vertical.size()))
        throw ValidationError("path does not terminate at (m,n)");

    Alignment out;
    std::size_t h = 0;
    std::size_t v = 0;
    for (Direction d : path.steps()) {
        switch (d) {
        case Direction::None:
            continue;
        case Direction::Horizontal:
            out.top.push_back(to_char(horizontal[h++]));
            out.bottom.push_back(kGap);
            break;
        case Direction::Vertical:
            out.top.push_back(kGap);
            out.bottom.push_back(to_char(vertical[v++]));
            break;
        case Direction::Diagonal:
            out.top.push_back(to_char(horizontal[h++]));
            out.bottom.push_back(to_char(vertical[v++]));
            break;
        }
    }
    out.profit = path_profit(path, horizontal, vertical, p).profit;
    return out;
}

TransitionString path_of(const Alignment &alignment)
{
    if (alignment.top.size() != alignment.bottom.size())
        throw ValidationError("alignment rows differ in length");
    std::vector<Direction> steps;
    steps.reserve(alignment.top.size());
    for (std::size_t i = 0; i < alignment.top.size(); ++i) {
        const bool gap_top = alignment.top[i] == kGap;
        const bool gap_bottom = alignment.bottom[i] == kGap;
        if (gap_top && gap_bottom)
            throw ValidationError("alignment column " + std::to_string(i + 1) + " is a gap in both rows");
        steps.push_back(gap_top ? Direction::Vertical : gap_bottom ? Direction::Horizontal : Direction::Diagonal);
    }
    return TransitionString(std::move(steps));
}

} // namespace qpalign
