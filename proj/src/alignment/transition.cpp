#include "qpalign/alignment/transition.hpp"

#include "qpalign/error.hpp"

#include <cctype>

namespace qpalign {

char letter_of(Direction d) noexcept
{
    static constexpr char letters[] = {'N', 'V', 'H', 'D'};
    return letters[code_of(d)];
}

TransitionString TransitionString::parse(std::string_view letters)
{
    std::vector<Direction> steps;
    steps.reserve(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
        switch (std::toupper(static_cast<unsigned char>(letters[i]))) {
        case 'N':
            steps.push_back(Direction::None);
            break;
        case 'V':
            steps.push_back(Direction::Vertical);
            break;
        case 'H':
            steps.push_back(Direction::Horizontal);
            break;
        case 'D':
            steps.push_back(Direction::Diagonal);
            break;
        default:
            throw ValidationError("invalid transition letter '" + std::string(1, letters[i]) +
                                  "' at position " + std::to_string(i + 1));
        }
    }
    return TransitionString(std::move(steps));
}

TransitionString TransitionString::from_step_bits(std::uint64_t bits, std::size_t length)
{
    if (length > 32)
        throw ContractViolation("step register wider than 64 bits");
    std::vector<Direction> steps(length);
    for (std::size_t i = 0; i < length; ++i)
        steps[i] = direction_from_code(static_cast<std::uint8_t>(bits >> (2 * i)));
    return TransitionString(std::move(steps));
}

std::uint64_t TransitionString::to_step_bits() const
{
    if (steps_.size() > 32)
        throw ContractViolation("step register wider than 64 bits");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i)
        bits |= static_cast<std::uint64_t>(code_of(steps_[i])) << (2 * i);
    return bits;
}

std::pair<std::size_t, std::size_t> TransitionString::displacement() const noexcept
{
    std::size_t h = 0;
    std::size_t v = 0;
    for (Direction d : steps_) {
        h += moves_horizontal(d);
        v += moves_vertical(d);
    }
    return {h, v};
}

TransitionString TransitionString::canonical() const
{
    std::vector<Direction> out;
    out.reserve(steps_.size());
    for (Direction d : steps_)
        if (d != Direction::None)
            out.push_back(d);
    return TransitionString(std::move(out));
}

TransitionString TransitionString::padded(std::size_t length) const
{
    if (steps_.size() > length)
        throw ContractViolation("path of length " + std::to_string(steps_.size()) + " cannot be padded to " +
                                std::to_string(length));
    auto out = steps_;
    out.resize(length, Direction::None);
    return TransitionString(std::move(out));
}

std::string TransitionString::str() const
{
    std::string out;
    out.reserve(steps_.size());
    for (Direction d : steps_)
        out.push_back(letter_of(d));
    return out;
}

} // namespace qpalign
