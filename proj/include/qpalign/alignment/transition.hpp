#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qpalign {

/**
 * One edit-graph move. The code's high bit is the horizontal component and
 * the low bit the vertical one, so 00 is "stay", 01 down, 10 right, 11 diagonal.
 */
enum class Direction : std::uint8_t { None = 0b00, Vertical = 0b01, Horizontal = 0b10, Diagonal = 0b11 };

constexpr std::uint8_t code_of(Direction d) noexcept { return static_cast<std::uint8_t>(d); }
constexpr Direction direction_from_code(std::uint8_t code) noexcept { return static_cast<Direction>(code & 0b11); }
constexpr bool moves_horizontal(Direction d) noexcept { return (code_of(d) & 0b10) != 0; }
constexpr bool moves_vertical(Direction d) noexcept { return (code_of(d) & 0b01) != 0; }

/// 'N', 'V', 'H' or 'D'.
char letter_of(Direction d) noexcept;

/**
 * Fixed-length walk through the edit graph.
 *
 * Letters: N (none), V, H, D. In the packed step-register form step i
 * occupies bits 2i (vertical) and 2i+1 (horizontal).
 */
class TransitionString {
  public:
    TransitionString() = default;
    explicit TransitionString(std::vector<Direction> steps) : steps_(std::move(steps)) {}

    /// Parses letters N/V/H/D (case-insensitive). Throws ValidationError.
    static TransitionString parse(std::string_view letters);
    static TransitionString from_step_bits(std::uint64_t bits, std::size_t length);

    [[nodiscard]] std::uint64_t to_step_bits() const;
    [[nodiscard]] std::size_t size() const noexcept { return steps_.size(); }
    [[nodiscard]] bool empty() const noexcept { return steps_.empty(); }
    [[nodiscard]] Direction operator[](std::size_t i) const { return steps_[i]; }
    [[nodiscard]] const std::vector<Direction> &steps() const noexcept { return steps_; }

    /// Total (horizontal, vertical) displacement.
    [[nodiscard]] std::pair<std::size_t, std::size_t> displacement() const noexcept;

    /// Drops every None step.
    [[nodiscard]] TransitionString canonical() const;
    /// Appends None steps up to `length`; throws ContractViolation if already longer.
    [[nodiscard]] TransitionString padded(std::size_t length) const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const TransitionString &, const TransitionString &) = default;
    friend auto operator<=>(const TransitionString &a, const TransitionString &b) { return a.steps_ <=> b.steps_; }

  private:
    std::vector<Direction> steps_;
};

} // namespace qpalign
