#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qpalign {

/**
 * Nucleotide with its fixed 2-bit code: A=00, C=01, G=10, T=11.
 */
enum class Base : std::uint8_t { A = 0b00, C = 0b01, G = 0b10, T = 0b11 };

/// Returns the 2-bit code for `symbol` (case-insensitive). Throws ValidationError.
std::uint8_t encode_base(char symbol);

/// Inverse of encode_base; only the low two bits of `code` are used.
Base decode_base(std::uint8_t code) noexcept;

char to_char(Base base) noexcept;

constexpr std::uint8_t code_of(Base base) noexcept { return static_cast<std::uint8_t>(base); }

/**
 * Validated DNA string. Input is case-insensitive and stored uppercase.
 */
class Sequence {
  public:
    Sequence() = default;
    explicit Sequence(std::vector<Base> bases) : bases_(std::move(bases)) {}

    /// Throws ValidationError naming the offending character and its 1-based position.
    static Sequence parse(std::string_view text);

    [[nodiscard]] std::size_t size() const noexcept { return bases_.size(); }
    [[nodiscard]] bool empty() const noexcept { return bases_.empty(); }
    [[nodiscard]] Base operator[](std::size_t i) const { return bases_[i]; }
    [[nodiscard]] const std::vector<Base> &bases() const noexcept { return bases_; }

    /// One 2-bit code per base.
    [[nodiscard]] std::vector<std::uint8_t> codes() const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Sequence &, const Sequence &) = default;

  private:
    std::vector<Base> bases_;
};

} // namespace qpalign
