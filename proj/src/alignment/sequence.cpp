#include "qpalign/alignment/sequence.hpp"

#include "qpalign/error.hpp"

#include <cctype>

namespace qpalign {

namespace {

bool lookup(char symbol, Base &out) noexcept
{
    switch (std::toupper(static_cast<unsigned char>(symbol))) {
    case 'A':
        out = Base::A;
        return true;
    case 'C':
        out = Base::C;
        return true;
    case 'G':
        out = Base::G;
        return true;
    case 'T':
        out = Base::T;
        return true;
    default:
        return false;
    }
}

std::string printable(char c)
{
    if (std::isprint(static_cast<unsigned char>(c)))
        return std::string(1, c);
    return "\\x" + std::to_string(static_cast<unsigned char>(c));
}

} // namespace

std::uint8_t encode_base(char symbol)
{
    Base b{};
    if (!lookup(symbol, b))
        throw ValidationError("invalid nucleotide '" + printable(symbol) + "'");
    return code_of(b);
}

Base decode_base(std::uint8_t code) noexcept { return static_cast<Base>(code & 0b11); }

char to_char(Base base) noexcept
{
    static constexpr char letters[] = {'A', 'C', 'G', 'T'};
    return letters[code_of(base)];
}

Sequence Sequence::parse(std::string_view text)
{
    std::vector<Base> bases;
    bases.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        Base b{};
        if (!lookup(text[i], b))
            throw ValidationError("invalid nucleotide '" + printable(text[i]) + "' at position " +
                                  std::to_string(i + 1));
        bases.push_back(b);
    }
    return Sequence(std::move(bases));
}

std::vector<std::uint8_t> Sequence::codes() const
{
    std::vector<std::uint8_t> out;
    out.reserve(bases_.size());
    for (Base b : bases_)
        out.push_back(code_of(b));
    return out;
}

std::string Sequence::str() const
{
    std::string out;
    out.reserve(bases_.size());
    for (Base b : bases_)
        out.push_back(to_char(b));
    return out;
}

} // namespace qpalign
