#include "qpalign/qsim/layout.hpp"

#include "qpalign/error.hpp"

namespace qpalign::qsim {

std::vector<Qubit> Register::qubits() const
{
    std::vector<Qubit> out(width);
    for (std::size_t i = 0; i < width; ++i)
        out[i] = static_cast<Qubit>(offset + i);
    return out;
}

std::uint64_t Register::mask() const noexcept
{
    if (width == 0)
        return 0;
    const std::uint64_t ones = width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    return ones << offset;
}

std::uint64_t Register::read(std::uint64_t basis) const noexcept
{
    return width == 0 ? 0 : (basis & mask()) >> offset;
}

const Register &RegisterLayout::add(std::string name, std::size_t width)
{
    if (name.empty())
        throw ContractViolation("register name must not be empty");
    if (contains(name))
        throw ContractViolation("duplicate register '" + name + "'");
    registers_.push_back(Register{std::move(name), total_, width});
    total_ += width;
    return registers_.back();
}

const Register *RegisterLayout::find(std::string_view name) const noexcept
{
    for (const Register &r : registers_)
        if (r.name == name)
            return &r;
    return nullptr;
}

const Register &RegisterLayout::at(std::string_view name) const
{
    if (const Register *r = find(name))
        return *r;
    throw ContractViolation("no register named '" + std::string(name) + "'");
}

} // namespace qpalign::qsim
