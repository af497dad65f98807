#pragma once

#include "qpalign/qsim/gate.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qpalign::qsim {

struct Register {
    std::string name;
    std::size_t offset = 0;
    std::size_t width = 0;

    /// Qubit `i` of this register; bit 0 is the least significant.
    [[nodiscard]] Qubit operator[](std::size_t i) const { return static_cast<Qubit>(offset + i); }
    [[nodiscard]] std::vector<Qubit> qubits() const;
    /// Mask of this register's bits within a basis index.
    [[nodiscard]] std::uint64_t mask() const noexcept;
    /// Register value inside basis index `basis`.
    [[nodiscard]] std::uint64_t read(std::uint64_t basis) const noexcept;

    friend bool operator==(const Register &, const Register &) = default;
};

/**
 * Named, contiguous, non-overlapping registers appended in order. Qubit 0 is
 * the least-significant bit of the first register. Zero-width registers are
 * allowed and own no qubits.
 */
class RegisterLayout {
  public:
    const Register &add(std::string name, std::size_t width);

    [[nodiscard]] const Register *find(std::string_view name) const noexcept;
    /// Throws ContractViolation when absent.
    [[nodiscard]] const Register &at(std::string_view name) const;
    [[nodiscard]] bool contains(std::string_view name) const noexcept { return find(name) != nullptr; }
    [[nodiscard]] const std::vector<Register> &registers() const noexcept { return registers_; }
    [[nodiscard]] std::size_t total_qubits() const noexcept { return total_; }

    friend bool operator==(const RegisterLayout &, const RegisterLayout &) = default;

  private:
    std::vector<Register> registers_;
    std::size_t total_ = 0;
};

} // namespace qpalign::qsim
