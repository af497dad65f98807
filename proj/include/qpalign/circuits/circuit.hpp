#pragma once

#include "qpalign/qsim/gate.hpp"
#include "qpalign/qsim/layout.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qpalign::circuits {

using qsim::Control;
using qsim::Gate;
using qsim::Qubit;
using qsim::RegisterLayout;
using qsim::neg;
using qsim::pos;

/// Named half-open gate range [begin, end). Sections may nest.
struct Section {
    std::string name;
    std::size_t begin = 0;
    std::size_t end = 0;

    friend bool operator==(const Section &, const Section &) = default;
};

/**
 * Gate list over a register layout, plus named sub-circuit boundaries.
 * Immutable once built.
 */
struct CircuitSpec {
    RegisterLayout layout;
    std::vector<Gate> gates;
    std::vector<Section> sections;

    [[nodiscard]] std::size_t gate_count() const noexcept { return gates.size(); }
    /// Length of the longest chain of gates sharing a qubit.
    [[nodiscard]] std::size_t depth() const;
    /// Reverses the gate order and inverts each gate; sections are mirrored.
    [[nodiscard]] CircuitSpec inverse() const;
    /// Throws ContractViolation if any gate falls outside the layout.
    void validate() const;
    [[nodiscard]] std::size_t count_sections(std::string_view name) const;
};

/**
 * Accumulates gates into a CircuitSpec. Fragment emitters in this module
 * take a builder and absolute qubit indices so they compose freely.
 */
class CircuitBuilder {
  public:
    explicit CircuitBuilder(RegisterLayout layout) : spec_{std::move(layout), {}, {}} {}

    [[nodiscard]] const RegisterLayout &layout() const noexcept { return spec_.layout; }
    [[nodiscard]] std::size_t size() const noexcept { return spec_.gates.size(); }

    void add(Gate g) { spec_.gates.push_back(std::move(g)); }
    void h(Qubit q) { add(Gate::h(q)); }
    void x(Qubit target, std::vector<Control> controls = {}) { add(Gate::x(target, std::move(controls))); }
    void phase(Qubit target, double angle, std::vector<Control> controls = {})
    {
        add(Gate::phase(target, angle, std::move(controls)));
    }
    void swap(Qubit a, Qubit b) { add(Gate::swap(a, b)); }

    /// Appends the gates (and sections, shifted) of a circuit over the same qubit numbering.
    void append(const CircuitSpec &other);

    std::size_t open_section(std::string name);
    void close_section(std::size_t handle);

    [[nodiscard]] CircuitSpec build() &&;

  private:
    CircuitSpec spec_;
};

/// RAII section marker.
class ScopedSection {
  public:
    ScopedSection(CircuitBuilder &b, std::string name) : b_(b), handle_(b.open_section(std::move(name))) {}
    ~ScopedSection() { b_.close_section(handle_); }
    ScopedSection(const ScopedSection &) = delete;
    ScopedSection &operator=(const ScopedSection &) = delete;

  private:
    CircuitBuilder &b_;
    std::size_t handle_;
};

} // namespace qpalign::circuits
