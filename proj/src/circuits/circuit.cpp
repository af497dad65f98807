#include "qpalign/circuits/circuit.hpp"

#include "qpalign/error.hpp"

#include <algorithm>

namespace qpalign::circuits {

std::size_t CircuitSpec::depth() const
{
    std::vector<std::size_t> level(layout.total_qubits(), 0);
    std::size_t deepest = 0;
    for (const Gate &g : gates) {
        std::size_t d = 0;
        for (Qubit q : g.targets)
            d = std::max(d, level.at(q));
        for (const Control &c : g.controls)
            d = std::max(d, level.at(c.qubit));
        ++d;
        for (Qubit q : g.targets)
            level[q] = d;
        for (const Control &c : g.controls)
            level[c.qubit] = d;
        deepest = std::max(deepest, d);
    }
    return deepest;
}

CircuitSpec CircuitSpec::inverse() const
{
    CircuitSpec out;
    out.layout = layout;
    out.gates.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it)
        out.gates.push_back(it->inverse());
    const std::size_t n = gates.size();
    for (auto it = sections.rbegin(); it != sections.rend(); ++it)
        out.sections.push_back({it->name + "_inverse", n - it->end, n - it->begin});
    return out;
}

void CircuitSpec::validate() const
{
    for (const Gate &g : gates)
        g.validate(layout.total_qubits());
    for (const Section &s : sections)
        if (s.begin > s.end || s.end > gates.size())
            throw ContractViolation("section '" + s.name + "' out of range");
}

std::size_t CircuitSpec::count_sections(std::string_view name) const
{
    return static_cast<std::size_t>(
        std::count_if(sections.begin(), sections.end(), [&](const Section &s) { return s.name == name; }));
}

void CircuitBuilder::append(const CircuitSpec &other)
{
    const std::size_t shift = spec_.gates.size();
    spec_.gates.insert(spec_.gates.end(), other.gates.begin(), other.gates.end());
    for (const Section &s : other.sections)
        spec_.sections.push_back({s.name, s.begin + shift, s.end + shift});
}

std::size_t CircuitBuilder::open_section(std::string name)
{
    spec_.sections.push_back({std::move(name), spec_.gates.size(), spec_.gates.size()});
    return spec_.sections.size() - 1;
}

void CircuitBuilder::close_section(std::size_t handle) { spec_.sections.at(handle).end = spec_.gates.size(); }

CircuitSpec CircuitBuilder::build() &&
{
    spec_.validate();
    return std::move(spec_);
}

} // namespace qpalign::circuits
