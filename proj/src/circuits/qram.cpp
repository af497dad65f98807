#include "qpalign/circuits/qram.hpp"

#include "qpalign/error.hpp"

#include <string>
#include <vector>

namespace qpalign::circuits {

void emit_qram_load(CircuitBuilder &b, std::span<const std::uint8_t> table, std::span<const Qubit> address,
                    std::span<const Qubit> data)
{
    const std::size_t aw = address.size();
    if (aw < 64 && table.size() > (std::size_t{1} << aw))
        throw ContractViolation("qRAM table of " + std::to_string(table.size()) + " entries needs more than " +
                                std::to_string(aw) + " address qubits");
    ScopedSection section(b, "qram_load");
    for (std::size_t j = 0; j < table.size(); ++j) {
        const std::uint8_t word = table[j];
        if (word == 0)
            continue;
        std::vector<Control> select;
        select.reserve(aw);
        for (std::size_t i = 0; i < aw; ++i)
            select.push_back({address[i], ((j >> i) & 1U) != 0});
        for (std::size_t bit = 0; bit < data.size(); ++bit)
            if ((word >> bit) & 1U)
                b.x(data[bit], select);
    }
}

CircuitSpec build_qram_loader(std::span<const std::uint8_t> table, std::size_t address_width)
{
    RegisterLayout layout;
    const auto addr = layout.add("addr", address_width).qubits();
    const auto data = layout.add("data", 2).qubits();
    CircuitBuilder b(layout);
    emit_qram_load(b, table, addr, data);
    return std::move(b).build();
}

} // namespace qpalign::circuits
