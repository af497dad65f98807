#include "qpalign/qsim/state.hpp"

#include "qpalign/error.hpp"
#include "qpalign/qsim/dense_state.hpp"
#include "qpalign/qsim/sparse_state.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace qpalign::qsim {

std::string_view backend_name(Backend b) noexcept { return b == Backend::Dense ? "dense" : "sparse"; }

QuantumState::QuantumState(std::size_t num_qubits) : num_qubits_(num_qubits) {}

void QuantumState::check_index(std::uint64_t basis) const
{
    if (num_qubits_ < 64 && (basis >> num_qubits_) != 0)
        throw ContractViolation("basis index " + std::to_string(basis) + " out of range for " +
                                std::to_string(num_qubits_) + " qubits");
}

std::vector<BasisAmplitude> QuantumState::snapshot(double threshold) const
{
    std::vector<BasisAmplitude> out;
    for_each([&](std::uint64_t i, Amplitude a) {
        if (std::abs(a) > threshold)
            out.push_back({i, a});
    });
    std::sort(out.begin(), out.end(), [](const auto &l, const auto &r) { return l.index < r.index; });
    return out;
}

double QuantumState::norm_squared() const
{
    double total = 0.0;
    for_each([&](std::uint64_t, Amplitude a) { total += std::norm(a); });
    return total;
}

std::unique_ptr<QuantumState> make_state(Backend backend, std::size_t num_qubits)
{
    if (backend == Backend::Dense)
        return std::make_unique<DenseState>(num_qubits);
    return std::make_unique<SparseState>(num_qubits);
}

void apply_all(QuantumState &state, std::span<const Gate> gates)
{
    for (const Gate &g : gates)
        state.apply(g);
}

double expect_basis(const QuantumState &state, const std::function<bool(std::uint64_t)> &predicate)
{
    double total = 0.0;
    state.for_each([&](std::uint64_t i, Amplitude a) {
        if (predicate(i))
            total += std::norm(a);
    });
    return total;
}

Measurement measure(QuantumState &state, std::span<const Qubit> qubits, Rng &rng)
{
    std::uint64_t mask = 0;
    for (Qubit q : qubits) {
        if (q >= state.num_qubits())
            throw ContractViolation("measured qubit " + std::to_string(q) + " out of range");
        mask |= std::uint64_t{1} << q;
    }
    auto gather = [&](std::uint64_t index) {
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < qubits.size(); ++i)
            out |= ((index >> qubits[i]) & 1U) << i;
        return out;
    };

    std::map<std::uint64_t, double> marginal;
    double total = 0.0;
    state.for_each([&](std::uint64_t i, Amplitude a) {
        const double p = std::norm(a);
        if (p == 0.0)
            return;
        marginal[gather(i)] += p;
        total += p;
    });
    if (marginal.empty() || total <= 0.0)
        throw std::runtime_error("measurement on a zero-norm state");

    const double draw = rng.uniform() * total;
    double acc = 0.0;
    auto chosen = std::prev(marginal.end());
    for (auto it = marginal.begin(); it != marginal.end(); ++it) {
        acc += it->second;
        if (draw < acc) {
            chosen = it;
            break;
        }
    }

    std::uint64_t value = 0;
    for (std::size_t i = 0; i < qubits.size(); ++i)
        if ((chosen->first >> i) & 1U)
            value |= std::uint64_t{1} << qubits[i];
    const double p = chosen->second / total;
    if (chosen->second <= 0.0)
        throw std::runtime_error("measurement projected onto a zero-norm subspace");
    state.project(mask, value, 1.0 / std::sqrt(chosen->second));
    return {chosen->first, p};
}

double max_amplitude_difference(const QuantumState &a, const QuantumState &b)
{
    std::map<std::uint64_t, std::pair<Amplitude, Amplitude>> joined;
    a.for_each([&](std::uint64_t i, Amplitude v) { joined[i].first = v; });
    b.for_each([&](std::uint64_t i, Amplitude v) { joined[i].second = v; });
    double worst = 0.0;
    for (const auto &[index, pair] : joined)
        worst = std::max(worst, std::abs(pair.first - pair.second));
    return worst;
}

} // namespace qpalign::qsim
