#pragma once

#include "qpalign/qsim/gate.hpp"
#include "qpalign/qsim/rng.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

namespace qpalign::qsim {

using Amplitude = std::complex<double>;

enum class Backend : std::uint8_t { Dense, Sparse };

std::string_view backend_name(Backend b) noexcept;

/// Sparse amplitudes at or below this magnitude are dropped.
inline constexpr double kPruneThreshold = 1e-14;

struct BasisAmplitude {
    std::uint64_t index = 0;
    Amplitude amplitude;
};

/**
 * Pure state over `num_qubits()` qubits. Basis index bit q is qubit q.
 * A state is owned by one thread while it is being mutated.
 */
class QuantumState {
  public:
    explicit QuantumState(std::size_t num_qubits);
    virtual ~QuantumState() = default;

    QuantumState(const QuantumState &) = default;
    QuantumState &operator=(const QuantumState &) = default;

    [[nodiscard]] virtual Backend backend() const noexcept = 0;
    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }

    /// Throws ContractViolation for out-of-range indices.
    virtual void apply(const Gate &gate) = 0;
    /// Resets to the computational basis state |basis>.
    virtual void reset(std::uint64_t basis) = 0;
    [[nodiscard]] virtual Amplitude amplitude(std::uint64_t basis) const = 0;
    /// Visits every stored amplitude (all of them for dense, nonzero for sparse).
    virtual void for_each(const std::function<void(std::uint64_t, Amplitude)> &visit) const = 0;
    /// Zeroes amplitudes with (index & mask) != value and scales the rest.
    virtual void project(std::uint64_t mask, std::uint64_t value, double scale) = 0;
    [[nodiscard]] virtual std::unique_ptr<QuantumState> clone() const = 0;

    /// Amplitudes with magnitude above `threshold`, ascending by index.
    [[nodiscard]] std::vector<BasisAmplitude> snapshot(double threshold = kPruneThreshold) const;
    [[nodiscard]] double norm_squared() const;

  protected:
    void check_index(std::uint64_t basis) const;

  private:
    std::size_t num_qubits_;
};

std::unique_ptr<QuantumState> make_state(Backend backend, std::size_t num_qubits);

void apply_all(QuantumState &state, std::span<const Gate> gates);

/// Total probability of basis states satisfying `predicate`.
double expect_basis(const QuantumState &state, const std::function<bool(std::uint64_t)> &predicate);

struct Measurement {
    /// Bit i is the result for qubits[i].
    std::uint64_t outcome = 0;
    double probability = 0.0;
};

/**
 * Samples `qubits` in the computational basis and collapses the state.
 * Outcomes are ordered by value and selected with a single uniform draw,
 * so both backends produce the same transcript for the same seed.
 */
Measurement measure(QuantumState &state, std::span<const Qubit> qubits, Rng &rng);

/// Largest |a_i - b_i| over the union of stored indices.
double max_amplitude_difference(const QuantumState &a, const QuantumState &b);

} // namespace qpalign::qsim
