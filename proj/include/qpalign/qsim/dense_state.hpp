#pragma once

#include "qpalign/qsim/state.hpp"

namespace qpalign::qsim {

/// Full 2^n amplitude array. The correctness referee for the sparse backend.
class DenseState final : public QuantumState {
  public:
    static constexpr std::size_t kMaxQubits = 26;

    explicit DenseState(std::size_t num_qubits);

    [[nodiscard]] Backend backend() const noexcept override { return Backend::Dense; }
    void apply(const Gate &gate) override;
    void reset(std::uint64_t basis) override;
    [[nodiscard]] Amplitude amplitude(std::uint64_t basis) const override;
    void for_each(const std::function<void(std::uint64_t, Amplitude)> &visit) const override;
    void project(std::uint64_t mask, std::uint64_t value, double scale) override;
    [[nodiscard]] std::unique_ptr<QuantumState> clone() const override;

  private:
    std::vector<Amplitude> amps_;
};

} // namespace qpalign::qsim
