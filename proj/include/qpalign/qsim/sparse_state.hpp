#pragma once

#include "qpalign/qsim/state.hpp"

namespace qpalign::qsim {

/**
 * Map from basis index to amplitude holding only entries above
 * kPruneThreshold. Permutation and diagonal gates rewrite entries in place;
 * only H changes the support.
 */
class SparseState final : public QuantumState {
  public:
    static constexpr std::size_t kMaxQubits = 64;

    explicit SparseState(std::size_t num_qubits);

    [[nodiscard]] Backend backend() const noexcept override { return Backend::Sparse; }
    void apply(const Gate &gate) override;
    void reset(std::uint64_t basis) override;
    [[nodiscard]] Amplitude amplitude(std::uint64_t basis) const override;
    void for_each(const std::function<void(std::uint64_t, Amplitude)> &visit) const override;
    void project(std::uint64_t mask, std::uint64_t value, double scale) override;
    [[nodiscard]] std::unique_ptr<QuantumState> clone() const override;

    [[nodiscard]] std::size_t support_size() const noexcept { return entries_.size(); }

  private:
    struct Entry {
        std::uint64_t index;
        Amplitude amplitude;
    };

    void apply_hadamard(std::uint64_t bit);

    std::vector<Entry> entries_;
    std::vector<Entry> scratch_;
    static constexpr std::uint32_t kEmptySlot = 0xFFFFFFFFu;
    std::vector<std::uint32_t> slots_;
};

} // namespace qpalign::qsim
