#pragma once

#include "qpalign/alignment/sequence.hpp"
#include "qpalign/circuits/profit_circuit.hpp"
#include "qpalign/grover/driver.hpp"

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qpalign::cli {

/// Process exit codes shared by every subcommand.
enum class Exit : int { Ok = 0, Internal = 1, InvalidInput = 2, TooLarge = 3, VerifyFailed = 4 };

/// Version of the JSON report layout (docs/report-schema.md).
inline constexpr int kReportSchemaVersion = 1;

/// Name of the one report field that is allowed to differ between identical runs.
inline constexpr std::string_view kWallTimeField = "wall_time_ms";

struct SequencePair {
    Sequence a;
    Sequence b;
};

/**
 * Minimal FASTA: '>' header lines, sequence lines concatenated, blank
 * lines ignored. Exactly two records are required. Throws ValidationError.
 */
SequencePair parse_fasta(std::string_view text);

struct VerifyConfig {
    std::size_t max_len = 2;
    std::size_t trials = 50;
    std::uint64_t seed = 1;
    double budget_c = 3.0;
    circuits::CharMode char_mode = circuits::CharMode::Reuse;
    std::size_t max_qubits = grover::kDefaultMaxQubits;
    /// Test hook: builds circuits with a different match bonus than the model uses.
    bool tamper_profit = false;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    nlohmann::ordered_json detail;
};

/**
 * Runs the verification suite: classical-track equivalence, backend
 * equivalence, dp/brute agreement and seeded quantum search runs.
 * Throws InstanceTooLarge when max_len instances exceed max_qubits.
 */
std::vector<CheckResult> run_verification(const VerifyConfig &config);

/// Removes the wall-time field everywhere in a report.
nlohmann::ordered_json strip_wall_time(nlohmann::ordered_json report);

/**
 * Entry point behind the `qpalign` executable. `args` excludes the program
 * name. Reads QPALIGN_MAX_QUBITS from the environment.
 */
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

} // namespace qpalign::cli
