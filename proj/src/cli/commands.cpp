#include "qpalign/cli/commands.hpp"

#include "report.hpp"

#include "qpalign/alignment/alignment.hpp"
#include "qpalign/circuits/export.hpp"
#include "qpalign/circuits/resources.hpp"
#include "qpalign/error.hpp"
#include "qpalign/grover/oracle.hpp"
#include "qpalign/oracles/classical.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace qpalign::cli {

using nlohmann::ordered_json;

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kModes{"quantum", "dp", "brute"};
const std::vector<std::string> kCharModes{"reuse", "per-step"};
const std::vector<std::string> kFormats{"portable-qasm", "json"};

struct SequenceFlags {
    std::optional<std::string> seq_a;
    std::optional<std::string> seq_b;
    std::optional<std::string> fasta;

    void attach(CLI::App &cmd)
    {
        auto *a = cmd.add_option("--seq-a", seq_a, "Horizontal (top) sequence");
        auto *b = cmd.add_option("--seq-b", seq_b, "Vertical (bottom) sequence");
        auto *f = cmd.add_option("--fasta", fasta, "FASTA file with exactly two records");
        f->excludes(a)->excludes(b);
    }

    [[nodiscard]] bool given() const { return seq_a || seq_b || fasta; }

    [[nodiscard]] SequencePair load() const
    {
        if (fasta) {
            std::ifstream in(*fasta);
            if (!in)
                throw ValidationError("cannot read FASTA file '" + *fasta + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            return parse_fasta(buf.str());
        }
        if (!seq_a || !seq_b)
            throw ValidationError("provide both --seq-a and --seq-b, or --fasta");
        return {Sequence::parse(*seq_a), Sequence::parse(*seq_b)};
    }
};

struct JsonFlag {
    std::string path;
    CLI::Option *opt = nullptr;

    void attach(CLI::App &cmd)
    {
        opt = cmd.add_option("--json", path, "Emit the JSON report to stdout, or to FILE")->expected(0, 1);
    }

    [[nodiscard]] bool to_stdout() const { return opt->count() > 0 && path.empty(); }

    /// Writes the report file when one was requested.
    void write_file(const ordered_json &report) const
    {
        if (opt->count() == 0 || path.empty())
            return;
        std::ofstream f(path);
        if (!(f << report.dump(2) << '\n'))
            throw IoError("cannot write report to '" + path + "'");
    }
};

long long elapsed_ms(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

std::size_t max_qubits_from_env()
{
    const char *raw = std::getenv("QPALIGN_MAX_QUBITS");
    if (raw == nullptr || *raw == '\0')
        return grover::kDefaultMaxQubits;
    try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(raw, &used);
        if (used == std::string_view(raw).size() && v > 0)
            return v;
    } catch (const std::exception &) {
    }
    throw ValidationError(std::string("QPALIGN_MAX_QUBITS must be a positive integer, got '") + raw + "'");
}

// ---------------------------------------------------------------- align

struct AlignArgs {
    SequenceFlags seqs;
    JsonFlag json;
    std::string mode = "dp";
    std::uint64_t seed = 0;
    double budget_c = 3.0;
    std::string char_mode = "reuse";
};

int cmd_align(const AlignArgs &args, std::ostream &out)
{
    const auto start = std::chrono::steady_clock::now();
    const auto [a, b] = args.seqs.load();
    const auto char_mode = circuits::char_mode_from_name(args.char_mode);
    const ProfitParams params;

    ordered_json search = nullptr;
    std::optional<long long> profit;
    TransitionString path;
    Alignment alignment;
    if (args.mode == "quantum") {
        grover::SearchConfig sc;
        sc.seed = args.seed;
        sc.budget_c = args.budget_c;
        sc.circuit.char_mode = char_mode;
        sc.max_qubits = max_qubits_from_env();
        const auto [result, trace] = grover::find_max(a, b, sc);
        search = detail::trace_json(trace, result.step_count);
        search["qubits"] = result.qubits;
        if (result.found) {
            profit = result.profit;
            path = result.path;
            alignment = result.alignment;
        }
    } else if (args.mode == "brute") {
        const auto r = oracles::brute_force_max(a, b, params);
        profit = r.max_profit;
        path = r.optimal_paths.front();
        alignment = decode_alignment(path, a, b, params);
    } else {
        const auto r = oracles::dp_max(a, b, params);
        profit = r.max_profit;
        path = r.path;
        alignment = decode_alignment(path, a, b, params);
    }

    const auto referee = oracles::dp_max(a, b, params);
    const PathScore rescored = path_profit(path, a, b, params);
    const bool valid = profit.has_value() && rescored.valid && rescored.profit == *profit;

    ordered_json report;
    report["schema_version"] = kReportSchemaVersion;
    report["command"] = "align";
    report["mode"] = args.mode;
    report["sequences"] = {{"a", a.str()}, {"b", b.str()}};
    report["params"] = detail::params_json(params);
    report["char_mode"] = args.char_mode;
    report["seed"] = args.seed;
    report["budget_c"] = args.budget_c;
    report["profit"] = profit ? ordered_json(*profit) : ordered_json(nullptr);
    report["valid"] = valid;
    report["path"] = profit ? ordered_json(path.str()) : ordered_json(nullptr);
    report["alignment"] = profit ? ordered_json{{"top", alignment.top}, {"bottom", alignment.bottom}}
                                 : ordered_json(nullptr);
    report["search"] = std::move(search);
    report["resources"] = detail::resources_json(circuits::estimate_resources(a.size(), b.size(), params, char_mode));
    report["oracle_check"] = {{"referee", "dp"},
                              {"profit", referee.max_profit},
                              {"agrees", profit.has_value() && *profit == referee.max_profit}};
    report[std::string(kWallTimeField)] = elapsed_ms(start);

    args.json.write_file(report);
    if (args.json.to_stdout()) {
        out << report.dump(2) << '\n';
        return static_cast<int>(Exit::Ok);
    }
    out << "mode: " << args.mode << '\n';
    if (!profit) {
        out << "no valid alignment observed\n";
        return static_cast<int>(Exit::Ok);
    }
    out << "profit: " << *profit << '\n' << alignment.top << '\n' << alignment.bottom << '\n';
    if (args.mode == "quantum")
        out << "grover iterations: " << report["search"]["total_iterations"] << " of "
            << report["search"]["budget"] << " over " << report["search"]["round_count"] << " rounds\n";
    return static_cast<int>(Exit::Ok);
}

// ------------------------------------------------------------ resources

struct ResourcesArgs {
    SequenceFlags seqs;
    JsonFlag json;
    std::optional<long long> m;
    std::optional<long long> n;
    std::string char_mode = "reuse";
};

int cmd_resources(const ResourcesArgs &args, std::ostream &out)
{
    const auto start = std::chrono::steady_clock::now();
    const auto char_mode = circuits::char_mode_from_name(args.char_mode);
    circuits::ResourceEstimate e;
    if (args.seqs.given()) {
        if (args.m || args.n)
            throw ValidationError("give either sequences or --m/--n, not both");
        const auto [a, b] = args.seqs.load();
        e = circuits::estimate_resources(a, b, {}, char_mode);
    } else {
        if (!args.m || !args.n)
            throw ValidationError("provide --m and --n, or sequences");
        if (*args.m < 0 || *args.n < 0)
            throw ValidationError("sequence lengths must be non-negative");
        e = circuits::estimate_resources(static_cast<std::size_t>(*args.m), static_cast<std::size_t>(*args.n), {},
                                         char_mode);
    }

    ordered_json report;
    report["schema_version"] = kReportSchemaVersion;
    report["command"] = "resources";
    report["resources"] = detail::resources_json(e);
    report[std::string(kWallTimeField)] = elapsed_ms(start);

    args.json.write_file(report);
    if (args.json.to_stdout()) {
        out << report.dump(2) << '\n';
        return static_cast<int>(Exit::Ok);
    }
    for (const auto &[key, value] : report["resources"].items())
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    return static_cast<int>(Exit::Ok);
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
    JsonFlag json;
    std::size_t max_len = 2;
    std::size_t trials = 50;
    std::uint64_t seed = 1;
    double budget_c = 3.0;
    std::string char_mode = "reuse";
    bool tamper_profit = false;
};

int cmd_verify(const VerifyArgs &args, std::ostream &out)
{
    const auto start = std::chrono::steady_clock::now();
    VerifyConfig cfg;
    cfg.max_len = args.max_len;
    cfg.trials = args.trials;
    cfg.seed = args.seed;
    cfg.budget_c = args.budget_c;
    cfg.char_mode = circuits::char_mode_from_name(args.char_mode);
    cfg.max_qubits = max_qubits_from_env();
    cfg.tamper_profit = args.tamper_profit;
    const auto checks = run_verification(cfg);

    bool all = true;
    ordered_json list = ordered_json::array();
    for (const auto &c : checks) {
        all = all && c.passed;
        list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    ordered_json report;
    report["schema_version"] = kReportSchemaVersion;
    report["command"] = "verify";
    report["config"] = {{"max_len", cfg.max_len},
                        {"trials", cfg.trials},
                        {"seed", cfg.seed},
                        {"budget_c", cfg.budget_c},
                        {"char_mode", args.char_mode},
                        {"max_qubits", cfg.max_qubits}};
    report["checks"] = std::move(list);
    report["passed"] = all;
    report[std::string(kWallTimeField)] = elapsed_ms(start);

    args.json.write_file(report);
    if (args.json.to_stdout()) {
        out << report.dump(2) << '\n';
    } else {
        for (const auto &c : checks)
            out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  " << c.detail.dump() << '\n';
        out << (all ? "all checks passed" : "verification failed") << '\n';
    }
    return static_cast<int>(all ? Exit::Ok : Exit::VerifyFailed);
}

// --------------------------------------------------------------- export

struct ExportArgs {
    SequenceFlags seqs;
    std::string format = "portable-qasm";
    std::string out_path;
    std::string char_mode = "reuse";
    std::optional<long long> oracle_threshold;
    std::optional<std::string> oracle_out;
};

void write_text(const std::string &path, const std::string &text)
{
    std::ofstream f(path, std::ios::binary);
    if (!(f << text))
        throw IoError("cannot write '" + path + "'");
}

int cmd_export(const ExportArgs &args, std::ostream &out)
{
    const auto [a, b] = args.seqs.load();
    if (args.oracle_threshold.has_value() != args.oracle_out.has_value())
        throw ValidationError("--oracle-threshold and --oracle-out go together");
    circuits::ProfitCircuitOptions opts;
    opts.char_mode = circuits::char_mode_from_name(args.char_mode);
    const auto format = circuits::export_format_from_name(args.format);

    const auto circuit = circuits::build_full_profit_circuit(a, b, opts);
    write_text(args.out_path, circuits::export_circuit(circuit, format));
    out << "wrote " << circuit.gate_count() << " gates on " << circuit.layout.total_qubits() << " qubits to "
        << args.out_path << '\n';
    if (args.oracle_threshold) {
        const auto oracle = grover::build_phase_oracle(a, b, *args.oracle_threshold, opts);
        write_text(*args.oracle_out, circuits::export_circuit(oracle, format));
        out << "wrote " << oracle.gate_count() << " oracle gates on " << oracle.layout.total_qubits()
            << " qubits to " << *args.oracle_out << '\n';
    }
    return static_cast<int>(Exit::Ok);
}

std::string usage_for(const CLI::App &app)
{
    for (const CLI::App *sub : app.get_subcommands())
        return sub->help();
    return app.help();
}

} // namespace

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Simulated quantum pairwise DNA alignment", "qpalign"};
    app.require_subcommand(1);

    AlignArgs align;
    auto *align_cmd = app.add_subcommand("align", "Align two sequences");
    align.seqs.attach(*align_cmd);
    align.json.attach(*align_cmd);
    align_cmd->add_option("--mode", align.mode, "quantum, dp or brute")->check(CLI::IsMember(kModes))->capture_default_str();
    align_cmd->add_option("--seed", align.seed, "Seed for every random decision")->capture_default_str();
    align_cmd->add_option("--budget-c", align.budget_c, "Grover budget multiplier c")->capture_default_str();
    align_cmd->add_option("--char-mode", align.char_mode, "reuse or per-step")->check(CLI::IsMember(kCharModes))->capture_default_str();

    ResourcesArgs resources;
    auto *res_cmd = app.add_subcommand("resources", "Estimate qubit and gate counts");
    resources.seqs.attach(*res_cmd);
    resources.json.attach(*res_cmd);
    res_cmd->add_option("--m", resources.m, "Length of the horizontal sequence");
    res_cmd->add_option("--n", resources.n, "Length of the vertical sequence");
    res_cmd->add_option("--char-mode", resources.char_mode, "reuse or per-step")->check(CLI::IsMember(kCharModes))->capture_default_str();

    VerifyArgs verify;
    auto *verify_cmd = app.add_subcommand("verify", "Check the pipeline against classical oracles");
    verify.json.attach(*verify_cmd);
    verify_cmd->add_option("--max-len", verify.max_len, "Longest random sequence")->capture_default_str();
    verify_cmd->add_option("--trials", verify.trials, "Random instances and quantum runs")->capture_default_str();
    verify_cmd->add_option("--seed", verify.seed, "Suite seed")->capture_default_str();
    verify_cmd->add_option("--budget-c", verify.budget_c, "Grover budget multiplier c")->capture_default_str();
    verify_cmd->add_option("--char-mode", verify.char_mode, "reuse or per-step")->check(CLI::IsMember(kCharModes))->capture_default_str();
    verify_cmd->add_flag("--tamper-profit", verify.tamper_profit)->group("");

    ExportArgs exp;
    auto *export_cmd = app.add_subcommand("export", "Write the profit circuit to a file");
    exp.seqs.attach(*export_cmd);
    export_cmd->add_option("--format", exp.format, "portable-qasm or json")->check(CLI::IsMember(kFormats))->capture_default_str();
    export_cmd->add_option("--out", exp.out_path, "Output path")->required();
    export_cmd->add_option("--char-mode", exp.char_mode, "reuse or per-step")->check(CLI::IsMember(kCharModes))->capture_default_str();
    export_cmd->add_option("--oracle-threshold", exp.oracle_threshold, "Also export the phase oracle at this threshold");
    export_cmd->add_option("--oracle-out", exp.oracle_out, "Output path for the oracle");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << usage_for(app);
        return static_cast<int>(Exit::Ok);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << usage_for(app);
        return static_cast<int>(Exit::InvalidInput);
    }

    try {
        if (align_cmd->parsed())
            return cmd_align(align, out);
        if (res_cmd->parsed())
            return cmd_resources(resources, out);
        if (verify_cmd->parsed())
            return cmd_verify(verify, out);
        return cmd_export(exp, out);
    } catch (const ValidationError &e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(Exit::InvalidInput);
    } catch (const InstanceTooLarge &e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(Exit::TooLarge);
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return static_cast<int>(Exit::Internal);
    }
}

ordered_json strip_wall_time(ordered_json report)
{
    if (report.is_object()) {
        report.erase(std::string(kWallTimeField));
        for (auto &[key, value] : report.items())
            value = strip_wall_time(std::move(value));
    } else if (report.is_array()) {
        for (auto &value : report)
            value = strip_wall_time(std::move(value));
    }
    return report;
}

} // namespace qpalign::cli
