#include "qpalign/circuits/export.hpp"
#include "qpalign/cli/commands.hpp"
#include "qpalign/error.hpp"

#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qpalign;
using nlohmann::ordered_json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string &name)
{
    const auto dir = std::filesystem::temp_directory_path() / "qpalign_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("align dp prints the worked example")
{
    const auto r = run({"align", "--seq-a", "ATGGTCAGC", "--seq-b", "ACGGTC", "--mode", "dp"});
    CHECK(r.code == 0);
    CHECK(r.out.find("profit: 20") != std::string::npos);
    CHECK(r.out.find("ATGGTCAGC\nACGGTC___\n") != std::string::npos);
}

TEST_CASE("align json report carries every field")
{
    for (const char *mode : {"dp", "brute", "quantum"}) {
        CAPTURE(mode);
        const auto r = run({"align", "--seq-a", "AG", "--seq-b", "G", "--mode", mode, "--seed", "3", "--json"});
        REQUIRE(r.code == 0);
        const auto j = ordered_json::parse(r.out);
        for (const char *key : {"schema_version", "command", "mode", "sequences", "params", "char_mode", "seed",
                                "budget_c", "profit", "valid", "path", "alignment", "search", "resources",
                                "oracle_check", "wall_time_ms"})
            CHECK(j.contains(key));
        CHECK(j["schema_version"] == cli::kReportSchemaVersion);
        CHECK(j["profit"] == 4);
        CHECK(j["valid"] == true);
        CHECK(j["oracle_check"]["agrees"] == true);
        CHECK(j["alignment"]["top"] == "AG");
        CHECK(j["alignment"]["bottom"] == "_G");
        CHECK(j["search"].is_null() == (std::string(mode) != "quantum"));
    }
}

TEST_CASE("align quantum on A/A")
{
    const auto r = run({"align", "--seq-a", "A", "--seq-b", "A", "--mode", "quantum", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("profit: 3\nA\nA\n") != std::string::npos);
}

TEST_CASE("align writes the report file and stays reproducible")
{
    const auto path = scratch("align.json");
    const std::vector<std::string> args{"align", "--seq-a", "GT", "--seq-b", "TA", "--mode",
                                        "quantum", "--seed", "11", "--json", path.string()};
    REQUIRE(run(args).code == 0);
    const auto first = cli::strip_wall_time(ordered_json::parse(slurp(path)));
    REQUIRE(run(args).code == 0);
    const auto second = cli::strip_wall_time(ordered_json::parse(slurp(path)));
    CHECK(first.dump() == second.dump());
    CHECK_FALSE(first.contains("wall_time_ms"));
}

TEST_CASE("invalid input exits with code 2")
{
    auto r = run({"align", "--seq-a", "AXG", "--seq-b", "AC", "--mode", "dp"});
    CHECK(r.code == 2);
    CHECK(r.err.find("'X'") != std::string::npos);
    CHECK(r.err.find("position 2") != std::string::npos);

    CHECK(run({"align", "--seq-a", "A"}).code == 2);
    CHECK(run({"align", "--seq-a", "A", "--seq-b", "A", "--mode", "fast"}).code == 2);
    CHECK(run({"align", "--seq-a", "A", "--seq-b", "A", "--frobnicate"}).code == 2);
    CHECK(run({"align", "--seq-a", "A", "--seq-b", "A", "--budget-c", "-1", "--mode", "quantum"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"resources", "--m", "-1", "--n", "2"}).code == 2);
    CHECK(run({"resources", "--m", "3"}).code == 2);
}

TEST_CASE("oversized quantum instances exit with code 3")
{
    CHECK(run({"align", "--seq-a", "ACGTACGT", "--seq-b", "ACGT", "--mode", "quantum"}).code == 3);
    CHECK(run({"align", "--seq-a", "ACGTACGTACGT", "--seq-b", "ACGTACGTACGT", "--mode", "brute"}).code == 3);
}

TEST_CASE("QPALIGN_MAX_QUBITS overrides the width guard")
{
    ::setenv("QPALIGN_MAX_QUBITS", "10", 1);
    CHECK(run({"align", "--seq-a", "A", "--seq-b", "A", "--mode", "quantum"}).code == 3);
    ::setenv("QPALIGN_MAX_QUBITS", "many", 1);
    CHECK(run({"align", "--seq-a", "A", "--seq-b", "A", "--mode", "quantum"}).code == 2);
    ::unsetenv("QPALIGN_MAX_QUBITS");
    CHECK(run({"align", "--seq-a", "A", "--seq-b", "A", "--mode", "quantum"}).code == 0);
}

TEST_CASE("FASTA input")
{
    const auto pair = cli::parse_fasta(">first\nATGG\nTCAGC\n\n>second\r\nACGGTC\r\n");
    CHECK(pair.a.str() == "ATGGTCAGC");
    CHECK(pair.b.str() == "ACGGTC");
    CHECK_THROWS_AS(cli::parse_fasta(">one\nACGT\n"), ValidationError);
    CHECK_THROWS_AS(cli::parse_fasta(">a\nA\n>b\nC\n>c\nG\n"), ValidationError);
    CHECK_THROWS_AS(cli::parse_fasta("ACGT\n>a\nA\n>b\nC\n"), ValidationError);

    const auto file = scratch("pair.fa");
    std::ofstream(file) << ">a\nATGGTCAGC\n>b\nACGGTC\n";
    const auto r = run({"align", "--fasta", file.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("profit: 20") != std::string::npos);
    std::ofstream(file) << ">a\nA\n>b\nC\n>c\nG\n";
    CHECK(run({"align", "--fasta", file.string()}).code == 2);
    CHECK(run({"align", "--fasta", file.string(), "--seq-a", "A"}).code == 2);
}

TEST_CASE("resources command")
{
    auto r = run({"resources", "--m", "9", "--n", "6", "--json"});
    REQUIRE(r.code == 0);
    auto j = ordered_json::parse(r.out)["resources"];
    CHECK(j["node_count"] == 70);
    CHECK(j["step_qubits"] == 30);
    CHECK(j["max_profit"] == 21);

    j = ordered_json::parse(run({"resources", "--m", "2", "--n", "2", "--json"}).out)["resources"];
    CHECK(j["profit_width"] == 3);
    CHECK(j["max_profit"] == 6);

    j = ordered_json::parse(run({"resources", "--m", "0", "--n", "0", "--json"}).out)["resources"];
    CHECK(j["t"] == 0);
    CHECK(j["total_qubits"] == j["ancilla_qubits"]);

    r = run({"resources", "--seq-a", "ACG", "--seq-b", "AC"});
    CHECK(r.code == 0);
    CHECK(r.out.find("node_count: 12") != std::string::npos);
    CHECK(run({"resources", "--seq-a", "ACG", "--seq-b", "AC", "--m", "3"}).code == 2);
}

TEST_CASE("export writes importable circuits")
{
    const auto json_path = scratch("c.json");
    auto r = run({"export", "--seq-a", "A", "--seq-b", "A", "--format", "json", "--out", json_path.string()});
    REQUIRE(r.code == 0);
    const auto spec = circuits::import_circuit(slurp(json_path), circuits::ExportFormat::Json);
    const auto direct = circuits::build_full_profit_circuit(Sequence::parse("A"), Sequence::parse("A"));
    CHECK(spec.gates == direct.gates);

    const auto qasm_path = scratch("c.qasm");
    r = run({"export", "--seq-a", "A", "--seq-b", "C", "--format", "portable-qasm", "--out", qasm_path.string()});
    REQUIRE(r.code == 0);
    const std::string text = slurp(qasm_path);
    for (const char *reg : {"step", "counter_h", "counter_v", "profit", "char_h", "char_v", "valid"})
        CHECK(text.find("] " + std::string(reg) + ";") != std::string::npos);

    const auto oracle_path = scratch("o.qasm");
    r = run({"export", "--seq-a", "A", "--seq-b", "C", "--out", qasm_path.string(), "--oracle-threshold", "1",
             "--oracle-out", oracle_path.string()});
    CHECK(r.code == 0);
    CHECK(slurp(oracle_path).find("// begin mark") != std::string::npos);
}

TEST_CASE("export argument errors")
{
    const auto r = run({"export", "--seq-a", "A", "--seq-b", "A", "--format", "json"});
    CHECK(r.code == 2);
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(run({"export", "--seq-a", "A", "--seq-b", "A", "--format", "qasm2", "--out", "x"}).code == 2);
    CHECK(run({"export", "--seq-a", "A", "--seq-b", "A", "--out", "x", "--oracle-threshold", "1"}).code == 2);
    CHECK(run({"export", "--seq-a", "A", "--seq-b", "A", "--out", "/nonexistent-dir/x/c.qasm"}).code == 1);
}

TEST_CASE("verify guards, passes and catches tampering")
{
    auto r = run({"verify", "--max-len", "9"});
    CHECK(r.code == 3);
    CHECK(r.err.find("instance too large for full quantum verification") != std::string::npos);

    r = run({"verify", "--max-len", "1", "--trials", "10", "--seed", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);

    r = run({"verify", "--max-len", "1", "--trials", "10", "--seed", "2", "--tamper-profit"});
    CHECK(r.code == 4);
    CHECK(r.out.find("FAIL  classical_track") != std::string::npos);

    CHECK(run({"verify", "--trials", "0"}).code == 2);
}

TEST_CASE("help exits cleanly")
{
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("align") != std::string::npos);
}
