// polite: counts and tables for the polite seating process.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "polite/commands.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

namespace cmd = polite::commands;

// Standard output unless --out was given.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::runtime_error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counts for the polite seating process"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "Write output to PATH instead of standard output");

    // table
    auto* table = app.add_subcommand("table", "b(p,k) or d(p,k) for p = 1..pmax as 'p;value' lines");
    std::string table_kind;
    std::uint64_t table_k = 0;
    std::uint64_t table_pmax = 0;
    table->add_option("kind", table_kind, "b or d")->required()->check(CLI::IsMember({"b", "d"}));
    table->add_option("--k", table_k, "Distance k >= 1")->required()->check(CLI::PositiveNumber);
    table->add_option("--pmax", table_pmax, "Largest seat count")->required()->check(CLI::PositiveNumber);
    table->add_option("--out", out_path, "Write output to PATH");

    // sequence
    auto* sequence = app.add_subcommand("sequence", "OEIS b-file 'n value' lines");
    std::string seq_name;
    std::uint64_t seq_nmax = 0;
    sequence->add_option("name", seq_name, "an | a166079 | a095236 | a095240 | a095912 | a_ext")
        ->required()
        ->check(CLI::IsMember(cmd::sequence_names()));
    sequence->add_option("--nmax", seq_nmax, "Last index")->required()->check(CLI::PositiveNumber);
    sequence->add_option("--out", out_path, "Write output to PATH");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Compare a(n) with its lower and upper bounds");
    std::uint64_t bounds_nmax = 0;
    unsigned precision = 4;
    bounds->add_option("--nmax", bounds_nmax, "Last n")->required()->check(CLI::PositiveNumber);
    bounds->add_option("--precision", precision, "Decimal places of the ratio columns")
        ->check(CLI::Range(0U, 60U));
    bounds->add_option("--out", out_path, "Write output to PATH");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the formula-vs-oracle invariant suite");
    cmd::VerifyOptions vopts;
    verify->add_option("--nmax-formula", vopts.nmax_formula, "Largest p/n for closed-form checks")
        ->check(CLI::Range(std::uint64_t{1}, cmd::kMaxFormulaLimit));
    verify->add_option("--nmax-oracle", vopts.nmax_oracle, "Largest n for enumeration checks")
        ->check(CLI::Range(std::uint32_t{1}, cmd::kMaxOracleLimit));
    verify->add_option("--out", out_path, "Write output to PATH");

    // schema
    auto* schema = app.add_subcommand("schema", "Insertion order tuple for 2^level runs");
    std::uint32_t level = 0;
    schema->add_option("--level", level, "Level i >= 1")->required()->check(CLI::Range(1U, 24U));
    schema->add_option("--out", out_path, "Write output to PATH");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        Output out(out_path);
        std::ostream& os = out.stream();

        if (*table) {
            cmd::emit_table(os, table_kind == "b" ? cmd::TableKind::kB : cmd::TableKind::kD, table_k, table_pmax);
        } else if (*sequence) {
            cmd::emit_sequence(os, *cmd::parse_sequence(seq_name), seq_nmax);
        } else if (*bounds) {
            cmd::emit_bounds(os, bounds_nmax, precision);
        } else if (*verify) {
            const auto report = cmd::run_verify(vopts);
            report.print(os);
            return report.passed() ? 0 : kExitMismatch;
        } else if (*schema) {
            cmd::emit_schema(os, level);
        }
        os.flush();
        if (!os) {
            std::cerr << "error: failed writing output\n";
            return kExitUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
