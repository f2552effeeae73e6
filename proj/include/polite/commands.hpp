#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "polite/big_count.hpp"

namespace polite::commands {

enum class TableKind { kB, kD };

/// "p;value" lines for p = 1..pmax. Throws std::invalid_argument on k or pmax < 1.
void emit_table(std::ostream& out, TableKind kind, std::uint64_t k, std::uint64_t pmax);

enum class Sequence { kA, kA166079, kA095236, kA095240, kA095912, kAExtended };

/// Accepts an, a166079, a095236, a095240, a095912, a_ext.
std::optional<Sequence> parse_sequence(std::string_view name);
std::vector<std::string> sequence_names();

/// First index the sequence is defined at (2 for A095240, else 1).
std::uint64_t first_index(Sequence s);
BigCount sequence_value(Sequence s, std::uint64_t n);

/// OEIS b-file lines "n value" from first_index(s) to nmax.
void emit_sequence(std::ostream& out, Sequence s, std::uint64_t nmax);

/// Tab separated comparison table: n, U/a_n, U, a_n, O, O/a_n, n!
/// with "/" in the U columns at n = 1.
void emit_bounds_header(std::ostream& out);
void emit_bounds_row(std::ostream& out, std::uint64_t n, unsigned precision);
void emit_bounds(std::ostream& out, std::uint64_t nmax, unsigned precision);

/// Semicolon separated schema tuple.
void emit_schema(std::ostream& out, std::uint32_t level);

// ---------------------------------------------------------------------------
// Verification sweep

inline constexpr std::uint64_t kMaxFormulaLimit = 512;
inline constexpr std::uint32_t kMaxOracleLimit = 30;

struct VerifyOptions {
    std::uint64_t nmax_formula = 64;
    std::uint32_t nmax_oracle = 14;
    bool parallel = true;

    /// Replaceable closed forms, used to check that corrupted tables are caught.
    std::function<std::uint64_t(std::uint64_t, std::uint64_t)> b_formula;
    std::function<std::uint64_t(std::uint64_t, std::uint64_t)> d_formula;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::uint64_t cases = 0;
    std::string failure;  // first failing tuple, empty when passed
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool passed() const;
    void print(std::ostream& out) const;
};

/// Throws std::invalid_argument if a limit is outside its cap.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace polite::commands
