#include "polite/commands.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

#include "polite/bounds.hpp"
#include "polite/closed_form.hpp"
#include "polite/counting.hpp"
#include "polite/factorial.hpp"
#include "polite/oracle.hpp"
#include "polite/schema.hpp"

namespace polite::commands {

void emit_table(std::ostream& out, TableKind kind, std::uint64_t k, std::uint64_t pmax) {
    if (k < 1 || pmax < 1) {
        throw std::invalid_argument("table needs k >= 1 and pmax >= 1");
    }
    for (std::uint64_t p = 1; p <= pmax; ++p) {
        out << p << ';' << (kind == TableKind::kB ? b(p, k) : d(p, k)) << '\n';
    }
}

namespace {

struct SequenceEntry {
    std::string_view name;
    Sequence id;
};

constexpr SequenceEntry kSequences[] = {
    {"an", Sequence::kA},             {"a166079", Sequence::kA166079}, {"a095236", Sequence::kA095236},
    {"a095240", Sequence::kA095240}, {"a095912", Sequence::kA095912}, {"a_ext", Sequence::kAExtended},
};

}  // namespace

std::optional<Sequence> parse_sequence(std::string_view name) {
    for (const auto& e : kSequences) {
        if (e.name == name) return e.id;
    }
    return std::nullopt;
}

std::vector<std::string> sequence_names() {
    std::vector<std::string> names;
    for (const auto& e : kSequences) names.emplace_back(e.name);
    return names;
}

std::uint64_t first_index(Sequence s) { return s == Sequence::kA095240 ? 2 : 1; }

BigCount sequence_value(Sequence s, std::uint64_t n) {
    switch (s) {
        case Sequence::kA: return a(n);
        case Sequence::kA166079: return a166079(n);
        case Sequence::kA095236: return a095236(n);
        case Sequence::kA095240: return a095240(n);
        case Sequence::kA095912: return a095912(n);
        case Sequence::kAExtended: return a_extended(n);
    }
    throw std::logic_error("unknown sequence");
}

void emit_sequence(std::ostream& out, Sequence s, std::uint64_t nmax) {
    if (nmax < 1) throw std::invalid_argument("sequence needs nmax >= 1");
    for (std::uint64_t n = first_index(s); n <= nmax; ++n) {
        out << n << ' ' << sequence_value(s, n) << '\n';
    }
}

void emit_bounds_header(std::ostream& out) {
    out << "n\tU/a_n\tU\ta_n\tO\tO/a_n\tn!\n";
}

void emit_bounds_row(std::ostream& out, std::uint64_t n, unsigned precision) {
    const BoundsRow row = bounds_row(n);
    out << n << '\t';
    if (row.lower) {
        out << format_decimal(*row.lower_ratio(), precision) << '\t' << *row.lower;
    } else {
        out << "/\t/";
    }
    out << '\t' << row.count << '\t' << row.upper << '\t' << format_decimal(row.upper_ratio(), precision) << '\t'
        << row.n_factorial << '\n';
}

void emit_bounds(std::ostream& out, std::uint64_t nmax, unsigned precision) {
    if (nmax < 1) throw std::invalid_argument("bounds needs nmax >= 1");
    emit_bounds_header(out);
    for (std::uint64_t n = 1; n <= nmax; ++n) {
        emit_bounds_row(out, n, precision);
    }
}

void emit_schema(std::ostream& out, std::uint32_t level) {
    out << schema_tuple(level).to_string() << '\n';
}

// ---------------------------------------------------------------------------
// Verification sweep

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void VerifyReport::print(std::ostream& out) const {
    std::size_t failed = 0;
    for (const auto& c : checks) {
        out << (c.passed ? "[ok]   " : "[FAIL] ") << c.name << ": " << c.cases << " cases";
        if (!c.passed) {
            out << "; first failure " << c.failure;
            ++failed;
        }
        out << '\n';
    }
    if (failed == 0) {
        out << "verify: all " << checks.size() << " checks passed\n";
    } else {
        out << "verify: " << failed << " of " << checks.size() << " checks failed\n";
    }
}

namespace {

using Formula = std::function<std::uint64_t(std::uint64_t, std::uint64_t)>;

// Records the first mismatch only; later ones are still counted as cases.
class Check {
public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    template <class A, class B>
    void expect_eq(const A& got, const B& want, const std::string& where) {
        ++result_.cases;
        if (result_.passed && !(got == want)) fail(where, got, want);
    }

    template <class A, class B>
    void expect_le(const A& lo, const B& hi, const std::string& where) {
        ++result_.cases;
        if (result_.passed && !(lo <= hi)) fail(where, lo, hi, " > ");
    }

    void expect(bool ok, const std::string& where) {
        ++result_.cases;
        if (result_.passed && !ok) {
            result_.passed = false;
            result_.failure = where;
        }
    }

    CheckResult done() { return std::move(result_); }

private:
    template <class A, class B>
    void fail(const std::string& where, const A& a, const B& b, const char* op = " != ") {
        std::ostringstream os;
        os << where << ": " << a << op << b;
        result_.passed = false;
        result_.failure = os.str();
    }

    CheckResult result_;
};

std::string at(std::uint64_t p, std::uint64_t k) {
    return "(p,k)=(" + std::to_string(p) + "," + std::to_string(k) + ")";
}

std::string at_rule(std::uint64_t n, const RuleVariant& rule) {
    return "(n,rule)=(" + std::to_string(n) + "," + rule.name() + ")";
}

CheckResult check_census(std::uint64_t pmax, const Formula& bf, const Formula& df) {
    Check c("closed-form b and d vs trajectory census");
    for (std::uint64_t p = 1; p <= pmax; ++p) {
        const auto bc = b_census(static_cast<std::uint32_t>(p));
        const auto dc = d_census(static_cast<std::uint32_t>(p));
        for (std::uint64_t k = 1; k <= p; ++k) {
            c.expect_eq(bf(p, k), bc[k], "b at " + at(p, k));
            c.expect_eq(df(p, k), dc[k], "d at " + at(p, k));
        }
    }
    return c.done();
}

CheckResult check_invariance(std::uint32_t pmax) {
    Check c("census identical on every trajectory");
    for (std::uint32_t p = 1; p <= pmax; ++p) {
        c.expect(verify_census_invariance(p), "p=" + std::to_string(p));
    }
    return c.done();
}

CheckResult check_sequences_vs_oracle(std::uint32_t nmax) {
    Check c("closed-form sequences vs memoized oracle");
    for (std::uint32_t n = 1; n <= nmax; ++n) {
        c.expect_eq(a(n), count_sequences(n, kPlainRule), at_rule(n, kPlainRule));
        c.expect_eq(a095236(n), count_sequences(n, kLongestRunRule), at_rule(n, kLongestRunRule));
        c.expect_eq(a095912(n), count_sequences(n, kLongestRunFewestNeighborsRule),
                    at_rule(n, kLongestRunFewestNeighborsRule));
        c.expect_eq(a_extended(n), count_sequences(n, kFewestNeighborsRule), at_rule(n, kFewestNeighborsRule));
    }
    return c.done();
}

CheckResult check_naive(std::uint32_t nmax) {
    Check c("memoized oracle vs naive enumeration");
    for (std::uint32_t n = 1; n <= nmax; ++n) {
        for (const auto& rule : kAllRules) {
            c.expect_eq(count_sequences(n, rule), count_sequences_naive(n, rule), at_rule(n, rule));
        }
    }
    return c.done();
}

CheckResult check_a166079(std::uint64_t nmax, const Formula& bf) {
    Check c("A166079 vs census");
    for (std::uint64_t n = 1; n <= nmax; ++n) {
        const std::uint64_t via_census = n - b_census(static_cast<std::uint32_t>(n))[1];
        c.expect_eq(BigCount(n - bf(n, 1)), BigCount(via_census), "n=" + std::to_string(n));
    }
    return c.done();
}

CheckResult check_mirror(std::uint64_t nmax) {
    Check c("a(n) summands mirror-symmetric and a(n) even");
    for (std::uint64_t n = 1; n <= nmax; ++n) {
        for (std::uint64_t i = 1; i <= n; ++i) {
            c.expect_eq(plain_summand(n, i), plain_summand(n, n + 1 - i),
                        "(n,i)=(" + std::to_string(n) + "," + std::to_string(i) + ")");
        }
        if (n >= 2) c.expect(a(n).is_even(), "a(" + std::to_string(n) + ") odd");
    }
    return c.done();
}

CheckResult check_bounds(std::uint64_t nmax) {
    Check c("U <= a(n) <= O and n <= a(n) <= n!");
    for (std::uint64_t n = 1; n <= nmax; ++n) {
        const BigCount an = a(n);
        const std::string where = "n=" + std::to_string(n);
        if (n >= 2) c.expect_le(lower_bound_U(n), an, where);
        c.expect_le(an, upper_bound_O(n), where);
        c.expect_le(BigCount(n), an, where);
        c.expect_le(an, factorial(n), where);
    }
    return c.done();
}

CheckResult check_b1_sandwich(const Formula& bf) {
    Check c("floor((p-1)/2) <= b(p,1) <= ceil(2(p-1)/3)");
    for (std::uint64_t p = 1; p <= 100000; ++p) {
        const auto v = bf(p, 1);
        const std::string where = "p=" + std::to_string(p);
        c.expect_le(b1_lower(p), v, where);
        c.expect_le(v, b1_upper(p), where);
    }
    return c.done();
}

CheckResult check_doubling_product(const Formula& bf) {
    Check c("doubling-factorial product <= prod b(p,j)!");
    for (std::uint64_t p = 5; p <= 200; ++p) {
        BigCount rhs(1);
        for (std::uint64_t j = 2; j < p; ++j) rhs *= factorial(bf(p, j));
        c.expect_le(lemma61_product(p), rhs, "p=" + std::to_string(p));
    }
    return c.done();
}

CheckResult check_interval_identity(const Formula& bf) {
    Check c("b(p,k) + b(p,k+1) = 2^m on [1+2^m 2k, 1+2^m 2(k+1))");
    constexpr std::uint64_t kPMax = 10000;
    for (std::uint64_t k = 2; k <= 32; ++k) {
        for (std::uint64_t w = 1; 1 + w * 2 * k <= kPMax; w *= 2) {
            for (std::uint64_t p = 1 + w * 2 * k; p < 1 + w * 2 * (k + 1) && p <= kPMax; ++p) {
                const std::uint64_t m = m_index_general(p, k);
                c.expect_eq(bf(p, k) + bf(p, k + 1), std::uint64_t{1} << m, at(p, k));
            }
        }
    }
    return c.done();
}

std::uint32_t reverse_bits(std::uint32_t v, std::uint32_t width) {
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < width; ++i) {
        r = (r << 1) | ((v >> i) & 1U);
    }
    return r;
}

CheckResult check_schema() {
    Check c("schema tuples and insertion reachability");
    for (std::uint32_t level = 1; level <= 12; ++level) {
        const auto t = schema_tuple(level);
        std::vector<std::uint32_t> sorted = t.entries;
        std::sort(sorted.begin(), sorted.end());
        bool perm = sorted.size() == (std::size_t{1} << level);
        for (std::size_t j = 0; perm && j < sorted.size(); ++j) perm = sorted[j] == j + 1;
        c.expect(perm, "level " + std::to_string(level) + " not a permutation");
        for (std::uint32_t j = 0; j < t.entries.size(); ++j) {
            c.expect_eq(t.entries[j], reverse_bits(j, level) + 1,
                        "bit reversal at level " + std::to_string(level) + ", position " + std::to_string(j + 1));
        }
    }
    for (std::uint32_t h = 1; h <= 3; ++h) {
        for (std::uint32_t l = 1; l <= 3; ++l) {
            for (const auto& row : simulate_insertions(l, h, InsertionKind::kEmptySeat)) {
                c.expect(is_reachable(row), "empty-seat l=" + std::to_string(l) + " h=" + std::to_string(h) + " " +
                                                render_row(row));
            }
        }
        for (const auto& row : simulate_insertions(2, h, InsertionKind::kOccupiedSeat)) {
            c.expect(is_reachable(row), "occupied-seat l=2 h=" + std::to_string(h) + " " + render_row(row));
        }
    }
    return c.done();
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
    if (options.nmax_formula < 1 || options.nmax_formula > kMaxFormulaLimit) {
        throw std::invalid_argument("--nmax-formula must be in 1.." + std::to_string(kMaxFormulaLimit));
    }
    if (options.nmax_oracle < 1 || options.nmax_oracle > kMaxOracleLimit) {
        throw std::invalid_argument("--nmax-oracle must be in 1.." + std::to_string(kMaxOracleLimit));
    }
    const Formula bf = options.b_formula ? options.b_formula : Formula([](auto p, auto k) { return b(p, k); });
    const Formula df = options.d_formula ? options.d_formula : Formula([](auto p, auto k) { return d(p, k); });

    const std::uint64_t nf = options.nmax_formula;
    const std::uint32_t no = options.nmax_oracle;

    std::vector<std::function<CheckResult()>> tasks = {
        [=] { return check_census(nf, bf, df); },
        [=] { return check_invariance(std::min(no, kInvarianceSeatCap)); },
        [=] { return check_sequences_vs_oracle(no); },
        [=] { return check_naive(std::min(no, kNaiveSeatCap)); },
        [=] { return check_a166079(nf, bf); },
        [=] { return check_mirror(nf); },
        [=] { return check_bounds(nf); },
        [=] { return check_b1_sandwich(bf); },
        [=] { return check_doubling_product(bf); },
        [=] { return check_interval_identity(bf); },
        [] { return check_schema(); },
    };

    VerifyReport report;
    if (options.parallel) {
        std::vector<std::future<CheckResult>> futures;
        futures.reserve(tasks.size());
        for (auto& t : tasks) futures.push_back(std::async(std::launch::async, t));
        for (auto& f : futures) report.checks.push_back(f.get());
    } else {
        for (auto& t : tasks) report.checks.push_back(t());
    }
    return report;
}

}  // namespace polite::commands
