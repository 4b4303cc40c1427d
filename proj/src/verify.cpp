#include "rpt/verify.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "rpt/fubini.hpp"
#include "rpt/lonesum.hpp"
#include "rpt/oracle.hpp"
#include "rpt/poly_bernoulli.hpp"
#include "rpt/riordan.hpp"
#include "rpt/stirling.hpp"

namespace rpt::verify {
namespace {

std::vector<BlockSizeSet> family()
{
    return {
        BlockSizeSet::all(),  BlockSizeSet::up_to(2), BlockSizeSet::up_to(3),          BlockSizeSet::at_least(2),
        BlockSizeSet::even(), BlockSizeSet::odd(),    BlockSizeSet::finite({1, 3, 6}),
    };
}

// Records one comparison; the first failing one becomes the counterexample.
class Checker {
public:
    explicit Checker(SuiteReport& report) : report_(report) {}

    bool failed() const { return report_.counterexample.has_value(); }

    template <class A, class B>
    void equal(const A& a, const B& b, const std::function<std::string()>& where, const char* lhs,
               const char* rhs)
    {
        if (failed()) {
            return;
        }
        ++report_.checks;
        if (!(a == b)) {
            std::ostringstream text;
            text << where() << ": " << lhs << "=" << render(a) << " " << rhs << "=" << render(b);
            report_.counterexample = text.str();
        }
    }

    void truth(bool ok, const std::function<std::string()>& where)
    {
        if (failed()) {
            return;
        }
        ++report_.checks;
        if (!ok) {
            report_.counterexample = where();
        }
    }

private:
    template <class T>
    static std::string render(const T& value)
    {
        if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>) {
            return rpt::to_string(value);
        } else if constexpr (std::is_same_v<T, IntPolynomial>) {
            return value.to_string();
        } else {
            std::ostringstream text;
            text << value;
            return text.str();
        }
    }

    SuiteReport& report_;
};

std::string tag(const BlockSizeSet& s, const std::string& rest)
{
    return "S=" + s.to_string() + " " + rest;
}

void stirling_suite(Checker& check, unsigned max_n)
{
    for (const auto& s : family()) {
        const auto rec = StirlingTriangle::by_recurrence(s, max_n);
        const auto egf = StirlingTriangle::by_egf(s, max_n);
        for (unsigned n = 0; n <= max_n && !check.failed(); ++n) {
            const auto counts = oracle::count_partitions_by_blocks(n, s);
            for (unsigned k = 0; k <= n; ++k) {
                const auto where = [&] { return tag(s, "n=" + std::to_string(n) + " k=" + std::to_string(k)); };
                check.equal(rec.at(n, k), counts[k], where, "recurrence", "oracle");
                check.equal(egf.at(n, k), counts[k], where, "egf", "oracle");
                check.equal(stirling_direct(n, k, s), counts[k], where, "multinomial", "oracle");
            }
        }
    }
}

void bell_suite(Checker& check, unsigned max_n)
{
    for (const auto& s : family()) {
        for (unsigned n = 0; n <= max_n && !check.failed(); ++n) {
            const auto where = [&] { return tag(s, "n=" + std::to_string(n)); };
            check.equal(bell_number(n, s), oracle::count_partitions(n, s), where, "bell", "oracle");
            if (s.contains(1)) {
                check.equal(bell_det(n, s), bell_polynomial(n, s), where, "determinant", "polynomial");
            }
            for (unsigned t = 0; t <= 4 && n <= 6; ++t) {
                const auto at = [&] { return tag(s, "n=" + std::to_string(n) + " t=" + std::to_string(t)); };
                check.equal(potential_value(n, t, s), oracle::count_functions(n, t, s), at, "potential", "oracle");
            }
        }
    }
}

void fubini_suite(Checker& check, unsigned max_n)
{
    const Rational tol(1, 100000000);
    for (const auto& s : family()) {
        for (unsigned n = 0; n <= max_n && !check.failed(); ++n) {
            const auto where = [&] { return tag(s, "n=" + std::to_string(n)); };
            const Integer value = fubini(n, s);
            check.equal(value, oracle::count_ordered_partitions(n, s), where, "fubini", "oracle");
            check.equal(fubini_egf(n, s), oracle::count_ordered_partitions(n, s), where, "egf", "oracle");
            if (n <= 6) {
                check.truth(fubini_dobinski(n, s, tol).brackets(value),
                            [&] { return where() + ": Dobinski bracket misses the value"; });
            }
            for (unsigned q = 1; q <= 6; ++q) {
                const auto at = [&] { return tag(s, "n=" + std::to_string(n) + " q=" + std::to_string(q)); };
                const auto poonen = poonen_check(n, q, s);
                check.equal(poonen.lhs, poonen.rhs, at, "poonen_lhs", "poonen_rhs");
                const auto congruence = congruence_check(n, q, s);
                check.equal(congruence.lhs, congruence.rhs, at, "congruence_lhs", "congruence_rhs");
            }
        }
    }
}

void riordan_suite(Checker& check, unsigned max_n)
{
    const unsigned size = max_n + 1;
    const auto sets = family();
    for (const auto& s : sets) {
        if (!s.contains(1) || check.failed()) {
            continue;
        }
        const auto m = stirling_matrix(s, size);
        const auto tri = StirlingTriangle::by_recurrence(s, max_n);
        for (unsigned n = 0; n < size; ++n) {
            for (unsigned k = 0; k < size; ++k) {
                check.equal(m.at(n, k), Rational(tri.at(n, k)),
                            [&] { return tag(s, "n=" + std::to_string(n) + " k=" + std::to_string(k)); },
                            "riordan", "recurrence");
            }
        }
        const Matrix t = inverse(m);
        check.truth(m.matrix() * t == Matrix::identity(size),
                    [&] { return tag(s, "orthogonality fails at size " + std::to_string(size)); });
        const auto fac = factorize(m);
        check.truth(fac.scaling.matrix() * fac.shifted == m.matrix(),
                    [&] { return tag(s, "factorization does not multiply back"); });
        for (const auto& other : sets) {
            if (!other.contains(1)) {
                continue;
            }
            const auto b = stirling_matrix(other, size);
            check.truth(multiply(m, b).matrix() == m.matrix() * b.matrix(),
                        [&] { return tag(s, "group product differs from matrix product with " + other.to_string()); });
        }
    }
    check.truth(odd_product_prefix(size) == stirling_matrix(BlockSizeSet::odd(), size).matrix(),
                [&] { return "odd product prefix differs at size " + std::to_string(size); });
}

std::vector<std::pair<unsigned, unsigned>> scan_shapes(unsigned max_cells)
{
    std::vector<std::pair<unsigned, unsigned>> shapes{{0, 0}};
    for (unsigned n = 1; n <= max_cells; ++n) {
        for (unsigned k = 1; n * k <= max_cells; ++k) {
            shapes.emplace_back(n, k);
        }
    }
    return shapes;
}

Integer big(std::uint64_t value)
{
    Integer result;
    mpz_import(result.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
    return result;
}

void lonesum_suite(Checker& check, unsigned max_cells, unsigned workers)
{
    const auto sets = family();
    for (const auto& [n, k] : scan_shapes(max_cells)) {
        const auto census = oracle::scan_matrices(n, k, workers);
        const std::string shape = std::to_string(n) + "x" + std::to_string(k);
        check.equal(classical_lo(n, k), big(census.lonesum()), [&] { return shape; }, "classical_lo", "scan");
        for (const auto& s1 : sets) {
            for (const auto& s2 : sets) {
                if (check.failed()) {
                    return;
                }
                const auto where = [&] { return "S1=" + s1.to_string() + " S2=" + s2.to_string() + " " + shape; };
                check.equal(count_restricted(n, k, s1, s2), big(census.lonesum_restricted(s1, s2)), where,
                            "count_restricted", "scan");
                check.equal(count_egf(n, k, s1, s2, ZeroLines::excluded), big(census.lonesum_restricted(s1, s2)),
                            where, "count_egf", "scan");
                check.equal(count_egf(n, k, s1, s2, ZeroLines::allowed),
                            big(census.lonesum_restricted_with_zeros(s1, s2)), where, "count_egf_with_zeros",
                            "scan");
                check.equal(decomposable_count(n, k, s1, s2), big(census.decomposable(s1, s2)), where,
                            "decomposable_total", "scan");
                for (unsigned r = 0; r <= std::min(n, k); ++r) {
                    check.equal(decomposable_count(n, k, s1, s2, r), big(census.decomposable(s1, s2, r)),
                                [&] { return where() + " r=" + std::to_string(r); }, "decomposable", "scan");
                }
            }
        }
    }
}

void polybernoulli_suite(Checker& check, unsigned max_n, unsigned max_cells, unsigned workers)
{
    for (const auto& s : family()) {
        for (long k = -4; k <= 4; ++k) {
            for (unsigned n = 0; n <= max_n && !check.failed(); ++n) {
                const auto where = [&] { return tag(s, "n=" + std::to_string(n) + " k=" + std::to_string(k)); };
                const Rational value = poly_bernoulli(n, k, s);
                check.equal(value, pb_egf(n, k, s), where, "sum", "egf");
                if (k >= 1) {
                    check.equal(value, pb_iterated_integral(n, k, s), where, "sum", "iterated_integral");
                }
            }
        }
    }
    for (const auto& [n, k] : scan_shapes(max_cells)) {
        if (check.failed()) {
            return;
        }
        const auto census = oracle::scan_matrices(n, k, workers);
        check.equal(poly_bernoulli(n, -static_cast<long>(k), BlockSizeSet::all()), Rational(big(census.lonesum())),
                    [&] { return std::to_string(n) + "x" + std::to_string(k); }, "poly_bernoulli", "scan");
    }
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"stirling", "bell", "fubini", "riordan", "lonesum", "polybernoulli"};
    return names;
}

SuiteReport run_suite(const std::string& suite, const SuiteOptions& options)
{
    SuiteReport report{suite, 0, std::nullopt};
    Checker check(report);
    const auto n_or = [&](unsigned fallback) { return options.max_n.value_or(fallback); };
    if (options.max_cells > oracle::max_scan_cells()) {
        throw GuardrailError("max cells " + std::to_string(options.max_cells) + " exceeds the scan limit of " +
                             std::to_string(oracle::max_scan_cells()));
    }
    if (suite == "stirling") {
        stirling_suite(check, n_or(9));
    } else if (suite == "bell") {
        bell_suite(check, n_or(9));
    } else if (suite == "fubini") {
        fubini_suite(check, n_or(oracle::max_ordered_partition_n));
    } else if (suite == "riordan") {
        riordan_suite(check, n_or(9));
    } else if (suite == "lonesum") {
        lonesum_suite(check, options.max_cells, options.workers);
    } else if (suite == "polybernoulli") {
        polybernoulli_suite(check, n_or(10), options.max_cells, options.workers);
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    return report;
}

}  // namespace rpt::verify
