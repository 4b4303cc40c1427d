#include "rpt/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace rpt::oracle {

PartitionIterator::PartitionIterator(unsigned n) : n_(n), a_(n, 0), prefix_max_(n, 0) {}

unsigned PartitionIterator::block_count() const noexcept
{
    return n_ == 0 ? 0 : prefix_max_.back() + 1;
}

void PartitionIterator::next()
{
    if (done_) {
        return;
    }
    // Increment the rightmost position that can still grow, reset the rest to 0.
    for (unsigned i = n_; i-- > 1;) {
        if (a_[i] <= prefix_max_[i - 1]) {
            ++a_[i];
            prefix_max_[i] = std::max(prefix_max_[i - 1], a_[i]);
            for (unsigned j = i + 1; j < n_; ++j) {
                a_[j] = 0;
                prefix_max_[j] = prefix_max_[i];
            }
            return;
        }
    }
    done_ = true;
}

std::vector<unsigned> PartitionIterator::block_sizes() const
{
    std::vector<unsigned> sizes(block_count(), 0);
    for (unsigned b : a_) {
        ++sizes[b];
    }
    return sizes;
}

std::vector<std::vector<unsigned>> PartitionIterator::blocks() const
{
    std::vector<std::vector<unsigned>> out(block_count());
    for (unsigned i = 0; i < n_; ++i) {
        out[a_[i]].push_back(i);
    }
    return out;
}

namespace {

void require(bool ok, const std::string& message)
{
    if (!ok) {
        throw GuardrailError(message);
    }
}

bool admissible(const std::vector<unsigned>& sizes, const BlockSizeSet& set)
{
    return std::all_of(sizes.begin(), sizes.end(), [&](unsigned s) { return set.contains(s); });
}

}  // namespace

std::vector<Integer> count_partitions_by_blocks(unsigned n, const BlockSizeSet& set)
{
    require(n <= max_partition_n, "partition oracle limited to n <= " + std::to_string(max_partition_n));
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (PartitionIterator it(n); !it.done(); it.next()) {
        if (admissible(it.block_sizes(), set)) {
            ++counts[it.block_count()];
        }
    }
    return std::vector<Integer>(counts.begin(), counts.end());
}

Integer count_partitions(unsigned n, const BlockSizeSet& set)
{
    Integer total = 0;
    for (const auto& c : count_partitions_by_blocks(n, set)) {
        total += c;
    }
    return total;
}

Integer count_ordered_partitions(unsigned n, const BlockSizeSet& set)
{
    require(n <= max_ordered_partition_n,
            "ordered partition oracle limited to n <= " + std::to_string(max_ordered_partition_n));
    Integer total = 0;
    for (PartitionIterator it(n); !it.done(); it.next()) {
        if (admissible(it.block_sizes(), set)) {
            // each unordered partition yields block_count()! distinct orderings
            Integer orderings = 1;
            for (unsigned j = 2; j <= it.block_count(); ++j) {
                orderings *= j;
            }
            total += orderings;
        }
    }
    return total;
}

Integer count_functions(unsigned n, unsigned t, const BlockSizeSet& set)
{
    std::uint64_t space = 1;
    for (unsigned i = 0; i < n; ++i) {
        space *= t;
        require(space <= max_function_count, "function oracle limited to t^n <= 10^7");
    }
    if (t == 0) {
        return n == 0 ? 1 : 0;
    }
    std::vector<unsigned> g(n, 0);
    std::vector<unsigned> fibre(t);
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < space; ++code) {
        std::uint64_t rest = code;
        std::fill(fibre.begin(), fibre.end(), 0u);
        for (unsigned i = 0; i < n; ++i) {
            ++fibre[rest % t];
            rest /= t;
        }
        if (std::all_of(fibre.begin(), fibre.end(), [&](unsigned f) { return f == 0 || set.contains(f); })) {
            ++count;
        }
    }
    return Integer(static_cast<unsigned long>(count));
}

namespace {

// Rows a, b and columns c, d, e with (a,b) = (1,1) at c, (1,0) at d, (0,1) at e:
// any row/column permutation of U looks like this.
bool contains_u(const BinaryMatrix& m)
{
    for (unsigned a = 0; a < m.rows(); ++a) {
        for (unsigned b = 0; b < m.rows(); ++b) {
            if (a == b) {
                continue;
            }
            bool both = false;
            bool only_a = false;
            bool only_b = false;
            for (unsigned c = 0; c < m.cols(); ++c) {
                both = both || (m.at(a, c) && m.at(b, c));
                only_a = only_a || (m.at(a, c) && !m.at(b, c));
                only_b = only_b || (!m.at(a, c) && m.at(b, c));
            }
            if (both && only_a && only_b) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace

bool avoids_kamano_patterns(const BinaryMatrix& m)
{
    return !contains_u(m) && !contains_u(m.transposed());
}

unsigned max_scan_cells()
{
    if (const char* env = std::getenv("RPT_MAX_CELLS")) {
        try {
            const unsigned long v = std::stoul(env);
            return static_cast<unsigned>(std::min<unsigned long>(v, hard_max_cells));
        } catch (const std::exception&) {
            throw GuardrailError(std::string("RPT_MAX_CELLS is not a number: ") + env);
        }
    }
    return default_max_cells;
}

MatrixCensus::MatrixCensus(unsigned rows, unsigned cols, std::map<MatrixProfile, std::uint64_t> histogram)
    : rows_(rows), cols_(cols), histogram_(std::move(histogram))
{
}

namespace {

bool types_in(const std::vector<unsigned>& counts, const BlockSizeSet& set)
{
    return std::all_of(counts.begin(), counts.end(), [&](unsigned c) { return set.contains(c); });
}

bool zero_count_ok(unsigned zeros, const BlockSizeSet& set)
{
    return zeros == 0 || set.contains(zeros);
}

template <typename Pred>
std::uint64_t tally(const std::map<MatrixProfile, std::uint64_t>& histogram, Pred pred)
{
    std::uint64_t total = 0;
    for (const auto& [p, count] : histogram) {
        if (pred(p)) {
            total += count;
        }
    }
    return total;
}

}  // namespace

std::uint64_t MatrixCensus::total() const
{
    return tally(histogram_, [](const MatrixProfile&) { return true; });
}

std::uint64_t MatrixCensus::lonesum() const
{
    return tally(histogram_, [](const MatrixProfile& p) { return p.lonesum; });
}

std::uint64_t MatrixCensus::lonesum_restricted(const BlockSizeSet& rows, const BlockSizeSet& cols) const
{
    return tally(histogram_, [&](const MatrixProfile& p) {
        return p.lonesum && p.zero_rows == 0 && p.zero_cols == 0 && types_in(p.row_type_counts, rows) &&
               types_in(p.col_type_counts, cols);
    });
}

std::uint64_t MatrixCensus::lonesum_restricted_with_zeros(const BlockSizeSet& rows, const BlockSizeSet& cols) const
{
    return tally(histogram_, [&](const MatrixProfile& p) {
        return p.lonesum && zero_count_ok(p.zero_rows, rows) && zero_count_ok(p.zero_cols, cols) &&
               types_in(p.row_type_counts, rows) && types_in(p.col_type_counts, cols);
    });
}

std::uint64_t MatrixCensus::decomposable(const BlockSizeSet& rows, const BlockSizeSet& cols,
                                         std::optional<unsigned> order) const
{
    return tally(histogram_, [&](const MatrixProfile& p) {
        return p.decomposition_order && (!order || *p.decomposition_order == *order) &&
               zero_count_ok(p.zero_rows, rows) && zero_count_ok(p.zero_cols, cols) &&
               types_in(p.row_type_counts, rows) && types_in(p.col_type_counts, cols);
    });
}

namespace {

std::vector<unsigned> type_counts(const BinaryMatrix& m, bool by_column, unsigned& zeros)
{
    std::map<std::vector<bool>, unsigned> counts;
    const unsigned lines = by_column ? m.cols() : m.rows();
    for (unsigned i = 0; i < lines; ++i) {
        auto line = by_column ? m.column(i) : m.row(i);
        if (std::find(line.begin(), line.end(), true) == line.end()) {
            ++zeros;
        } else {
            ++counts[line];
        }
    }
    std::vector<unsigned> out;
    for (const auto& [pattern, c] : counts) {
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

MatrixProfile profile(const BinaryMatrix& m)
{
    MatrixProfile p;
    p.lonesum = is_lonesum(m);
    const auto report = decompose(m);
    if (report.decomposable) {
        p.decomposition_order = report.order;
    }
    p.row_type_counts = type_counts(m, false, p.zero_rows);
    p.col_type_counts = type_counts(m, true, p.zero_cols);
    return p;
}

MatrixCensus scan_matrices(unsigned n, unsigned k, unsigned workers)
{
    const unsigned long long cells = static_cast<unsigned long long>(n) * k;
    const unsigned limit = max_scan_cells();
    require(cells <= limit, "matrix scan limited to n*k <= " + std::to_string(limit) + " (got " +
                                std::to_string(cells) + ")");
    workers = std::max(1u, workers);
    const unsigned long long space = 1ULL << cells;

    std::vector<std::map<MatrixProfile, std::uint64_t>> partial(workers);
    const auto work = [&](unsigned w) {
        for (unsigned long long mask = w; mask < space; mask += workers) {
            ++partial[w][profile(BinaryMatrix::from_mask(n, k, mask))];
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
    }
    std::map<MatrixProfile, std::uint64_t> merged;
    for (const auto& part : partial) {
        for (const auto& [p, c] : part) {
            merged[p] += c;
        }
    }
    return MatrixCensus(n, k, std::move(merged));
}

}  // namespace rpt::oracle
