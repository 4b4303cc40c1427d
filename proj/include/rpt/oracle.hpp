#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rpt/block_size_set.hpp"
#include "rpt/lonesum.hpp"
#include "rpt/numeric.hpp"

// Brute-force ground truth. Nothing here uses a counting formula; every
// count is produced by walking the objects themselves. Inputs beyond the
// guardrails raise GuardrailError.
namespace rpt::oracle {

inline constexpr unsigned max_partition_n = 10;
inline constexpr unsigned max_ordered_partition_n = 8;
inline constexpr std::uint64_t max_function_count = 10'000'000;
inline constexpr unsigned default_max_cells = 20;
inline constexpr unsigned hard_max_cells = 24;

/// Walks all set partitions of [n] as restricted growth strings: a[0] = 0
/// and a[i] <= 1 + max(a[0..i-1]); element i belongs to block a[i].
class PartitionIterator {
public:
    explicit PartitionIterator(unsigned n);

    bool done() const noexcept { return done_; }
    void next();

    const std::vector<unsigned>& growth_string() const noexcept { return a_; }
    unsigned block_count() const noexcept;
    std::vector<unsigned> block_sizes() const;
    std::vector<std::vector<unsigned>> blocks() const;

private:
    unsigned n_;
    std::vector<unsigned> a_;
    std::vector<unsigned> prefix_max_;  // prefix_max_[i] = max(a[0..i])
    bool done_ = false;
};

/// Entry k counts partitions of [n] into k blocks, every block size in S.
std::vector<Integer> count_partitions_by_blocks(unsigned n, const BlockSizeSet& set);
Integer count_partitions(unsigned n, const BlockSizeSet& set);

/// Sum over admissible partitions of (number of blocks)!.
Integer count_ordered_partitions(unsigned n, const BlockSizeSet& set);

/// Maps g: [n] -> [t] whose every nonempty fibre has size in S.
Integer count_functions(unsigned n, unsigned t, const BlockSizeSet& set);

/// Kamano's criterion: no submatrix is a row/column permutation of
/// U = [[1,1,0],[1,0,1]] or of its transpose.
bool avoids_kamano_patterns(const BinaryMatrix& m);

/// Cell limit for matrix scans: RPT_MAX_CELLS when set (capped at
/// hard_max_cells), default_max_cells otherwise.
unsigned max_scan_cells();

/// Everything the scan predicates need to know about one matrix.
struct MatrixProfile {
    bool lonesum = false;
    std::optional<unsigned> decomposition_order;  // empty when not decomposable
    unsigned zero_rows = 0;
    unsigned zero_cols = 0;
    std::vector<unsigned> row_type_counts;  // multiplicities of nonzero row patterns, sorted
    std::vector<unsigned> col_type_counts;

    auto operator<=>(const MatrixProfile&) const = default;
};

/// Histogram of profiles over all 2^{nk} matrices of one shape.
class MatrixCensus {
public:
    MatrixCensus(unsigned rows, unsigned cols, std::map<MatrixProfile, std::uint64_t> histogram);

    unsigned rows() const noexcept { return rows_; }
    unsigned cols() const noexcept { return cols_; }
    std::uint64_t total() const;
    std::uint64_t lonesum() const;
    /// Lonesum, type multiplicities in (S_rows, S_cols), no zero lines.
    std::uint64_t lonesum_restricted(const BlockSizeSet& rows, const BlockSizeSet& cols) const;
    /// As above but zero lines allowed, with zero-row count in S_rows or 0
    /// and zero-column count in S_cols or 0.
    std::uint64_t lonesum_restricted_with_zeros(const BlockSizeSet& rows, const BlockSizeSet& cols) const;
    /// Restricted lonesum decomposable matrices of order r (any order if empty).
    std::uint64_t decomposable(const BlockSizeSet& rows, const BlockSizeSet& cols,
                               std::optional<unsigned> order = std::nullopt) const;

    const std::map<MatrixProfile, std::uint64_t>& histogram() const noexcept { return histogram_; }

private:
    unsigned rows_;
    unsigned cols_;
    std::map<MatrixProfile, std::uint64_t> histogram_;
};

MatrixProfile profile(const BinaryMatrix& m);

/// Scans every n x k 0-1 matrix. Work is split by fixed stride over
/// `workers` threads; the histogram does not depend on the worker count.
MatrixCensus scan_matrices(unsigned n, unsigned k, unsigned workers = 1);

}  // namespace rpt::oracle
