#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rpt/block_size_set.hpp"
#include "rpt/numeric.hpp"

namespace rpt {

/// Dense 0-1 matrix. Text form: one row per line, each a string of '0'/'1'.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(unsigned rows, unsigned cols);

    static BinaryMatrix parse(std::string_view text);
    /// Bit (r * cols + c) of `mask` is entry (r, c).
    static BinaryMatrix from_mask(unsigned rows, unsigned cols, unsigned long long mask);

    unsigned rows() const noexcept { return rows_; }
    unsigned cols() const noexcept { return cols_; }
    bool at(unsigned r, unsigned c) const { return bits_.at(r * cols_ + c) != 0; }
    void set(unsigned r, unsigned c, bool value) { bits_.at(r * cols_ + c) = value ? 1 : 0; }

    std::vector<unsigned> row_sums() const;
    std::vector<unsigned> col_sums() const;
    std::vector<bool> row(unsigned r) const;
    std::vector<bool> column(unsigned c) const;

    BinaryMatrix transposed() const;
    BinaryMatrix submatrix(const std::vector<unsigned>& rows, const std::vector<unsigned>& cols) const;

    std::string to_string() const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    unsigned rows_ = 0;
    unsigned cols_ = 0;
    std::vector<unsigned char> bits_;
};

/// Encoding of a lonesum matrix: ordered partitions of the nonzero row and
/// column indices into the same number m of blocks, plus the all-zero rows
/// and columns. Indices are 0-based; each block is kept ascending.
///
/// Convention: entry (r, c) is 1 iff the block index of c is at most the
/// block index of r. Row blocks therefore appear in ascending row-sum order
/// and column blocks in descending column-sum order.
struct OrderedPartitionPair {
    std::vector<std::vector<unsigned>> row_blocks;
    std::vector<std::vector<unsigned>> col_blocks;
    std::vector<unsigned> zero_rows;
    std::vector<unsigned> zero_cols;

    unsigned block_count() const noexcept { return static_cast<unsigned>(row_blocks.size()); }

    friend bool operator==(const OrderedPartitionPair&, const OrderedPartitionPair&) = default;
};

/// Connected components of the bipartite row/column graph of the nonzero
/// part of a matrix.
struct DecompositionReport {
    std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> components;
    bool decomposable = false;
    /// Component count; this is the decomposition order when decomposable.
    unsigned order = 0;
};

/// No 2x2 submatrix equals either 2x2 permutation matrix.
bool is_lonesum(const BinaryMatrix& m);

/// Throws std::invalid_argument when `pp` is not a valid pair for n x k.
BinaryMatrix reconstruct(const OrderedPartitionPair& pp, unsigned n, unsigned k);

/// Throws std::invalid_argument when `m` is not lonesum.
OrderedPartitionPair decode(const BinaryMatrix& m);

DecompositionReport decompose(const BinaryMatrix& m);

/// Lonesum n x k matrices without zero rows/columns whose row-type
/// multiplicities lie in `rows` and column-type multiplicities in `cols`:
/// sum_m m! {n brace m}_rows m! {k brace m}_cols.
Integer count_restricted(unsigned n, unsigned k, const BlockSizeSet& rows, const BlockSizeSet& cols);

enum class ZeroLines { excluded, allowed };

/// n! k! [x^n y^k] of 1/(1 - E_rows(x) E_cols(y)), multiplied by
/// (1 + E_rows(x))(1 + E_cols(y)) when zero lines are allowed. Series are
/// truncated at (order_x, order_y), which must cover (n, k).
Integer count_egf(unsigned n, unsigned k, const BlockSizeSet& rows, const BlockSizeSet& cols, ZeroLines zeros,
                  unsigned order_x, unsigned order_y);
inline Integer count_egf(unsigned n, unsigned k, const BlockSizeSet& rows, const BlockSizeSet& cols, ZeroLines zeros)
{
    return count_egf(n, k, rows, cols, zeros, n, k);
}

/// All n x k lonesum matrices: sum_m m! {n+1 brace m+1} m! {k+1 brace m+1}.
Integer classical_lo(unsigned n, unsigned k);

/// (rows, cols)-restricted lonesum decomposable n x k matrices of
/// decomposition order r, or of any order when r is empty.
Integer decomposable_count(unsigned n, unsigned k, const BlockSizeSet& rows, const BlockSizeSet& cols,
                           std::optional<unsigned> r, unsigned order_x, unsigned order_y);
inline Integer decomposable_count(unsigned n, unsigned k, const BlockSizeSet& rows, const BlockSizeSet& cols,
                                  std::optional<unsigned> r = std::nullopt)
{
    return decomposable_count(n, k, rows, cols, r, n, k);
}

}  // namespace rpt
