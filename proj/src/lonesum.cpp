#include "rpt/lonesum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "rpt/series.hpp"
#include "rpt/stirling.hpp"

namespace rpt {

BinaryMatrix::BinaryMatrix(unsigned rows, unsigned cols)
    : rows_(rows), cols_(cols), bits_(static_cast<std::size_t>(rows) * cols, 0)
{
}

BinaryMatrix BinaryMatrix::parse(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto line = text.substr(start, end - start);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.remove_suffix(1);
        }
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
            line.remove_prefix(1);
        }
        if (!line.empty()) {
            lines.push_back(line);
        }
        start = end + 1;
    }
    if (lines.empty()) {
        return {};
    }
    BinaryMatrix m(static_cast<unsigned>(lines.size()), static_cast<unsigned>(lines.front().size()));
    for (unsigned r = 0; r < m.rows_; ++r) {
        if (lines[r].size() != m.cols_) {
            throw std::invalid_argument("matrix rows have different lengths");
        }
        for (unsigned c = 0; c < m.cols_; ++c) {
            const char ch = lines[r][c];
            if (ch != '0' && ch != '1') {
                throw std::invalid_argument(std::string("matrix entry must be 0 or 1, got '") + ch + "'");
            }
            m.set(r, c, ch == '1');
        }
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_mask(unsigned rows, unsigned cols, unsigned long long mask)
{
    BinaryMatrix m(rows, cols);
    for (std::size_t i = 0; i < m.bits_.size(); ++i) {
        m.bits_[i] = static_cast<unsigned char>((mask >> i) & 1u);
    }
    return m;
}

std::vector<unsigned> BinaryMatrix::row_sums() const
{
    std::vector<unsigned> sums(rows_, 0);
    for (unsigned r = 0; r < rows_; ++r) {
        for (unsigned c = 0; c < cols_; ++c) {
            sums[r] += at(r, c);
        }
    }
    return sums;
}

std::vector<unsigned> BinaryMatrix::col_sums() const
{
    std::vector<unsigned> sums(cols_, 0);
    for (unsigned r = 0; r < rows_; ++r) {
        for (unsigned c = 0; c < cols_; ++c) {
            sums[c] += at(r, c);
        }
    }
    return sums;
}

std::vector<bool> BinaryMatrix::row(unsigned r) const
{
    std::vector<bool> out(cols_);
    for (unsigned c = 0; c < cols_; ++c) {
        out[c] = at(r, c);
    }
    return out;
}

std::vector<bool> BinaryMatrix::column(unsigned c) const
{
    std::vector<bool> out(rows_);
    for (unsigned r = 0; r < rows_; ++r) {
        out[r] = at(r, c);
    }
    return out;
}

BinaryMatrix BinaryMatrix::transposed() const
{
    BinaryMatrix t(cols_, rows_);
    for (unsigned r = 0; r < rows_; ++r) {
        for (unsigned c = 0; c < cols_; ++c) {
            t.set(c, r, at(r, c));
        }
    }
    return t;
}

BinaryMatrix BinaryMatrix::submatrix(const std::vector<unsigned>& rows, const std::vector<unsigned>& cols) const
{
    BinaryMatrix s(static_cast<unsigned>(rows.size()), static_cast<unsigned>(cols.size()));
    for (unsigned i = 0; i < rows.size(); ++i) {
        for (unsigned j = 0; j < cols.size(); ++j) {
            s.set(i, j, at(rows[i], cols[j]));
        }
    }
    return s;
}

std::string BinaryMatrix::to_string() const
{
    std::string out;
    for (unsigned r = 0; r < rows_; ++r) {
        for (unsigned c = 0; c < cols_; ++c) {
            out += at(r, c) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

bool is_lonesum(const BinaryMatrix& m)
{
    // Two rows contain a 2x2 permutation pattern iff neither row's support
    // contains the other's.
    for (unsigned a = 0; a < m.rows(); ++a) {
        for (unsigned b = a + 1; b < m.rows(); ++b) {
            bool a_only = false;
            bool b_only = false;
            for (unsigned c = 0; c < m.cols(); ++c) {
                const bool x = m.at(a, c);
                const bool y = m.at(b, c);
                a_only = a_only || (x && !y);
                b_only = b_only || (y && !x);
            }
            if (a_only && b_only) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// Marks each index of [0, size) exactly once across the blocks and the zero set.
void check_cover(const std::vector<std::vector<unsigned>>& blocks, const std::vector<unsigned>& zeros, unsigned size,
                 const char* what)
{
    std::vector<int> seen(size, 0);
    const auto mark = [&](unsigned i) {
        if (i >= size) {
            throw std::invalid_argument(std::string(what) + " index out of range");
        }
        if (seen[i]++ != 0) {
            throw std::invalid_argument(std::string(what) + " index appears twice");
        }
    };
    for (const auto& block : blocks) {
        if (block.empty()) {
            throw std::invalid_argument(std::string(what) + " partition has an empty block");
        }
        std::for_each(block.begin(), block.end(), mark);
    }
    std::for_each(zeros.begin(), zeros.end(), mark);
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        throw std::invalid_argument(std::string(what) + " indices are not all covered");
    }
}

}  // namespace

BinaryMatrix reconstruct(const OrderedPartitionPair& pp, unsigned n, unsigned k)
{
    if (pp.row_blocks.size() != pp.col_blocks.size()) {
        throw std::invalid_argument("row and column partitions need the same number of blocks");
    }
    check_cover(pp.row_blocks, pp.zero_rows, n, "row");
    check_cover(pp.col_blocks, pp.zero_cols, k, "column");

    std::vector<unsigned> row_block(n, 0);  // 1-based, 0 = zero row
    std::vector<unsigned> col_block(k, 0);
    for (unsigned b = 0; b < pp.row_blocks.size(); ++b) {
        for (unsigned r : pp.row_blocks[b]) {
            row_block[r] = b + 1;
        }
        for (unsigned c : pp.col_blocks[b]) {
            col_block[c] = b + 1;
        }
    }
    BinaryMatrix m(n, k);
    for (unsigned r = 0; r < n; ++r) {
        for (unsigned c = 0; c < k; ++c) {
            m.set(r, c, row_block[r] != 0 && col_block[c] != 0 && col_block[c] <= row_block[r]);
        }
    }
    return m;
}

namespace {

struct TypeGroup {
    std::vector<bool> pattern;
    unsigned sum = 0;
    std::vector<unsigned> members;
};

// Groups the nonzero lines (rows, or columns when `by_column`) by exact
// pattern; returns the zero lines through `zeros`.
std::vector<TypeGroup> group_lines(const BinaryMatrix& m, bool by_column, std::vector<unsigned>& zeros)
{
    std::map<std::vector<bool>, TypeGroup> groups;
    const unsigned count = by_column ? m.cols() : m.rows();
    for (unsigned i = 0; i < count; ++i) {
        auto line = by_column ? m.column(i) : m.row(i);
        const auto sum = static_cast<unsigned>(std::count(line.begin(), line.end(), true));
        if (sum == 0) {
            zeros.push_back(i);
            continue;
        }
        auto& g = groups[line];
        g.pattern = std::move(line);
        g.sum = sum;
        g.members.push_back(i);
    }
    std::vector<TypeGroup> out;
    for (auto& [key, g] : groups) {
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

OrderedPartitionPair decode(const BinaryMatrix& m)
{
    if (!is_lonesum(m)) {
        throw std::invalid_argument("decode: matrix is not lonesum");
    }
    OrderedPartitionPair pp;
    auto rows = group_lines(m, false, pp.zero_rows);
    auto cols = group_lines(m, true, pp.zero_cols);
    std::sort(rows.begin(), rows.end(), [](const TypeGroup& a, const TypeGroup& b) { return a.sum < b.sum; });
    std::sort(cols.begin(), cols.end(), [](const TypeGroup& a, const TypeGroup& b) { return a.sum > b.sum; });
    // Distinct types of a lonesum matrix are nested, so their sums differ.
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].sum == rows[i - 1].sum) {
            throw std::logic_error("decode: two row types share a row sum");
        }
    }
    for (std::size_t i = 1; i < cols.size(); ++i) {
        if (cols[i].sum == cols[i - 1].sum) {
            throw std::logic_error("decode: two column types share a column sum");
        }
    }
    if (rows.size() != cols.size()) {
        throw std::logic_error("decode: row and column type counts differ");
    }
    for (auto& g : rows) {
        pp.row_blocks.push_back(std::move(g.members));
    }
    for (auto& g : cols) {
        pp.col_blocks.push_back(std::move(g.members));
    }
    return pp;
}

DecompositionReport decompose(const BinaryMatrix& m)
{
    const unsigned n = m.rows();
    const unsigned k = m.cols();
    // nodes 0..n-1 are rows, n..n+k-1 columns
    std::vector<unsigned> parent(n + k);
    std::iota(parent.begin(), parent.end(), 0u);
    const auto find = [&](unsigned x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::vector<bool> touched(n + k, false);
    for (unsigned r = 0; r < n; ++r) {
        for (unsigned c = 0; c < k; ++c) {
            if (m.at(r, c)) {
                touched[r] = touched[n + c] = true;
                const unsigned a = find(r);
                const unsigned b = find(n + c);
                if (a != b) {
                    parent[std::max(a, b)] = std::min(a, b);
                }
            }
        }
    }
    std::map<unsigned, std::size_t> index_of_root;
    DecompositionReport report;
    for (unsigned v = 0; v < n + k; ++v) {
        if (!touched[v]) {
            continue;
        }
        const unsigned root = find(v);
        auto [it, inserted] = index_of_root.emplace(root, report.components.size());
        if (inserted) {
            report.components.emplace_back();
        }
        auto& comp = report.components[it->second];
        if (v < n) {
            comp.first.push_back(v);
        } else {
            comp.second.push_back(v - n);
        }
    }
    report.order = static_cast<unsigned>(report.components.size());
    report.decomposable = std::all_of(report.components.begin(), report.components.end(), [&](const auto& comp) {
        return is_lonesum(m.submatrix(comp.first, comp.second));
    });
    return report;
}

Integer count_restricted(unsigned n, unsigned k, const BlockSizeSet& rows, const BlockSizeSet& cols)
{
    const auto tr = StirlingTriangle::by_recurrence(rows, n);
    const auto tc = StirlingTriangle::by_recurrence(cols, k);
    Integer total = 0;
    for (unsigned m = 0; m <= std::min(n, k); ++m) {
        const Integer mf = factorial(m);
        total += mf * tr.at(n, m) * mf * tc.at(k, m);
    }
    return total;
}

namespace {

struct BivariateParts {
    Series2 product;    // E_rows(x) E_cols(y)
    Series2 zero_part;  // (1 + E_rows(x)) (1 + E_cols(y))
};

BivariateParts bivariate_parts(const BlockSizeSet& rows, const BlockSizeSet& cols, unsigned order_x, unsigned order_y)
{
    const Series2 ex = Series2::in_x(rows.egf(order_x), order_y);
    const Series2 ey = Series2::in_y(order_x, cols.egf(order_y));
    const Series2 one = Series2::constant(order_x, order_y, 1);
    return {ex * ey, (one + ex) * (one + ey)};
}

void require_orders(unsigned n, unsigned k, unsigned order_x, unsigned order_y)
{
    if (order_x < n || order_y < k) {
        throw std::invalid_argument("truncation orders do not cover the requested coefficient");
    }
}

}  // namespace

Integer count_egf(unsigned n, unsigned k, const BlockSizeSet& rows, const BlockSizeSet& cols, ZeroLines zeros,
                  unsigned order_x, unsigned order_y)
{
    require_orders(n, k, order_x, order_y);
    const auto parts = bivariate_parts(rows, cols, order_x, order_y);
    Series2 gf = quasi_inverse(parts.product);
    if (zeros == ZeroLines::allowed) {
        gf = parts.zero_part * gf;
    }
    return egf_coeff2(gf, n, k).get_num();
}

Integer classical_lo(unsigned n, unsigned k)
{
    const auto t = StirlingTriangle::by_recurrence(BlockSizeSet::all(), std::max(n, k) + 1);
    Integer total = 0;
    for (unsigned m = 0; m <= std::min(n, k); ++m) {
        const Integer mf = factorial(m);
        total += mf * t.at(n + 1, m + 1) * mf * t.at(k + 1, m + 1);
    }
    return total;
}

Integer decomposable_count(unsigned n, unsigned k, const BlockSizeSet& rows, const BlockSizeSet& cols,
                           std::optional<unsigned> r, unsigned order_x, unsigned order_y)
{
    require_orders(n, k, order_x, order_y);
    const auto parts = bivariate_parts(rows, cols, order_x, order_y);
    // nonempty sequences of (row block, column block) pairs
    const Series2 blocks = quasi_inverse(parts.product) - Series2::constant(order_x, order_y, 1);
    Series2 gf = r ? pow(blocks, *r) / Rational(factorial(*r)) : exp(blocks);
    gf = parts.zero_part * gf;
    return egf_coeff2(gf, n, k).get_num();
}

}  // namespace rpt
