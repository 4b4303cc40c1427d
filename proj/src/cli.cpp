#include "rpt/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rpt/fubini.hpp"
#include "rpt/lonesum.hpp"
#include "rpt/oracle.hpp"
#include "rpt/poly_bernoulli.hpp"
#include "rpt/riordan.hpp"
#include "rpt/stirling.hpp"
#include "rpt/verify.hpp"

namespace rpt::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Json>> rows;
};

struct Document {
    Json params = Json::object();
    Json values = Json::array();
    Table table;
    std::vector<std::string> routes;
    std::optional<std::string> mismatch;

    void disagree(const std::string& what)
    {
        if (!mismatch) {
            mismatch = what;
        }
    }
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string cell_text(const Json& cell)
{
    if (cell.is_string()) {
        return cell.get<std::string>();
    }
    if (cell.is_null()) {
        return "";
    }
    return cell.dump();
}

std::string csv_escape(const std::string& text)
{
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char ch : text) {
        quoted += ch;
        if (ch == '"') {
            quoted += '"';
        }
    }
    return quoted + "\"";
}

void emit(const std::string& command, const Document& doc, Format format, std::ostream& out)
{
    switch (format) {
    case Format::json: {
        Json provenance = {{"routes_compared", doc.routes}, {"agreed", !doc.mismatch}};
        if (doc.mismatch) {
            provenance["mismatch"] = *doc.mismatch;
        }
        const Json document = {
            {"command", command}, {"params", doc.params}, {"values", doc.values}, {"provenance", provenance}};
        out << document.dump(2) << '\n';
        break;
    }
    case Format::csv: {
        const auto line = [&out](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                out << (i ? "," : "") << csv_escape(cells[i]);
            }
            out << '\n';
        };
        line(doc.table.header);
        for (const auto& row : doc.table.rows) {
            std::vector<std::string> cells;
            std::transform(row.begin(), row.end(), std::back_inserter(cells), cell_text);
            line(cells);
        }
        break;
    }
    case Format::pretty: {
        std::vector<std::vector<std::string>> grid{doc.table.header};
        for (const auto& row : doc.table.rows) {
            std::vector<std::string> cells;
            std::transform(row.begin(), row.end(), std::back_inserter(cells), cell_text);
            grid.push_back(std::move(cells));
        }
        std::vector<std::size_t> width;
        for (const auto& row : grid) {
            width.resize(std::max(width.size(), row.size()), 0);
            for (std::size_t i = 0; i < row.size(); ++i) {
                width[i] = std::max(width[i], row[i].size());
            }
        }
        for (const auto& row : grid) {
            std::string text;
            for (std::size_t i = 0; i < row.size(); ++i) {
                text += (i ? "  " : "") + std::string(width[i] - row[i].size(), ' ') + row[i];
            }
            out << text << '\n';
        }
        out << "routes: ";
        for (std::size_t i = 0; i < doc.routes.size(); ++i) {
            out << (i ? ", " : "") << doc.routes[i];
        }
        out << (doc.mismatch ? " (MISMATCH)" : " (agree)") << '\n';
        break;
    }
    }
}

long parse_long(const std::string& text)
{
    long value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (first != last && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
        throw UsageError("not an integer: '" + text + "'");
    }
    return value;
}

unsigned nonnegative(long value, const char* flag)
{
    if (value < 0) {
        throw UsageError(std::string(flag) + " must be nonnegative");
    }
    return static_cast<unsigned>(value);
}

Json range_json(const Range& r)
{
    return Json::array({r.lo, r.hi});
}

Range require(const std::optional<Range>& range, const char* flag)
{
    if (!range) {
        throw UsageError(std::string(flag) + " is required for this command");
    }
    return *range;
}

Range require_nonnegative(const std::optional<Range>& range, const char* flag)
{
    const Range r = require(range, flag);
    nonnegative(r.lo, flag);
    return r;
}

BlockSizeSet parse_set(const std::string& text, const char* flag)
{
    try {
        return BlockSizeSet::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

// Columns k of n!/k! [x^n] E_S^k read off the series powers.
std::vector<std::vector<Integer>> egf_triangle(const BlockSizeSet& s, unsigned max_n, unsigned order)
{
    if (order < max_n) {
        throw std::invalid_argument("truncation order " + std::to_string(order) + " below n = " +
                                    std::to_string(max_n));
    }
    std::vector<std::vector<Integer>> rows(max_n + 1, std::vector<Integer>(max_n + 1, 0));
    const Series e = s.egf(order);
    Series power = Series::constant(order, 1);
    for (unsigned k = 0; k <= max_n; ++k) {
        for (unsigned n = k; n <= max_n; ++n) {
            const Rational value = egf_coeff(power, n) / Rational(factorial(k));
            rows[n][k] = value.get_num();
        }
        power *= e;
    }
    return rows;
}

void matrix_output(Document& doc, const Range& n, const std::function<Rational(unsigned, unsigned)>& entry)
{
    const unsigned hi = static_cast<unsigned>(n.hi);
    doc.table.header = {"n"};
    for (unsigned k = 0; k <= hi; ++k) {
        doc.table.header.push_back(std::to_string(k));
    }
    for (unsigned row = static_cast<unsigned>(n.lo); row <= hi; ++row) {
        std::vector<Json> cells{row};
        Json values = Json::array();
        for (unsigned k = 0; k <= hi; ++k) {
            const std::string text = to_string(entry(row, k));
            cells.push_back(text);
            values.push_back(text);
        }
        doc.table.rows.push_back(std::move(cells));
        doc.values.push_back({{"n", row}, {"row", values}});
    }
}

Document stirling_command(const Request& req)
{
    const auto s = parse_set(req.set, "--set");
    const Range n = require_nonnegative(req.n, "--n");
    const unsigned hi = static_cast<unsigned>(n.hi);
    const unsigned order = req.order.value_or(hi + 4);

    Document doc;
    doc.params = {{"set", s.to_string()}, {"n", range_json(n)}, {"order", order}};
    doc.routes = {"recurrence", "egf"};
    const auto rec = StirlingTriangle::by_recurrence(s, hi);
    const auto egf = egf_triangle(s, hi, order);
    for (unsigned row = 0; row <= hi; ++row) {
        for (unsigned k = 0; k <= row; ++k) {
            if (rec.at(row, k) != egf[row][k]) {
                doc.disagree("n=" + std::to_string(row) + " k=" + std::to_string(k) + ": recurrence=" +
                             to_string(rec.at(row, k)) + " egf=" + to_string(egf[row][k]));
            }
        }
    }
    matrix_output(doc, n, [&](unsigned r, unsigned k) { return Rational(rec.at(r, k)); });
    return doc;
}

Document riordan_command(const Request& req)
{
    const auto s = parse_set(req.set, "--set");
    const Range n = require_nonnegative(req.n, "--n");
    const unsigned size = static_cast<unsigned>(n.hi) + 1;

    Document doc;
    doc.params = {{"set", s.to_string()}, {"n", range_json(n)}, {"inverse", req.inverse}};
    const auto m = stirling_matrix(s, size);
    const auto rec = StirlingTriangle::by_recurrence(s, size - 1);
    for (unsigned row = 0; row < size; ++row) {
        for (unsigned k = 0; k <= row; ++k) {
            if (m.at(row, k) != Rational(rec.at(row, k))) {
                doc.disagree("n=" + std::to_string(row) + " k=" + std::to_string(k) + ": riordan=" +
                             to_string(m.at(row, k)) + " recurrence=" + to_string(rec.at(row, k)));
            }
        }
    }
    if (!req.inverse) {
        doc.routes = {"riordan_array", "recurrence"};
        matrix_output(doc, n, [&](unsigned r, unsigned k) { return m.at(r, k); });
        return doc;
    }
    doc.routes = {"riordan_array", "recurrence", "forward_substitution", "orthogonality"};
    const Matrix t = inverse(m);
    if (!(m.matrix() * t == Matrix::identity(size)) || !(t * m.matrix() == Matrix::identity(size))) {
        doc.disagree("M_S times its inverse is not the identity");
    }
    matrix_output(doc, n, [&](unsigned r, unsigned k) { return t.at(r, k); });
    return doc;
}

IntPolynomial row_polynomial(const std::vector<Integer>& row)
{
    IntPolynomial p;
    for (unsigned k = 0; k < row.size(); ++k) {
        p = p + IntPolynomial::monomial(k, row[k]);
    }
    return p;
}

Document bell_command(const Request& req)
{
    const auto s = parse_set(req.set, "--set");
    const Range n = require_nonnegative(req.n, "--n");
    const unsigned hi = static_cast<unsigned>(n.hi);
    const unsigned order = req.order.value_or(hi + 4);

    Document doc;
    doc.params = {{"set", s.to_string()}, {"n", range_json(n)}, {"order", order}, {"polynomial", req.polynomial}};
    doc.table.header = {"n", req.polynomial ? "polynomial" : "value"};
    if (req.polynomial) {
        const bool det = s.contains(1);
        doc.routes = {"recurrence", "egf"};
        if (det) {
            doc.routes.push_back("determinant");
        }
        const auto egf = egf_triangle(s, hi, order);
        for (unsigned row = static_cast<unsigned>(n.lo); row <= hi; ++row) {
            const auto p = bell_polynomial(row, s);
            if (!(p == row_polynomial(egf[row]))) {
                doc.disagree("n=" + std::to_string(row) + ": recurrence=" + p.to_string() +
                             " egf=" + row_polynomial(egf[row]).to_string());
            }
            if (det && !(p == bell_det(row, s))) {
                doc.disagree("n=" + std::to_string(row) + ": recurrence=" + p.to_string() +
                             " determinant=" + bell_det(row, s).to_string());
            }
            doc.table.rows.push_back({row, p.to_string()});
            doc.values.push_back({{"n", row}, {"polynomial", p.to_string()}});
        }
        return doc;
    }
    doc.routes = {"recurrence", "egf"};
    if (order < hi) {
        throw std::invalid_argument("truncation order below n");
    }
    const Series bell_egf = exp(s.egf(order));
    for (unsigned row = static_cast<unsigned>(n.lo); row <= hi; ++row) {
        const Integer value = bell_number(row, s);
        const Rational other = egf_coeff(bell_egf, row);
        if (Rational(value) != other) {
            doc.disagree("n=" + std::to_string(row) + ": recurrence=" + to_string(value) + " egf=" + to_string(other));
        }
        doc.table.rows.push_back({row, to_string(value)});
        doc.values.push_back({{"n", row}, {"value", to_string(value)}});
    }
    return doc;
}

Document fubini_command(const Request& req)
{
    const auto s = parse_set(req.set, "--set");
    const Range n = require_nonnegative(req.n, "--n");
    const unsigned hi = static_cast<unsigned>(n.hi);
    const unsigned order = req.order.value_or(hi + 4);

    Document doc;
    doc.params = {{"set", s.to_string()}, {"n", range_json(n)}, {"order", order}};
    doc.routes = {"sum", "egf"};
    if (req.q) {
        if (req.q->lo < 1) {
            throw UsageError("--q must be at least 1");
        }
        doc.params["q"] = range_json(*req.q);
        doc.routes.insert(doc.routes.end(), {"poonen", "congruence"});
        doc.table.header = {"n", "q", "value", "poonen_lhs", "poonen_rhs", "congruence_lhs", "congruence_rhs"};
    } else {
        doc.table.header = {"n", "value"};
    }
    for (unsigned row = static_cast<unsigned>(n.lo); row <= hi; ++row) {
        const Integer value = fubini(row, s);
        const Integer other = fubini_egf(row, s, order);
        if (value != other) {
            doc.disagree("n=" + std::to_string(row) + ": sum=" + to_string(value) + " egf=" + to_string(other));
        }
        if (!req.q) {
            doc.table.rows.push_back({row, to_string(value)});
            doc.values.push_back({{"n", row}, {"value", to_string(value)}});
            continue;
        }
        for (long q = req.q->lo; q <= req.q->hi; ++q) {
            const auto poonen = poonen_check(row, static_cast<unsigned>(q), s);
            const auto congruence = congruence_check(row, static_cast<unsigned>(q), s);
            const std::string where = "n=" + std::to_string(row) + " q=" + std::to_string(q);
            if (!poonen.holds) {
                doc.disagree(where + ": poonen " + to_string(poonen.lhs) + " != " + to_string(poonen.rhs));
            }
            if (!congruence.holds) {
                doc.disagree(where + ": congruence " + to_string(congruence.lhs) + " != " + to_string(congruence.rhs));
            }
            doc.table.rows.push_back({row, q, to_string(value), to_string(poonen.lhs), to_string(poonen.rhs),
                                      to_string(congruence.lhs), to_string(congruence.rhs)});
            doc.values.push_back({{"n", row},
                                  {"q", q},
                                  {"value", to_string(value)},
                                  {"poonen", {to_string(poonen.lhs), to_string(poonen.rhs)}},
                                  {"congruence", {to_string(congruence.lhs), to_string(congruence.rhs)}}});
        }
    }
    return doc;
}

std::string read_matrix_text(const std::string& path)
{
    std::ostringstream text;
    if (path == "-") {
        text << std::cin.rdbuf();
        return text.str();
    }
    std::ifstream file(path);
    if (!file) {
        throw UsageError("cannot open matrix file: " + path);
    }
    text << file.rdbuf();
    return text.str();
}

Json one_based(const std::vector<unsigned>& indices)
{
    Json out = Json::array();
    for (unsigned i : indices) {
        out.push_back(i + 1);
    }
    return out;
}

Json one_based(const std::vector<std::vector<unsigned>>& blocks)
{
    Json out = Json::array();
    for (const auto& block : blocks) {
        out.push_back(one_based(block));
    }
    return out;
}

Document matrix_command(const Request& req)
{
    const auto m = BinaryMatrix::parse(read_matrix_text(*req.matrix_path));
    Document doc;
    doc.params = {{"matrix", *req.matrix_path}, {"rows", m.rows()}, {"cols", m.cols()}};
    doc.routes = {"forbidden_submatrix", "decode_reconstruct", "components"};

    const bool lonesum = is_lonesum(m);
    Json value = {{"rows", m.rows()}, {"cols", m.cols()}, {"lonesum", lonesum}};
    doc.table.header = {"field", "value"};
    doc.table.rows.push_back({"lonesum", lonesum ? "yes" : "no"});
    if (lonesum) {
        const auto pp = decode(m);
        if (!(reconstruct(pp, m.rows(), m.cols()) == m)) {
            doc.disagree("decode followed by reconstruct does not return the matrix");
        }
        value["row_blocks"] = one_based(pp.row_blocks);
        value["col_blocks"] = one_based(pp.col_blocks);
        value["zero_rows"] = one_based(pp.zero_rows);
        value["zero_cols"] = one_based(pp.zero_cols);
        for (const char* key : {"row_blocks", "col_blocks", "zero_rows", "zero_cols"}) {
            doc.table.rows.push_back({key, value[key].dump()});
        }
    }
    const auto report = decompose(m);
    value["decomposable"] = report.decomposable;
    value["components"] = report.order;
    doc.table.rows.push_back({"decomposable", report.decomposable ? "yes" : "no"});
    doc.table.rows.push_back({"components", report.order});
    if (m.rows() <= 12 && m.cols() <= 12) {
        doc.routes.push_back("kamano_patterns");
        if (report.decomposable != oracle::avoids_kamano_patterns(m)) {
            doc.disagree("component test and U-pattern test disagree on decomposability");
        }
    }
    doc.values.push_back(value);
    return doc;
}

// Lonesum counts built from the zero-free count by choosing the zero lines.
Integer zero_line_sum(unsigned n, unsigned k, const BlockSizeSet& s1, const BlockSizeSet& s2)
{
    Integer total = 0;
    for (unsigned zr = 0; zr <= n; ++zr) {
        if (zr != 0 && !s1.contains(zr)) {
            continue;
        }
        for (unsigned zc = 0; zc <= k; ++zc) {
            if (zc != 0 && !s2.contains(zc)) {
                continue;
            }
            total += binomial(n, zr) * binomial(k, zc) * count_restricted(n - zr, k - zc, s1, s2);
        }
    }
    return total;
}

Document lonesum_command(const Request& req)
{
    if (req.matrix_path) {
        return matrix_command(req);
    }
    const auto s1 = parse_set(req.set1, "--set1");
    const auto s2 = parse_set(req.set2, "--set2");
    const Range n = require_nonnegative(req.n, "--n");
    const Range k = require_nonnegative(req.k, "--k");
    const unsigned ox = req.order.value_or(static_cast<unsigned>(n.hi) + 4);
    const unsigned oy = req.order.value_or(static_cast<unsigned>(k.hi) + 4);

    Document doc;
    doc.params = {{"set1", s1.to_string()}, {"set2", s2.to_string()}, {"n", range_json(n)},
                  {"k", range_json(k)},     {"with_zeros", req.with_zeros}, {"order", {ox, oy}}};
    doc.routes = req.with_zeros ? std::vector<std::string>{"egf", "zero_lines"}
                                : std::vector<std::string>{"ordered_partitions", "egf"};
    doc.table.header = {"n", "k", "count"};
    for (unsigned a = static_cast<unsigned>(n.lo); a <= n.hi; ++a) {
        for (unsigned b = static_cast<unsigned>(k.lo); b <= k.hi; ++b) {
            const Integer egf = count_egf(a, b, s1, s2, req.with_zeros ? ZeroLines::allowed : ZeroLines::excluded, ox,
                                          oy);
            const Integer other = req.with_zeros ? zero_line_sum(a, b, s1, s2) : count_restricted(a, b, s1, s2);
            if (egf != other) {
                doc.disagree(std::to_string(a) + "x" + std::to_string(b) + ": egf=" + to_string(egf) + " " +
                             doc.routes[req.with_zeros ? 1 : 0] + "=" + to_string(other));
            }
            doc.table.rows.push_back({a, b, to_string(egf)});
            doc.values.push_back({{"n", a}, {"k", b}, {"count", to_string(egf)}});
        }
    }
    return doc;
}

Integer scan_value(const oracle::MatrixCensus& census, const BlockSizeSet& s1, const BlockSizeSet& s2,
                   std::optional<unsigned> r)
{
    return Integer(std::to_string(census.decomposable(s1, s2, r)));
}

Document decomposable_command(const Request& req)
{
    const auto s1 = parse_set(req.set1, "--set1");
    const auto s2 = parse_set(req.set2, "--set2");
    const Range n = require_nonnegative(req.n, "--n");
    const Range k = require_nonnegative(req.k, "--k");
    if (req.r) {
        nonnegative(req.r->lo, "--r");
    }
    const unsigned ox = req.order.value_or(static_cast<unsigned>(n.hi) + 4);
    const unsigned oy = req.order.value_or(static_cast<unsigned>(k.hi) + 4);
    const unsigned scan_limit = std::min(req.max_cells, oracle::max_scan_cells());

    Document doc;
    doc.params = {{"set1", s1.to_string()}, {"set2", s2.to_string()}, {"n", range_json(n)}, {"k", range_json(k)}};
    if (req.r) {
        doc.params["r"] = range_json(*req.r);
    }
    doc.params["order"] = {ox, oy};
    doc.params["max_cells"] = scan_limit;
    doc.routes = req.r ? std::vector<std::string>{"egf_power"} : std::vector<std::string>{"exp_egf", "order_sum"};
    doc.table.header = req.r ? std::vector<std::string>{"n", "k", "r", "count"}
                             : std::vector<std::string>{"n", "k", "count"};
    bool scanned = false;
    for (unsigned a = static_cast<unsigned>(n.lo); a <= n.hi; ++a) {
        for (unsigned b = static_cast<unsigned>(k.lo); b <= k.hi; ++b) {
            const std::string shape = std::to_string(a) + "x" + std::to_string(b);
            std::optional<oracle::MatrixCensus> census;
            if (a * b <= scan_limit) {
                census = oracle::scan_matrices(a, b, req.workers);
                scanned = true;
            }
            if (!req.r) {
                const Integer total = decomposable_count(a, b, s1, s2, std::nullopt, ox, oy);
                Integer sum = 0;
                for (unsigned r = 0; r <= std::min(a, b); ++r) {
                    sum += decomposable_count(a, b, s1, s2, r, ox, oy);
                }
                if (total != sum) {
                    doc.disagree(shape + ": exp_egf=" + to_string(total) + " order_sum=" + to_string(sum));
                }
                if (census && scan_value(*census, s1, s2, std::nullopt) != total) {
                    doc.disagree(shape + ": exp_egf=" + to_string(total) +
                                 " scan=" + to_string(scan_value(*census, s1, s2, std::nullopt)));
                }
                doc.table.rows.push_back({a, b, to_string(total)});
                doc.values.push_back({{"n", a}, {"k", b}, {"count", to_string(total)}});
                continue;
            }
            for (long r = req.r->lo; r <= req.r->hi; ++r) {
                const unsigned order = static_cast<unsigned>(r);
                const Integer value = decomposable_count(a, b, s1, s2, order, ox, oy);
                if (census && scan_value(*census, s1, s2, order) != value) {
                    doc.disagree(shape + " r=" + std::to_string(r) + ": egf_power=" + to_string(value) +
                                 " scan=" + to_string(scan_value(*census, s1, s2, order)));
                }
                doc.table.rows.push_back({a, b, r, to_string(value)});
                doc.values.push_back({{"n", a}, {"k", b}, {"r", r}, {"count", to_string(value)}});
            }
        }
    }
    if (scanned) {
        doc.routes.push_back("scan");
    }
    return doc;
}

Document polybernoulli_command(const Request& req)
{
    const auto s = parse_set(req.set, "--set");
    const Range n = require_nonnegative(req.n, "--n");
    const Range k = require(req.k, "--k");
    const unsigned hi = static_cast<unsigned>(n.hi);

    Document doc;
    doc.params = {{"set", s.to_string()}, {"n", range_json(n)}, {"k", range_json(k)}};
    if (req.order) {
        doc.params["order"] = *req.order;
    }
    doc.routes = {"sum", "egf"};
    if (k.hi >= 1) {
        doc.routes.push_back("iterated_integral");
    }
    doc.table.header = {"n", "k", "value"};
    for (long kk = k.lo; kk <= k.hi; ++kk) {
        for (unsigned row = static_cast<unsigned>(n.lo); row <= hi; ++row) {
            const std::string where = "n=" + std::to_string(row) + " k=" + std::to_string(kk);
            const Rational value = poly_bernoulli(row, kk, s);
            const Rational egf =
                pb_egf(row, kk, s, req.order.value_or(std::max(hi + 4, pb_egf_min_order(row, s))));
            if (egf != value) {
                doc.disagree(where + ": sum=" + to_string(value) + " egf=" + to_string(egf));
            }
            if (kk >= 1) {
                const Rational integral = pb_iterated_integral(
                    row, kk, s, req.order.value_or(std::max(hi + 4, pb_integral_min_order(row, kk, s))));
                if (integral != value) {
                    doc.disagree(where + ": sum=" + to_string(value) + " iterated_integral=" + to_string(integral));
                }
            }
            doc.table.rows.push_back({row, kk, to_string(value)});
            doc.values.push_back({{"n", row}, {"k", kk}, {"value", to_string(value)}});
        }
    }
    return doc;
}

Document verify_command(const Request& req)
{
    std::vector<std::string> suites;
    if (req.suite == "all") {
        suites = verify::suite_names();
    } else {
        const auto& names = verify::suite_names();
        if (std::find(names.begin(), names.end(), req.suite) == names.end()) {
            throw UsageError("unknown suite: " + req.suite);
        }
        suites = {req.suite};
    }
    verify::SuiteOptions options;
    if (req.n) {
        options.max_n = nonnegative(req.n->hi, "--n");
    }
    options.max_cells = req.max_cells;
    options.workers = req.workers;

    Document doc;
    doc.params = {{"suite", req.suite}, {"max_cells", req.max_cells}};
    if (req.n) {
        doc.params["n"] = *options.max_n;
    }
    doc.routes = {"formula", "oracle"};
    doc.table.header = {"suite", "checks", "status"};
    for (const auto& name : suites) {
        const auto report = verify::run_suite(name, options);
        Json value = {{"suite", name}, {"checks", report.checks}, {"status", report.passed() ? "pass" : "fail"}};
        doc.table.rows.push_back({name, report.checks, report.passed() ? "pass" : "fail"});
        if (!report.passed()) {
            value["counterexample"] = *report.counterexample;
            doc.values.push_back(value);
            doc.disagree(name + ": " + *report.counterexample);
            break;
        }
        doc.values.push_back(value);
    }
    return doc;
}

struct RawFlags {
    std::optional<std::string> n, k, q, r;
    std::string format = "pretty";
};

Request parse(const std::vector<std::string>& args, CLI::App& app, RawFlags& raw)
{
    Request req;
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every command");

    const std::map<std::string, Format> formats = {
        {"json", Format::json}, {"csv", Format::csv}, {"pretty", Format::pretty}};
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", raw.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    };
    const auto add_order = [&](CLI::App* sub) {
        sub->add_option("--order", req.order, "Truncation order (default: largest index + 4)");
    };
    const auto add_set = [&](CLI::App* sub) { sub->add_option("--set", req.set, "Block-size set"); };
    const auto add_pair = [&](CLI::App* sub) {
        sub->add_option("--set1", req.set1, "Row type multiplicities");
        sub->add_option("--set2", req.set2, "Column type multiplicities");
    };
    const auto add_n = [&](CLI::App* sub) { sub->add_option("--n", raw.n, "Index N (0..N) or range a..b"); };

    auto* stirling = app.add_subcommand("stirling", "Triangle of restricted Stirling numbers");
    add_set(stirling);
    add_n(stirling);
    add_order(stirling);
    add_format(stirling);

    auto* bell = app.add_subcommand("bell", "Restricted Bell numbers or polynomials");
    add_set(bell);
    add_n(bell);
    add_order(bell);
    add_format(bell);
    bell->add_flag("--polynomial", req.polynomial, "Print Bell polynomials");

    auto* fub = app.add_subcommand("fubini", "Restricted Fubini numbers");
    add_set(fub);
    add_n(fub);
    add_order(fub);
    add_format(fub);
    fub->add_option("--q", raw.q, "Also check the Poonen identity and congruence for q (or a..b)");

    auto* lonesum = app.add_subcommand("lonesum", "Restricted lonesum matrix counts, or analyse one matrix");
    add_pair(lonesum);
    add_n(lonesum);
    lonesum->add_option("--k", raw.k, "Columns K (0..K) or range a..b");
    lonesum->add_flag("--with-zeros", req.with_zeros, "Allow all-zero rows and columns");
    lonesum->add_option("--matrix", req.matrix_path, "0/1 matrix file ('-' for stdin)");
    add_order(lonesum);
    add_format(lonesum);

    auto* decomposable = app.add_subcommand("decomposable", "Lonesum-decomposable matrix counts");
    add_pair(decomposable);
    add_n(decomposable);
    decomposable->add_option("--k", raw.k, "Columns K (0..K) or range a..b");
    decomposable->add_option("--r", raw.r, "Decomposition order r (or a..b); total when absent");
    decomposable->add_option("--max-cells", req.max_cells, "Cross-check shapes with n*k up to this by scanning");
    decomposable->add_option("--workers", req.workers, "Scan threads")->check(CLI::PositiveNumber);
    add_order(decomposable);
    add_format(decomposable);

    auto* pb = app.add_subcommand("polybernoulli", "Restricted poly-Bernoulli numbers");
    add_set(pb);
    add_n(pb);
    pb->add_option("--k", raw.k, "Index k (any integer) or range a..b");
    add_order(pb);
    add_format(pb);

    auto* riordan = app.add_subcommand("riordan", "Riordan array M_S or its inverse");
    add_set(riordan);
    add_n(riordan);
    riordan->add_flag("--inverse", req.inverse, "Print the inverse triangle");
    add_format(riordan);

    auto* verify = app.add_subcommand("verify", "Run formula-versus-oracle suites");
    verify->add_option("--suite", req.suite, "stirling, bell, fubini, riordan, lonesum, polybernoulli or all");
    add_n(verify);
    verify->add_option("--max-cells", req.max_cells, "Largest n*k shape the matrix scan visits");
    verify->add_option("--workers", req.workers, "Scan threads")->check(CLI::PositiveNumber);
    add_format(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    req.command = app.get_subcommands().front()->get_name();
    req.format = formats.at(raw.format);
    const bool size_k = req.command == "lonesum" || req.command == "decomposable";
    if (raw.n) {
        req.n = parse_range(*raw.n, true);
    }
    if (raw.k) {
        req.k = parse_range(*raw.k, size_k);
    }
    if (raw.q) {
        req.q = parse_range(*raw.q, false);
    }
    if (raw.r) {
        req.r = parse_range(*raw.r, false);
    }
    return req;
}

Document dispatch(const Request& req)
{
    if (req.command == "stirling") {
        return stirling_command(req);
    }
    if (req.command == "bell") {
        return bell_command(req);
    }
    if (req.command == "fubini") {
        return fubini_command(req);
    }
    if (req.command == "lonesum") {
        return lonesum_command(req);
    }
    if (req.command == "decomposable") {
        return decomposable_command(req);
    }
    if (req.command == "polybernoulli") {
        return polybernoulli_command(req);
    }
    if (req.command == "riordan") {
        return riordan_command(req);
    }
    return verify_command(req);
}

}  // namespace

Range parse_range(const std::string& text, bool bare_means_prefix)
{
    const auto dots = text.find("..");
    Range r;
    if (dots == std::string::npos) {
        const long v = parse_long(text);
        r = bare_means_prefix ? Range{0, v} : Range{v, v};
    } else {
        r = Range{parse_long(text.substr(0, dots)), parse_long(text.substr(dots + 2))};
    }
    if (r.lo > r.hi) {
        throw UsageError("empty range: " + text);
    }
    return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app("Restricted partition tables: exact Stirling, Bell, Fubini, lonesum and poly-Bernoulli numbers",
                 "rpt");
    RawFlags raw;
    Request req;
    try {
        req = parse(args, app, raw);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ExitCode::ok : ExitCode::usage_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n' << "Run with --help for more information.\n";
        return ExitCode::usage_error;
    }

    try {
        const Document doc = dispatch(req);
        emit(req.command, doc, req.format, out);
        if (doc.mismatch) {
            err << "mismatch: " << *doc.mismatch << '\n';
            return ExitCode::mismatch;
        }
        return ExitCode::ok;
    } catch (const GuardrailError& e) {
        err << "guardrail: " << e.what() << '\n';
        return ExitCode::guardrail;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << "Run with --help for more information.\n";
        return ExitCode::usage_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage_error;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage_error;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return ExitCode::mismatch;
    }
}

}  // namespace rpt::cli
