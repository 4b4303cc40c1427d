#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rpt::cli {

enum ExitCode : int {
    ok = 0,
    mismatch = 1,
    usage_error = 2,
    guardrail = 3,
};

enum class Format { json, csv, pretty };

/// Inclusive index range. A bare value "v" is read as 0..v for the size-like
/// flags (--n, and --k of lonesum/decomposable) and as v..v otherwise.
struct Range {
    long lo = 0;
    long hi = 0;
};

struct Request {
    std::string command;
    std::string set = "all";
    std::string set1 = "all";
    std::string set2 = "all";
    std::optional<Range> n;
    std::optional<Range> k;
    std::optional<Range> q;
    std::optional<Range> r;
    Format format = Format::pretty;
    std::optional<unsigned> order;
    unsigned workers = 1;
    bool with_zeros = false;
    bool inverse = false;
    bool polynomial = false;
    std::string suite = "all";
    unsigned max_cells = 12;
    std::optional<std::string> matrix_path;
};

/// Parses "a..b" or a single integer.
Range parse_range(const std::string& text, bool bare_means_prefix);

/// Parses argv-style arguments (without the program name) and executes the
/// request. Writes the document to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rpt::cli
