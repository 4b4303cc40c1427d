#include "rpt/block_size_set.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace rpt {

namespace {

[[noreturn]] void bad_set(std::string_view text, const std::string& why)
{
    throw std::invalid_argument("invalid block-size set '" + std::string(text) + "': " + why);
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\n\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\n\r");
    return s.substr(first, last - first + 1);
}

unsigned parse_uint(std::string_view whole, std::string_view digits)
{
    digits = trim(digits);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
        bad_set(whole, "expected a nonnegative integer, got '" + std::string(digits) + "'");
    }
    return value;
}

std::vector<unsigned> parse_brace_list(std::string_view whole, std::string_view body)
{
    std::vector<unsigned> values;
    if (trim(body).empty()) {
        return values;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = body.find(',', start);
        values.push_back(parse_uint(whole, body.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return values;
}

std::string join(const std::vector<unsigned>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(values[i]);
    }
    return out;
}

BlockSizeSet parse_atom(std::string_view whole, std::string_view atom)
{
    atom = trim(atom);
    if (atom == "all") {
        return BlockSizeSet::all();
    }
    if (atom == "even") {
        return BlockSizeSet::even();
    }
    if (atom == "odd") {
        return BlockSizeSet::odd();
    }
    if (atom.starts_with("<=")) {
        return BlockSizeSet::up_to(parse_uint(whole, atom.substr(2)));
    }
    if (atom.starts_with(">=")) {
        return BlockSizeSet::at_least(parse_uint(whole, atom.substr(2)));
    }
    if (atom.starts_with("{") && atom.ends_with("}")) {
        return BlockSizeSet::finite(parse_brace_list(whole, atom.substr(1, atom.size() - 2)));
    }
    if (atom.starts_with("mod")) {
        const auto open = atom.find('{');
        const auto close = atom.find('}');
        if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
            bad_set(whole, "expected modq{r,...}");
        }
        const unsigned modulus = parse_uint(whole, atom.substr(3, open - 3));
        auto residues = parse_brace_list(whole, atom.substr(open + 1, close - open - 1));
        const auto rest = trim(atom.substr(close + 1));
        unsigned min = 1;
        if (!rest.empty()) {
            if (!rest.starts_with(">=")) {
                bad_set(whole, "unexpected text after residue list");
            }
            min = parse_uint(whole, rest.substr(2));
        }
        return BlockSizeSet::residues(modulus, std::move(residues), min);
    }
    bad_set(whole, "unrecognised term '" + std::string(atom) + "'");
}

}  // namespace

BlockSizeSet BlockSizeSet::all()
{
    return BlockSizeSet(All{});
}

BlockSizeSet BlockSizeSet::up_to(unsigned m)
{
    if (m < 1) {
        throw std::invalid_argument("<=m requires m >= 1");
    }
    return BlockSizeSet(UpTo{m});
}

BlockSizeSet BlockSizeSet::at_least(unsigned m)
{
    if (m < 1) {
        throw std::invalid_argument(">=m requires m >= 1");
    }
    return BlockSizeSet(AtLeast{m});
}

BlockSizeSet BlockSizeSet::residues(unsigned modulus, std::vector<unsigned> residues, unsigned min)
{
    if (modulus < 1) {
        throw std::invalid_argument("residue class needs a positive modulus");
    }
    if (min < 1) {
        throw std::invalid_argument("residue class minimum must be >= 1");
    }
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    if (residues.empty()) {
        throw std::invalid_argument("residue class needs at least one residue");
    }
    if (residues.back() >= modulus) {
        throw std::invalid_argument("residue out of range for modulus " + std::to_string(modulus));
    }
    return BlockSizeSet(Residues{modulus, std::move(residues), min});
}

BlockSizeSet BlockSizeSet::even()
{
    return residues(2, {0}, 2);
}

BlockSizeSet BlockSizeSet::odd()
{
    return residues(2, {1}, 1);
}

BlockSizeSet BlockSizeSet::finite(std::vector<unsigned> elements)
{
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty()) {
        throw std::invalid_argument("finite block-size set must be nonempty");
    }
    if (elements.front() == 0) {
        throw std::invalid_argument("block sizes must be positive");
    }
    return BlockSizeSet(Finite{std::move(elements)});
}

BlockSizeSet BlockSizeSet::union_of(std::vector<BlockSizeSet> members)
{
    if (members.empty()) {
        throw std::invalid_argument("union needs at least one member");
    }
    if (members.size() == 1) {
        return std::move(members.front());
    }
    return BlockSizeSet(Union{std::move(members)});
}

BlockSizeSet BlockSizeSet::parse(std::string_view text)
{
    std::vector<BlockSizeSet> members;
    std::size_t start = 0;
    while (true) {
        const auto bar = text.find('|', start);
        const auto atom = text.substr(start, bar - start);
        if (trim(atom).empty()) {
            bad_set(text, "empty term");
        }
        try {
            members.push_back(parse_atom(text, atom));
        } catch (const std::invalid_argument& e) {
            const std::string what = e.what();
            if (what.starts_with("invalid block-size set")) {
                throw;
            }
            bad_set(text, what);
        }
        if (bar == std::string_view::npos) {
            break;
        }
        start = bar + 1;
    }
    return union_of(std::move(members));
}

bool BlockSizeSet::contains(unsigned s) const
{
    if (s == 0) {
        return false;
    }
    return std::visit(
        [s](const auto& k) -> bool {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, All>) {
                return true;
            } else if constexpr (std::is_same_v<T, UpTo>) {
                return s <= k.m;
            } else if constexpr (std::is_same_v<T, AtLeast>) {
                return s >= k.m;
            } else if constexpr (std::is_same_v<T, Residues>) {
                return s >= k.min && std::binary_search(k.residues.begin(), k.residues.end(), s % k.modulus);
            } else if constexpr (std::is_same_v<T, Finite>) {
                return std::binary_search(k.elements.begin(), k.elements.end(), s);
            } else {
                return std::any_of(k.members.begin(), k.members.end(),
                                   [s](const BlockSizeSet& m) { return m.contains(s); });
            }
        },
        kind_);
}

std::vector<unsigned> BlockSizeSet::enumerate(unsigned bound) const
{
    std::vector<unsigned> out;
    for (unsigned s = 1; s <= bound; ++s) {
        if (contains(s)) {
            out.push_back(s);
        }
    }
    return out;
}

unsigned BlockSizeSet::min_element() const
{
    return std::visit(
        [](const auto& k) -> unsigned {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, All>) {
                return 1;
            } else if constexpr (std::is_same_v<T, UpTo>) {
                return 1;
            } else if constexpr (std::is_same_v<T, AtLeast>) {
                return k.m;
            } else if constexpr (std::is_same_v<T, Residues>) {
                for (unsigned s = k.min;; ++s) {
                    if (std::binary_search(k.residues.begin(), k.residues.end(), s % k.modulus)) {
                        return s;
                    }
                }
            } else if constexpr (std::is_same_v<T, Finite>) {
                return k.elements.front();
            } else {
                unsigned best = k.members.front().min_element();
                for (const auto& m : k.members) {
                    best = std::min(best, m.min_element());
                }
                return best;
            }
        },
        kind_);
}

Series BlockSizeSet::egf(unsigned order) const
{
    Series e(order);
    for (unsigned s : enumerate(order)) {
        e += Series::monomial(order, s, Rational(1, factorial(s)));
    }
    return e;
}

std::string BlockSizeSet::to_string() const
{
    return std::visit(
        [](const auto& k) -> std::string {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, All>) {
                return "all";
            } else if constexpr (std::is_same_v<T, UpTo>) {
                return "<=" + std::to_string(k.m);
            } else if constexpr (std::is_same_v<T, AtLeast>) {
                return ">=" + std::to_string(k.m);
            } else if constexpr (std::is_same_v<T, Residues>) {
                if (k == std::get<Residues>(BlockSizeSet::even().kind())) {
                    return "even";
                }
                if (k == std::get<Residues>(BlockSizeSet::odd().kind())) {
                    return "odd";
                }
                std::string out = "mod" + std::to_string(k.modulus) + "{" + join(k.residues) + "}";
                if (k.min != 1) {
                    out += ">=" + std::to_string(k.min);
                }
                return out;
            } else if constexpr (std::is_same_v<T, Finite>) {
                return "{" + join(k.elements) + "}";
            } else {
                std::string out;
                for (std::size_t i = 0; i < k.members.size(); ++i) {
                    if (i > 0) {
                        out += '|';
                    }
                    out += k.members[i].to_string();
                }
                return out;
            }
        },
        kind_);
}

}  // namespace rpt
