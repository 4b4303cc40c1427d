#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rpt/series.hpp"

namespace rpt {

/// The set S of admissible block sizes, a subset of the positive integers.
///
/// Only the canonical shapes below (and finite unions of them) are
/// representable, so membership is always decidable and every value has a
/// text form:
///
///   all            every positive integer
///   <=m            {1, ..., m}
///   >=m            {m, m+1, ...}
///   even, odd
///   modq{r,...}    positive s with s mod q in {r, ...}; optional ">=m" suffix
///   {a,b,c}        a finite list
///   A|B|...        union
class BlockSizeSet {
public:
    struct All {
        bool operator==(const All&) const = default;
    };
    struct UpTo {
        unsigned m;
        bool operator==(const UpTo&) const = default;
    };
    struct AtLeast {
        unsigned m;
        bool operator==(const AtLeast&) const = default;
    };
    struct Residues {
        unsigned modulus;
        std::vector<unsigned> residues;  // ascending, each < modulus
        unsigned min;
        bool operator==(const Residues&) const = default;
    };
    struct Finite {
        std::vector<unsigned> elements;  // strictly ascending, >= 1
        bool operator==(const Finite&) const = default;
    };
    struct Union {
        std::vector<BlockSizeSet> members;
        bool operator==(const Union&) const = default;
    };
    using Kind = std::variant<All, UpTo, AtLeast, Residues, Finite, Union>;

    static BlockSizeSet all();
    static BlockSizeSet up_to(unsigned m);
    static BlockSizeSet at_least(unsigned m);
    static BlockSizeSet residues(unsigned modulus, std::vector<unsigned> residues, unsigned min = 1);
    static BlockSizeSet even();
    static BlockSizeSet odd();
    static BlockSizeSet finite(std::vector<unsigned> elements);
    static BlockSizeSet union_of(std::vector<BlockSizeSet> members);

    /// Parses the text form; throws std::invalid_argument on malformed input.
    static BlockSizeSet parse(std::string_view text);

    const Kind& kind() const noexcept { return kind_; }

    bool contains(unsigned s) const;

    /// Members s with 1 <= s <= bound, ascending.
    std::vector<unsigned> enumerate(unsigned bound) const;

    /// Smallest member.
    unsigned min_element() const;

    /// E_S(x) = sum_{s in S} x^s / s!, truncated after degree `order`.
    Series egf(unsigned order) const;

    std::string to_string() const;

    bool operator==(const BlockSizeSet&) const = default;

private:
    explicit BlockSizeSet(Kind kind) : kind_(std::move(kind)) {}

    Kind kind_;
};

}  // namespace rpt
