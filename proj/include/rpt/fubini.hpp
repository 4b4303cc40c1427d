#pragma once

#include <vector>

#include "rpt/block_size_set.hpp"
#include "rpt/numeric.hpp"

namespace rpt {

/// F_{n,S} = sum_k k! {n brace k}_S, the number of ordered set partitions of
/// [n] with block sizes in S.
Integer fubini(unsigned n, const BlockSizeSet& set);

/// F_{0,S} ... F_{max_n,S} from the defining sum.
std::vector<Integer> fubini_sequence(const BlockSizeSet& set, unsigned max_n);

/// n! [x^n] 1 / (1 - E_S(x)), series truncated at `order` >= n.
Integer fubini_egf(unsigned n, const BlockSizeSet& set, unsigned order);
inline Integer fubini_egf(unsigned n, const BlockSizeSet& set)
{
    return fubini_egf(n, set, n);
}

/// F_{0,S} ... F_{order,S} read off 1 / (1 - E_S(x)).
std::vector<Integer> fubini_egf_sequence(const BlockSizeSet& set, unsigned order);

struct FubiniDobinski {
    Rational partial_sum;  // 1/2 sum_{k <= last_index} 2^{-k} f_{S,k}^{(n)}(0)
    Rational tail_bound;
    unsigned last_index;

    /// partial_sum <= value <= partial_sum + tail_bound
    bool brackets(const Integer& value) const;
};

/// Truncation of F_{n,S} = 1/2 sum_k 2^{-k} sum_l {n brace l}_S (k)_l with a
/// rigorous tail bound below tol.
FubiniDobinski fubini_dobinski(unsigned n, const BlockSizeSet& set, const Rational& tol);

struct IdentityCheck {
    Integer lhs;
    Integer rhs;
    bool holds;
};

/// Both sides of the restricted Poonen identity
///   2^q F_{n,S} = sum_l C(n,l) F_{l,S} P_q(n-l) + sum_{l=0}^{q-1} 2^{q-l-1} P_l(n),
/// where P_t(m) = sum_i {m brace i}_S (t)_i. Requires q >= 1. The l = 0 term
/// of the second sum only contributes when n = 0.
IdentityCheck poonen_check(unsigned n, unsigned q, const BlockSizeSet& set);

/// (2^q - 1) F_{n,S} == sum_{l=0}^{q-1} 2^{q-l-1} P_l(n) (mod q); residues
/// are reported in [0, q).
IdentityCheck congruence_check(unsigned n, unsigned q, const BlockSizeSet& set);

}  // namespace rpt
