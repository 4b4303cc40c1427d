#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rpt {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when a brute-force routine is asked for a search space beyond its
// hard limit. Oracles never truncate silently.
class GuardrailError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// (t)_k = t (t-1) ... (t-k+1), (t)_0 = 1.
Integer falling_factorial(const Integer& t, unsigned k);

Integer ipow(const Integer& base, unsigned exponent);
Rational rpow(const Rational& base, unsigned exponent);

// base^exponent for any integer exponent; base must be nonzero when exponent < 0.
Rational rpow_signed(const Rational& base, long exponent);

// Exact rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

Rational parse_rational(const std::string& text);

}  // namespace rpt
