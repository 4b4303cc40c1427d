#include "rpt/numeric.hpp"

namespace rpt {

Integer factorial(unsigned n)
{
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

Integer binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

Integer falling_factorial(const Integer& t, unsigned k)
{
    Integer result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= t - i;
    }
    return result;
}

Integer ipow(const Integer& base, unsigned exponent)
{
    Integer result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

Rational rpow(const Rational& base, unsigned exponent)
{
    Rational result(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
    result.canonicalize();
    return result;
}

Rational rpow_signed(const Rational& base, long exponent)
{
    if (exponent >= 0) {
        return rpow(base, static_cast<unsigned>(exponent));
    }
    if (base == 0) {
        throw std::domain_error("zero raised to a negative power");
    }
    return 1 / rpow(base, static_cast<unsigned>(-exponent));
}

std::string to_string(const Integer& value)
{
    return value.get_str();
}

std::string to_string(const Rational& value)
{
    return value.get_str();
}

Rational parse_rational(const std::string& text)
{
    Rational value;
    if (text.empty() || value.set_str(text, 10) != 0) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
    if (value.get_den() == 0) {
        throw std::invalid_argument("zero denominator in '" + text + "'");
    }
    value.canonicalize();
    return value;
}

}  // namespace rpt
