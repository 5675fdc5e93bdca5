#include <qgrass/rational.hpp>

#include <stdexcept>

namespace qgrass
{

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    Rational out;
    if (out.set_str(s, 10) != 0) {
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
    if (out.get_den() == 0) {
        throw std::invalid_argument("zero denominator in '" + s + "'");
    }
    out.canonicalize();
    return out;
}

std::string to_string(const Rational &value)
{
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_short_string(const Rational &value)
{
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return to_string(value);
}

Integer factorial(unsigned n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Rational pow(const Rational &value, long e)
{
    if (e < 0) {
        if (value == 0) {
            throw std::domain_error("negative power of zero");
        }
        Rational inv = 1 / value;
        return pow(inv, -e);
    }
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(out.get_den_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

} // namespace qgrass
