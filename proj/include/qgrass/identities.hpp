#pragma once

#include <stdexcept>

#include <qgrass/checks.hpp>
#include <qgrass/rational.hpp>

namespace qgrass
{

/// gamma(m) = 1 + 1/2 + ... + 1/m, gamma(0) = 0.
Rational harmonic(int m);

/// Constant term (hbar = 1) of the degree-d coefficient of J for G(2,n):
/// (1/(d!)^n) ((-1)^d / 2) sum_m C(d,m)^n (n(d-2m)(gamma(m)-gamma(d-m)) + 2).
Rational constant_term_g2n(int n, int d);

/// (1/(d!)^n) sum over chains d >= j_{n-3} >= ... >= j_1 >= 0 of
/// C(d,j_{n-3})^2 C(d,j_{n-4})...C(d,j_1) C(j_{n-3},j_{n-4})...C(j_2,j_1).
Rational a_series_g2n(int n, int d);

/// Factorial chain sum against the harmonic closed form.
SideBySide prop35_check(int n, int d);

class PoleError : public std::domain_error
{
public:
    explicit PoleError(const std::string &what) : std::domain_error(what) {}
};

/// (a; q)_m = prod_{l<m} (1 - a q^l).
Rational q_pochhammer(const Rational &a, const Rational &q, int m);

/// The k = n-2 Bailey-chain identity with all b_i -> infinity and c_i = q^-d,
/// evaluated exactly at (q, a). Throws PoleError if a denominator vanishes.
SideBySide bailey_specialization_check(int n, int d, const Rational &q, const Rational &a);

} // namespace qgrass
