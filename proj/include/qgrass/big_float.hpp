#pragma once

#include <string>

#include <mpfr.h>

#include <qgrass/rational.hpp>

namespace qgrass
{

/// Owning wrapper for an MPFR number; results take the larger input precision.
class BigFloat
{
public:
    explicit BigFloat(mpfr_prec_t bits = 64);
    BigFloat(long v, mpfr_prec_t bits);
    BigFloat(const Rational &v, mpfr_prec_t bits);
    BigFloat(const BigFloat &o);
    BigFloat(BigFloat &&o) noexcept;
    BigFloat &operator=(const BigFloat &o);
    BigFloat &operator=(BigFloat &&o) noexcept;
    ~BigFloat();

    static mpfr_prec_t bits_for_digits(int digits);
    static BigFloat pi(mpfr_prec_t bits);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }

    BigFloat &operator+=(const BigFloat &o);
    BigFloat &operator-=(const BigFloat &o);
    BigFloat &operator*=(const BigFloat &o);
    BigFloat &operator/=(const BigFloat &o);
    friend BigFloat operator+(BigFloat a, const BigFloat &b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat &b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat &b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat &b) { return a /= b; }
    BigFloat operator-() const;

    friend bool operator<(const BigFloat &a, const BigFloat &b) { return mpfr_less_p(a.v_, b.v_) != 0; }

    BigFloat abs() const;
    BigFloat cos() const;
    BigFloat sin() const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Nearest rational with denominator at most max_den (searches each
    /// denominator in turn, smallest distance wins, ties to smaller denominator).
    Rational nearest_rational(long max_den) const;
    /// Scientific notation with the given significant digits.
    std::string str(int digits = 20) const;

private:
    mpfr_t v_;
};

struct BigComplex
{
    BigFloat re;
    BigFloat im;

    BigComplex &operator+=(const BigComplex &o);
    BigComplex &operator*=(const BigComplex &o);
    friend BigComplex operator+(BigComplex a, const BigComplex &b) { return a += b; }
    friend BigComplex operator-(const BigComplex &a, const BigComplex &b) { return {a.re - b.re, a.im - b.im}; }
    friend BigComplex operator*(BigComplex a, const BigComplex &b) { return a *= b; }
    BigComplex scaled(const BigFloat &s) const { return {re * s, im * s}; }
};

} // namespace qgrass
