#include <qgrass/big_float.hpp>

#include <algorithm>
#include <cmath>
#include <utility>

namespace qgrass
{

BigFloat::BigFloat(mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational &v, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat &o)
{
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat &&o) noexcept
{
    // Swapping into a freshly initialised value keeps `o` destructible.
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

BigFloat &BigFloat::operator=(const BigFloat &o)
{
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat &BigFloat::operator=(BigFloat &&o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

mpfr_prec_t BigFloat::bits_for_digits(int digits)
{
    return static_cast<mpfr_prec_t>(std::ceil(std::max(digits, 1) * 3.3219280948873623)) + 8;
}

BigFloat BigFloat::pi(mpfr_prec_t bits)
{
    BigFloat out(bits);
    mpfr_const_pi(out.v_, MPFR_RNDN);
    return out;
}

namespace
{

template <typename Op>
void binary(mpfr_t self, mpfr_srcptr other, Op op)
{
    if (mpfr_get_prec(other) > mpfr_get_prec(self)) {
        mpfr_prec_round(self, mpfr_get_prec(other), MPFR_RNDN);
    }
    op(self, self, other, MPFR_RNDN);
}

} // namespace

BigFloat &BigFloat::operator+=(const BigFloat &o)
{
    binary(v_, o.v_, mpfr_add);
    return *this;
}

BigFloat &BigFloat::operator-=(const BigFloat &o)
{
    binary(v_, o.v_, mpfr_sub);
    return *this;
}

BigFloat &BigFloat::operator*=(const BigFloat &o)
{
    binary(v_, o.v_, mpfr_mul);
    return *this;
}

BigFloat &BigFloat::operator/=(const BigFloat &o)
{
    binary(v_, o.v_, mpfr_div);
    return *this;
}

BigFloat BigFloat::operator-() const
{
    BigFloat out(*this);
    mpfr_neg(out.v_, out.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::abs() const
{
    BigFloat out(*this);
    mpfr_abs(out.v_, out.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::cos() const
{
    BigFloat out(precision());
    mpfr_cos(out.v_, v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::sin() const
{
    BigFloat out(precision());
    mpfr_sin(out.v_, v_, MPFR_RNDN);
    return out;
}

Rational BigFloat::nearest_rational(long max_den) const
{
    Rational best;
    BigFloat best_dist(precision());
    bool have = false;
    for (long den = 1; den <= std::max(max_den, 1L); ++den) {
        BigFloat scaled = *this * BigFloat(den, precision());
        mpz_class num;
        mpfr_get_z(num.get_mpz_t(), scaled.v_, MPFR_RNDN);
        Rational cand(num, den);
        cand.canonicalize();
        BigFloat dist = (*this - BigFloat(cand, precision())).abs();
        if (!have || dist < best_dist) {
            best = cand;
            best_dist = dist;
            have = true;
        }
    }
    return best;
}

std::string BigFloat::str(int digits) const
{
    char *buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

BigComplex &BigComplex::operator+=(const BigComplex &o)
{
    re += o.re;
    im += o.im;
    return *this;
}

BigComplex &BigComplex::operator*=(const BigComplex &o)
{
    BigFloat nre = re * o.re - im * o.im;
    BigFloat nim = re * o.im + im * o.re;
    re = std::move(nre);
    im = std::move(nim);
    return *this;
}

} // namespace qgrass
