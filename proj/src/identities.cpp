#include <qgrass/identities.hpp>

#include <functional>
#include <vector>

namespace qgrass
{

namespace
{

void check_nd(int n, int d)
{
    if (n < 3 || d < 0) {
        throw std::invalid_argument("need n >= 3 and d >= 0");
    }
}

/// Calls fn(j) for every chain 0 = j_0 <= j_1 <= ... <= j_len <= d, j[0] = j_0.
void for_each_chain(int len, int d, const std::function<void(const std::vector<int> &)> &fn)
{
    std::vector<int> j(static_cast<std::size_t>(len) + 1, 0);
    auto rec = [&](auto &self, int pos) -> void {
        if (pos > len) {
            fn(j);
            return;
        }
        for (int v = j[pos - 1]; v <= d; ++v) {
            j[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 1);
}

Rational int_pow(const Rational &x, long e) { return pow(x, e); }

long choose2(long m) { return m * (m - 1) / 2; }

} // namespace

Rational harmonic(int m)
{
    if (m < 0) {
        throw std::invalid_argument("harmonic number of a negative integer");
    }
    Rational s = 0;
    for (int j = 1; j <= m; ++j) {
        s += Rational(1, j);
    }
    return s;
}

namespace
{

Rational harmonic_side(int n, int d)
{
    Rational s = 0;
    for (int m = 0; m <= d; ++m) {
        const Rational c = pow(Rational(binomial(d, m)), n);
        s += c * (Rational(n * (d - 2 * m)) * (harmonic(m) - harmonic(d - m)) + 2);
    }
    s /= 2;
    return d % 2 == 0 ? s : Rational(-s);
}

Rational factorial_chain_side(int n, int d)
{
    const Rational dfact(factorial(static_cast<unsigned>(d)));
    Rational s = 0;
    for_each_chain(n - 3, d, [&](const std::vector<int> &j) {
        Rational den(factorial(static_cast<unsigned>(d - j[n - 3])));
        for (int i = 2; i <= n - 2; ++i) {
            den *= Rational(factorial(static_cast<unsigned>(d - j[i - 1])));
            den *= Rational(factorial(static_cast<unsigned>(j[i - 1] - j[i - 2])));
            den *= Rational(factorial(static_cast<unsigned>(j[i - 1])));
        }
        s += pow(dfact, n - 2) / den;
    });
    return s;
}

} // namespace

Rational constant_term_g2n(int n, int d)
{
    check_nd(n, d);
    return harmonic_side(n, d) / pow(Rational(factorial(static_cast<unsigned>(d))), n);
}

Rational a_series_g2n(int n, int d)
{
    check_nd(n, d);
    Rational s = 0;
    for_each_chain(n - 3, d, [&](const std::vector<int> &j) {
        if (n == 3) {
            s += 1;
            return;
        }
        Integer term = binomial(d, j[n - 3]) * binomial(d, j[n - 3]);
        for (int i = 1; i <= n - 4 && term != 0; ++i) {
            term *= binomial(d, j[i]);
        }
        for (int i = 2; i <= n - 3 && term != 0; ++i) {
            term *= binomial(j[i], j[i - 1]);
        }
        s += Rational(term);
    });
    return s / pow(Rational(factorial(static_cast<unsigned>(d))), n);
}

SideBySide prop35_check(int n, int d)
{
    check_nd(n, d);
    const Rational lhs = factorial_chain_side(n, d);
    const Rational rhs = harmonic_side(n, d);
    return {lhs, rhs, lhs == rhs};
}

Rational q_pochhammer(const Rational &a, const Rational &q, int m)
{
    Rational p = 1;
    Rational ql = 1;
    for (int l = 0; l < m; ++l) {
        p *= 1 - a * ql;
        ql *= q;
    }
    return p;
}

SideBySide bailey_specialization_check(int n, int d, const Rational &q, const Rational &a)
{
    check_nd(n, d);
    if (q == 0 || a == 0 || a == 1) {
        throw PoleError("q, a must be nonzero and a != 1");
    }
    const Rational qmd = int_pow(q, -d);
    const Rational aqd = a * int_pow(q, 1 + d);
    auto checked = [](const Rational &v, const char *what) {
        if (v == 0) {
            throw PoleError(std::string("vanishing denominator ") + what);
        }
        return v;
    };
    for (int m = 0; m <= d; ++m) {
        checked(q_pochhammer(aqd, q, m), "(aq^{1+d};q)_m");
        checked(q_pochhammer(q, q, m), "(q;q)_m");
    }

    // Outer factor per chain top j: (-1)^j q^{dj} q^{-C(j,2)}.
    Rational lhs = 0;
    for_each_chain(n - 3, d, [&](const std::vector<int> &j) {
        const int top = j[n - 3];
        Rational num = q_pochhammer(qmd, q, top);
        Rational den = 1;
        Rational fac = int_pow(q, static_cast<long>(d) * top - choose2(top));
        if (top % 2 == 1) {
            fac = -fac;
        }
        for (int i = 2; i <= n - 2; ++i) {
            const int ji = j[i - 1];
            num *= q_pochhammer(qmd, q, ji);
            den *= q_pochhammer(aqd, q, ji) * q_pochhammer(q, q, ji - j[i - 2]);
            Rational f = int_pow(q, static_cast<long>(d) * ji + choose2(ji + 1)) * int_pow(a, ji);
            fac *= ji % 2 == 1 ? Rational(-f) : f;
        }
        lhs += num / den * fac;
    });
    lhs *= q_pochhammer(a * q, q, d) / q_pochhammer(aqd, q, d);

    Rational rhs = 0;
    for (int m = 0; m <= d; ++m) {
        Rational alpha = int_pow(q, choose2(m)) * q_pochhammer(a, q, m) / q_pochhammer(q, q, m) *
                         (1 - a * int_pow(q, 2 * m)) / (1 - a);
        if (m % 2 == 1) {
            alpha = -alpha;
        }
        Rational t = int_pow(q_pochhammer(qmd, q, m) / q_pochhammer(aqd, q, m), n - 1);
        if (((n - 1) * m) % 2 == 1) {
            t = -t;
        }
        t *= int_pow(q, (n - 2) * choose2(m)) * int_pow(a, static_cast<long>(n - 2) * m);
        t *= int_pow(q, static_cast<long>(n - 2 + d) * m + static_cast<long>(d) * m * (n - 2) - choose2(m));
        rhs += t * alpha;
    }
    return {lhs, rhs, lhs == rhs};
}

} // namespace qgrass
