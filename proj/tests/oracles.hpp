#pragma once

// Reference computations that avoid the library routines they check.

#include <random>
#include <vector>

#include <qgrass/permutations.hpp>
#include <qgrass/polynomial.hpp>
#include <qgrass/ring_p.hpp>

namespace oracle
{

using qgrass::Exponent;
using qgrass::Rational;
using qgrass::SparsePolynomial;
using qgrass::VariableRegistry;

inline SparsePolynomial x(const VariableRegistry &reg, int i, int power = 1)
{
    return SparsePolynomial::variable(reg, reg.x(i), power);
}

inline SparsePolynomial hbar(const VariableRegistry &reg, int power = 1)
{
    return SparsePolynomial::variable(reg, reg.hbar(), power);
}

inline SparsePolynomial c(const VariableRegistry &reg, const Rational &v) { return SparsePolynomial::constant(reg, v); }

/// h_k in r variables by listing every exponent vector of total degree k.
inline SparsePolynomial complete_homogeneous(int r, int k)
{
    const auto reg = VariableRegistry::xs(r);
    SparsePolynomial out(reg);
    if (k < 0) {
        return out;
    }
    Exponent e(static_cast<std::size_t>(r), 0);
    auto rec = [&](auto &self, int pos, int left) -> void {
        if (pos == r - 1) {
            e[pos] = left;
            out.add_term(e, 1);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, k);
    return out;
}

/// Jacobi-Trudi: s_mu = det(h_{mu_i - i + j}).
inline SparsePolynomial jacobi_trudi(const std::vector<int> &mu, int r)
{
    const int l = static_cast<int>(mu.size());
    const auto reg = VariableRegistry::xs(r);
    SparsePolynomial total(reg);
    if (l == 0) {
        return SparsePolynomial::constant(reg, 1);
    }
    qgrass::for_each_permutation(l, [&](std::span<const int> w, int sign) {
        auto term = SparsePolynomial::constant(reg, sign);
        for (int i = 0; i < l; ++i) {
            term *= complete_homogeneous(r, mu[i] - i + w[i]);
        }
        total += term;
    });
    return total;
}

/// Coefficients of x^0..x^kmax in 1 / prod_{l=1}^d (x + l)^n by dense
/// univariate power-series inversion.
inline std::vector<Rational> givental_dense(int n, int d, int kmax)
{
    std::vector<Rational> a{1};
    for (int l = 1; l <= d; ++l) {
        for (int rep = 0; rep < n; ++rep) {
            std::vector<Rational> next(a.size() + 1, Rational(0));
            for (std::size_t i = 0; i < a.size(); ++i) {
                next[i] += a[i] * l;
                next[i + 1] += a[i];
            }
            a = std::move(next);
        }
    }
    std::vector<Rational> b(static_cast<std::size_t>(kmax) + 1, Rational(0));
    for (int k = 0; k <= kmax; ++k) {
        Rational s = k == 0 ? Rational(1) : Rational(0);
        for (int i = 1; i <= k && i < static_cast<int>(a.size()); ++i) {
            s -= a[i] * b[k - i];
        }
        b[k] = s / a[0];
    }
    return b;
}

/// A random class of (P^{n-1})^r with vector Novikov variables: a few reduced
/// monomials, small q-degrees, small rational coefficients.
inline qgrass::ClassP random_class_p(int r, int n, std::mt19937_64 &rng, int terms = 4)
{
    const auto reg = qgrass::ClassP::registry_for(r, qgrass::Novikov::vector);
    std::uniform_int_distribution<int> xe(0, n - 1), qe(0, 1), num(-5, 5), den(1, 3);
    SparsePolynomial p(reg);
    for (int t = 0; t < terms; ++t) {
        Exponent e(static_cast<std::size_t>(reg.size()), 0);
        for (int i = 0; i < r; ++i) {
            e[reg.x(i)] = xe(rng);
            e[reg.q(i)] = qe(rng);
        }
        Rational v(num(rng), den(rng));
        v.canonicalize();
        p.add_term(e, v);
    }
    return qgrass::ClassP(n, p);
}

} // namespace oracle
