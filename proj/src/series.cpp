#include <qgrass/series.hpp>

#include <stdexcept>

namespace qgrass
{

namespace
{

void check_params(int l, int n)
{
    if (l < 1 || n < 1) {
        throw std::invalid_argument("inverse series needs l >= 1 and n >= 1");
    }
}

} // namespace

SparsePolynomial inv_linear_power_series(const VariableRegistry &reg, int i, int l, int n,
                                         const TruncationPolicy &policy)
{
    check_params(l, n);
    if (i < 0 || i >= reg.r) {
        throw std::invalid_argument("x-variable index out of range");
    }
    if (policy.max_x_degree < 0) {
        throw std::invalid_argument("truncation degree must be nonnegative");
    }
    SparsePolynomial out(reg);
    Exponent e(reg.size(), 0);
    for (int k = 0; k <= policy.max_x_degree; ++k) {
        e[i] = k;
        e[reg.hbar()] = -(n + k);
        Rational c(binomial(n - 1 + k, k));
        c /= pow(Rational(l), n + k);
        if (k % 2 == 1) {
            c = -c;
        }
        out.add_term(e, c);
    }
    return out;
}

SparsePolynomial inv_shifted_power_series(const SparsePolynomial &u, int l, int n, const TruncationPolicy &policy)
{
    check_params(l, n);
    const auto &reg = u.registry();
    for (const auto &[e, c] : u.terms()) {
        if (policy.degree_of(e, reg) < 1 || e[reg.hbar()] != 0) {
            throw std::invalid_argument("shift form must have positive degree and no hbar");
        }
    }
    SparsePolynomial out(reg);
    SparsePolynomial u_power = SparsePolynomial::constant(reg, 1);
    for (int k = 0; k <= policy.max_x_degree && !u_power.is_zero(); ++k) {
        Rational c(binomial(n - 1 + k, k));
        c /= pow(Rational(l), n + k);
        if (k % 2 == 1) {
            c = -c;
        }
        out += multiply(u_power, SparsePolynomial::variable(reg, reg.hbar(), -(n + k))) * c;
        u_power = multiply(u_power, u, policy);
    }
    return out;
}

} // namespace qgrass
