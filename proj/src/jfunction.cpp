#include <qgrass/jfunction.hpp>

#include <stdexcept>

#include <qgrass/alternant.hpp>
#include <qgrass/checks.hpp>
#include <qgrass/schur.hpp>
#include <qgrass/series.hpp>

namespace qgrass
{

namespace
{

int choose2(int r) { return r * (r - 1) / 2; }

void check_tuple(const std::vector<int> &tuple)
{
    for (int v : tuple) {
        if (v < 0) {
            throw std::invalid_argument("composition entries must be nonnegative");
        }
    }
}

} // namespace

TruncationPolicy default_policy(const RingSpecG &spec) { return {spec.dim() + choose2(spec.r), false}; }

SparsePolynomial j_product_space(int r, int n, const std::vector<int> &tuple, const TruncationPolicy &policy)
{
    if (static_cast<int>(tuple.size()) != r) {
        throw std::invalid_argument("tuple length must equal r");
    }
    check_tuple(tuple);
    const auto reg = VariableRegistry::xs_hbar(r);
    auto out = SparsePolynomial::constant(reg, 1);
    for (int i = 0; i < r; ++i) {
        for (int l = 1; l <= tuple[i]; ++l) {
            out = multiply(out, inv_linear_power_series(reg, i, l, n, policy), policy);
        }
    }
    return out;
}

SparsePolynomial apply_vandermonde_operator(const std::vector<int> &tuple)
{
    check_tuple(tuple);
    const int r = static_cast<int>(tuple.size());
    const auto reg = VariableRegistry::xs_hbar(r);
    const auto hbar = SparsePolynomial::variable(reg, reg.hbar());
    const auto hbar_inv = SparsePolynomial::variable(reg, reg.hbar(), -1);

    // d/dt_i of the exponent sum_j t_j (x_j/hbar + d_j), then scaled by hbar.
    std::vector<SparsePolynomial> images;
    for (int i = 0; i < r; ++i) {
        const auto dL = SparsePolynomial::variable(reg, reg.x(i)) * hbar_inv + SparsePolynomial::constant(reg, tuple[i]);
        images.push_back(multiply(hbar, dL));
    }
    // The operator polynomial prod_{i<j}(D_i - D_j) in symbols D_1..D_r.
    return substitute(vandermonde(VariableRegistry::xs(r)), images, reg);
}

SparsePolynomial j_grassmannian_unreduced(const RingSpecG &spec, int d, const TruncationPolicy &policy)
{
    if (d < 0) {
        throw std::invalid_argument("degree must be nonnegative");
    }
    const int r = spec.r;
    const auto reg = VariableRegistry::xs_hbar(r);
    const auto hbar = SparsePolynomial::variable(reg, reg.hbar());
    SparsePolynomial total(reg);
    for (const auto &tuple : compositions(d, r)) {
        SparsePolynomial numerator = SparsePolynomial::constant(reg, 1);
        for (int i = 0; i < r; ++i) {
            for (int j = i + 1; j < r; ++j) {
                numerator *= SparsePolynomial::variable(reg, reg.x(i)) - SparsePolynomial::variable(reg, reg.x(j)) +
                             hbar * Rational(tuple[i] - tuple[j]);
            }
        }
        total += multiply(numerator, j_product_space(r, spec.n, tuple, policy), policy);
    }
    auto out = antisym_div_vandermonde(total);
    if ((d * (r - 1)) % 2 == 1) {
        out = -out;
    }
    return out.truncated({policy.max_x_degree - choose2(r), false});
}

JSeries jseries_from_symmetric(const SparsePolynomial &p, const RingSpecG &spec, int d)
{
    JSeries out{spec, d, {}};
    const auto expansion = schur_expand(p);
    for (const auto &[lambda, coeff] : expansion.terms) {
        if (!lambda.fits(spec.r, spec.cols())) {
            continue;
        }
        const int k = static_cast<int>(lambda.size());
        const int expected = out.hbar_exponent(k);
        if (coeff.size() != 1 || coeff.terms().begin()->first[0] != expected) {
            throw std::logic_error("J-function component for " + lambda.str() + " is not a multiple of hbar^" +
                                   std::to_string(expected) + ": " + coeff.str());
        }
        auto [it, inserted] = out.components.try_emplace(k, ClassG(spec));
        it->second.add(lambda, SparsePolynomial::constant(q_registry(), coeff.terms().begin()->second));
    }
    return out;
}

JSeries j_grassmannian(const RingSpecG &spec, int d, const TruncationPolicy &policy)
{
    return jseries_from_symmetric(j_grassmannian_unreduced(spec, d, policy), spec, d);
}

bool hv_verify(const RingSpecG &spec, int d, const TruncationPolicy &policy)
{
    const int r = spec.r;
    // Lifted exponential exp(sum t_i x_i/hbar) at t_i = t + (r-1) pi i leaves
    // exp((r-1) pi i sigma_1/hbar); the prefactor contributes -(r-1) of the same.
    const int phase = (r - 1) - (r - 1);
    if (phase != 0) {
        return false;
    }

    const auto xh = VariableRegistry::xs_hbar(r);
    const VariableRegistry full{r, true, Novikov::vector, 0};
    std::vector<int> embed(static_cast<std::size_t>(xh.size()));
    for (int v = 0; v < xh.size(); ++v) {
        embed[v] = v; // x's then hbar keep their slots
    }
    SparsePolynomial total(full);
    for (const auto &tuple : compositions(d, r)) {
        const auto term =
            multiply(apply_vandermonde_operator(tuple), j_product_space(r, spec.n, tuple, policy), policy);
        Exponent qe(static_cast<std::size_t>(full.size()), 0);
        for (int i = 0; i < r; ++i) {
            qe[full.q(i)] = tuple[i];
        }
        total += multiply(reindex(term, embed, full), SparsePolynomial::monomial(full, qe, 1));
    }
    // q_i -> (-1)^(r-1) q, then keep the q^d coefficient. Antisymmetry in x
    // alone only holds after the q_i are identified.
    const VariableRegistry single{r, true, Novikov::single, 0};
    std::vector<SparsePolynomial> images;
    for (int v = 0; v < full.size(); ++v) {
        if (v < r + 1) {
            images.push_back(SparsePolynomial::variable(single, v));
        } else {
            images.push_back(SparsePolynomial::variable(single, single.q()) * Rational(sign_of_parity(r - 1)));
        }
    }
    const auto specialized = substitute(total, images, single);
    SparsePolynomial coefficient(xh);
    for (const auto &[e, c] : specialized.terms()) {
        if (e[single.q()] == d) {
            coefficient.add_term(Exponent(e.begin(), e.begin() + r + 1), c);
        }
    }
    const auto divided = antisym_div_vandermonde(coefficient);
    const auto lhs = jseries_from_symmetric(divided.truncated({policy.max_x_degree - choose2(r), false}), spec, d);
    return lhs == j_grassmannian(spec, d, policy);
}

} // namespace qgrass
