#include <qgrass/vafa_intriligator.hpp>

#include <vector>

#include <qgrass/big_float.hpp>
#include <qgrass/schur.hpp>

namespace qgrass
{

VIResult vafa_intriligator(const Partition &mu, const Partition &nu, const Partition &rho, int d,
                           const RingSpecG &spec, const VIOptions &options)
{
    const int r = spec.r;
    const int n = spec.n;
    if (d < 0 || static_cast<long>(mu.size() + nu.size() + rho.size()) != static_cast<long>(n) * d + spec.dim()) {
        throw std::invalid_argument("degree mismatch: |mu|+|nu|+|rho| must equal nd + r(n-r)");
    }
    for (const auto *p : {&mu, &nu, &rho}) {
        if (!p->fits(r, spec.cols())) {
            throw std::invalid_argument("partition " + p->str() + " does not fit " + spec.name());
        }
    }
    const auto bits = BigFloat::bits_for_digits(options.precision_digits);

    // Roots of unity: root[k] = exp(2 pi i k / n). Monomials collapse to a root index.
    std::vector<BigComplex> root;
    const BigFloat two_pi = BigFloat::pi(bits) * BigFloat(2L, bits);
    for (int k = 0; k < n; ++k) {
        Rational frac(k, n);
        frac.canonicalize();
        const BigFloat angle = two_pi * BigFloat(frac, bits);
        root.push_back({angle.cos(), angle.sin()});
    }

    const auto reg = VariableRegistry::xs(r);
    const auto product =
        multiply(multiply(schur_polynomial(mu, reg), schur_polynomial(nu, reg)), schur_polynomial(rho, reg));

    BigComplex total{BigFloat(bits), BigFloat(bits)};
    std::vector<int> k(static_cast<std::size_t>(r), 0);
    for (;;) {
        BigComplex vdm{BigFloat(1L, bits), BigFloat(bits)};
        bool distinct = true;
        for (int i = 0; i < r && distinct; ++i) {
            for (int j = 0; j < r; ++j) {
                if (i == j) {
                    continue;
                }
                if (k[i] == k[j]) {
                    distinct = false;
                    break;
                }
                vdm *= root[k[i]] - root[k[j]];
            }
        }
        if (distinct) {
            // Sum the polynomial by grouping coefficients per root index.
            std::vector<Rational> by_index(static_cast<std::size_t>(n), Rational(0));
            long base = 0;
            for (int i = 0; i < r; ++i) {
                base += k[i];
            }
            for (const auto &[e, c] : product.terms()) {
                long idx = base;
                for (int i = 0; i < r; ++i) {
                    idx += static_cast<long>(k[i]) * e[i];
                }
                by_index[static_cast<std::size_t>(idx % n)] += c;
            }
            BigComplex value{BigFloat(bits), BigFloat(bits)};
            for (int t = 0; t < n; ++t) {
                if (by_index[t] != 0) {
                    value += root[t].scaled(BigFloat(by_index[t], bits));
                }
            }
            total += value * vdm;
        }
        int pos = r - 1;
        while (pos >= 0 && ++k[pos] == n) {
            k[pos] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
    }

    Rational scale(1, 1);
    scale /= Rational(factorial(static_cast<unsigned>(r)));
    scale /= pow(Rational(n), r);
    // prod_{i!=j}(e_i - e_j) already equals (-1)^C(r,2) Delta(e)^2.
    if (sign_of_parity(d * (r - 1)) < 0) {
        scale = -scale;
    }
    const BigFloat s(scale, bits);
    const BigFloat re = total.re * s;
    const BigFloat im = total.im * s;

    VIResult out;
    out.value = re.nearest_rational(options.max_denominator);
    const BigFloat dre = (re - BigFloat(out.value, bits)).abs();
    const BigFloat dim = im.abs();
    out.residue = (dre < dim ? dim : dre).to_double();
    out.raw = re.str(options.precision_digits);
    if (!(out.residue <= options.tolerance)) {
        throw VIPrecisionError("root-of-unity sum is not near a rational (residue " + std::to_string(out.residue) +
                                   ")",
                               out.residue);
    }
    return out;
}

} // namespace qgrass
