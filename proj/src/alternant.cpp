#include <qgrass/alternant.hpp>

#include <numeric>

#include <qgrass/permutations.hpp>

namespace qgrass
{

SparsePolynomial alternant_determinant(const VariableRegistry &reg, std::span<const int> alpha)
{
    if (static_cast<int>(alpha.size()) != reg.r) {
        throw std::invalid_argument("alternant index length must equal the number of x-variables");
    }
    for (int a : alpha) {
        if (a < 0) {
            throw std::invalid_argument("alternant exponents must be nonnegative");
        }
    }
    SparsePolynomial out(reg);
    Exponent e(reg.size(), 0);
    // sum_w sgn(w) prod_i x_i^{alpha_{w(i)}}
    for_each_permutation(reg.r, [&](std::span<const int> w, int sign) {
        for (int i = 0; i < reg.r; ++i) {
            e[i] = alpha[w[i]];
        }
        out.add_term(e, sign);
    });
    return out;
}

SparsePolynomial vandermonde(const VariableRegistry &reg)
{
    std::vector<int> delta(static_cast<std::size_t>(reg.r));
    for (int i = 0; i < reg.r; ++i) {
        delta[i] = reg.r - 1 - i;
    }
    return alternant_determinant(reg, delta);
}

namespace
{

std::vector<int> transposition(int r, int i, int j)
{
    std::vector<int> w(static_cast<std::size_t>(r));
    std::iota(w.begin(), w.end(), 0);
    std::swap(w[i], w[j]);
    return w;
}

bool has_parity(const SparsePolynomial &p, int parity)
{
    const int r = p.registry().r;
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            auto w = transposition(r, i, j);
            auto swapped = p.permute_x(w);
            if (parity < 0) {
                swapped = -swapped;
            }
            if (!(swapped == p)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

bool is_antisymmetric(const SparsePolynomial &p) { return has_parity(p, -1); }

bool is_symmetric(const SparsePolynomial &p) { return has_parity(p, 1); }

SparsePolynomial antisym_div_vandermonde(const SparsePolynomial &p)
{
    if (!is_antisymmetric(p)) {
        throw NotAntisymmetric();
    }
    return exact_div(p, vandermonde(p.registry()));
}

} // namespace qgrass
