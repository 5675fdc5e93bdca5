#include <qgrass/schur.hpp>

#include <algorithm>
#include <mutex>
#include <numeric>

#include <qgrass/alternant.hpp>

namespace qgrass
{

void SchurExpansion::add(const Partition &lambda, const SparsePolynomial &c)
{
    auto it = terms.find(lambda);
    if (it == terms.end()) {
        if (!c.is_zero()) {
            terms.emplace(lambda, c);
        }
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms.erase(it);
    }
}

Rational SchurExpansion::constant_coefficient(const Partition &lambda) const
{
    auto it = terms.find(lambda);
    return it == terms.end() ? Rational(0) : it->second.constant_value();
}

namespace
{

std::vector<int> staircase(int r)
{
    std::vector<int> delta(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        delta[i] = r - 1 - i;
    }
    return delta;
}

SparsePolynomial compute_schur(const Partition &mu, int r)
{
    const auto reg = VariableRegistry::xs(r);
    auto alpha = mu.padded(r);
    const auto delta = staircase(r);
    for (int i = 0; i < r; ++i) {
        alpha[i] += delta[i];
    }
    return antisym_div_vandermonde(alternant_determinant(reg, alpha));
}

} // namespace

SparsePolynomial schur_polynomial(const Partition &mu, int r)
{
    if (mu.length() > r) {
        throw std::invalid_argument("partition " + mu.str() + " has more than " + std::to_string(r) + " rows");
    }
    static std::mutex mutex;
    static std::map<std::pair<Partition, int>, SparsePolynomial> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find({mu, r});
        if (it != cache.end()) {
            return it->second;
        }
    }
    auto value = compute_schur(mu, r);
    std::lock_guard lock(mutex);
    return cache.emplace(std::make_pair(mu, r), std::move(value)).first->second;
}

SparsePolynomial schur_polynomial(const Partition &mu, const VariableRegistry &reg)
{
    const auto base = schur_polynomial(mu, reg.r);
    if (reg == base.registry()) {
        return base;
    }
    std::vector<int> map(static_cast<std::size_t>(reg.r));
    std::iota(map.begin(), map.end(), 0);
    return reindex(base, map, reg);
}

std::optional<SignedPartition> straighten_alternant(std::span<const int> alpha)
{
    const int r = static_cast<int>(alpha.size());
    std::vector<int> sorted(alpha.begin(), alpha.end());
    // insertion sort into descending order, counting transpositions
    int swaps = 0;
    for (int i = 1; i < r; ++i) {
        for (int j = i; j > 0 && sorted[j] > sorted[j - 1]; --j) {
            std::swap(sorted[j], sorted[j - 1]);
            ++swaps;
        }
    }
    for (int i = 1; i < r; ++i) {
        if (sorted[i] == sorted[i - 1]) {
            return std::nullopt;
        }
    }
    std::vector<int> parts(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        parts[i] = sorted[i] - (r - 1 - i);
        if (parts[i] < 0) {
            throw std::invalid_argument("alternant exponents must be nonnegative");
        }
    }
    return SignedPartition{swaps % 2 == 0 ? 1 : -1, Partition(std::move(parts))};
}

SchurExpansion lr_product(const Partition &mu, const Partition &nu, int r)
{
    const auto base = mu.padded(r);
    const auto delta = staircase(r);
    const auto sigma_nu = schur_polynomial(nu, r);

    std::map<Partition, Rational> acc;
    std::vector<int> alpha(static_cast<std::size_t>(r));
    for (const auto &[beta, c] : sigma_nu.terms()) {
        for (int i = 0; i < r; ++i) {
            alpha[i] = base[i] + delta[i] + beta[i];
        }
        if (auto s = straighten_alternant(alpha)) {
            acc[s->partition] += c * s->sign;
        }
    }
    SchurExpansion out{VariableRegistry::constants(), {}};
    for (const auto &[lambda, c] : acc) {
        out.add(lambda, SparsePolynomial::constant(out.coeff_registry, c));
    }
    return out;
}

SchurExpansion schur_expand(const SparsePolynomial &p)
{
    if (!is_symmetric(p)) {
        throw std::domain_error("Schur expansion requires a symmetric polynomial");
    }
    const auto &reg = p.registry();
    const int r = reg.r;
    const auto coeff_reg = reg.without_x();
    const auto alternating = multiply(p, vandermonde(reg));

    SchurExpansion out{coeff_reg, {}};
    std::vector<int> parts(static_cast<std::size_t>(r));
    Exponent rest(static_cast<std::size_t>(coeff_reg.size()));
    for (const auto &[e, c] : alternating.terms()) {
        bool strictly_decreasing = true;
        for (int i = 1; i < r; ++i) {
            strictly_decreasing = strictly_decreasing && e[i - 1] > e[i];
        }
        if (!strictly_decreasing) {
            continue;
        }
        for (int i = 0; i < r; ++i) {
            parts[i] = e[i] - (r - 1 - i);
        }
        std::copy(e.begin() + r, e.end(), rest.begin());
        SparsePolynomial coeff(coeff_reg);
        coeff.add_term(rest, c);
        out.add(Partition(parts), coeff);
    }
    return out;
}

} // namespace qgrass
