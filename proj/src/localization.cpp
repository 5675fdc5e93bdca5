#include <qgrass/localization.hpp>

#include <algorithm>
#include <stdexcept>

#include <qgrass/alternant.hpp>
#include <qgrass/checks.hpp>
#include <qgrass/permutations.hpp>
#include <qgrass/series.hpp>

namespace qgrass
{

SplittingType::SplittingType(std::vector<int> degrees) : degrees_(std::move(degrees))
{
    if (degrees_.empty()) {
        throw std::invalid_argument("splitting type needs r >= 1 entries");
    }
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (degrees_[i] < 0 || (i > 0 && degrees_[i] < degrees_[i - 1])) {
            throw std::invalid_argument("splitting type degrees must be nonnegative and nondecreasing");
        }
    }
    bounds_.push_back(0);
    for (int m : jumps()) {
        bounds_.push_back(m);
    }
    bounds_.push_back(r());
}

int SplittingType::total() const
{
    int s = 0;
    for (int v : degrees_) {
        s += v;
    }
    return s;
}

std::vector<int> SplittingType::jumps() const
{
    std::vector<int> out;
    for (int m = 1; m < r(); ++m) {
        if (degrees_[m - 1] < degrees_[m]) {
            out.push_back(m);
        }
    }
    return out;
}

bool SplittingType::sign_parity_holds() const
{
    long sum = 0;
    for (int i = 1; i <= blocks(); ++i) {
        for (int j = 1; j < i; ++j) {
            sum += static_cast<long>(multiplicity(i)) * multiplicity(j) * gap(i, j);
        }
    }
    return (sum - static_cast<long>(r() - 1) * total()) % 2 == 0;
}

std::vector<SplittingType> splitting_types(int d, int r)
{
    std::vector<SplittingType> out;
    std::vector<int> current(static_cast<std::size_t>(r), 0);
    auto rec = [&](auto &self, int pos, int lo, int remaining) -> void {
        if (pos == r - 1) {
            if (remaining >= lo) {
                current[pos] = remaining;
                out.emplace_back(current);
            }
            return;
        }
        for (int v = lo; v * (r - pos) <= remaining; ++v) {
            current[pos] = v;
            self(self, pos + 1, v, remaining - v);
        }
    };
    if (r >= 1 && d >= 0) {
        rec(rec, 0, 0, d);
    }
    return out;
}

SparsePolynomial euler_inverse_fixed_locus(const SplittingType &st, const RingSpecG &spec,
                                           const TruncationPolicy &policy)
{
    if (st.r() != spec.r) {
        throw std::invalid_argument("splitting type length must equal r");
    }
    const auto reg = VariableRegistry::xs_hbar(spec.r);
    const auto hbar = SparsePolynomial::variable(reg, reg.hbar());
    auto numerator = SparsePolynomial::constant(reg, 1);
    int sign_exponent = 0;
    for (int i = 1; i <= st.blocks(); ++i) {
        for (int j = 1; j < i; ++j) {
            const int dij = st.gap(i, j);
            sign_exponent += st.multiplicity(i) * st.multiplicity(j) * (dij - 1);
            for (int s = 1; s <= st.multiplicity(i); ++s) {
                for (int t = 1; t <= st.multiplicity(j); ++t) {
                    const int a = st.bound(i - 1) + s - 1;
                    const int b = st.bound(j - 1) + t - 1;
                    numerator *= SparsePolynomial::variable(reg, a) - SparsePolynomial::variable(reg, b) +
                                 hbar * Rational(dij);
                }
            }
        }
    }
    if (sign_of_parity(sign_exponent) < 0) {
        numerator = -numerator;
    }
    return multiply(numerator, j_product_space(spec.r, spec.n, st.degrees(), policy), policy);
}

SparsePolynomial brion_pushforward(const SparsePolynomial &p, const SplittingType &st)
{
    const auto &reg = p.registry();
    if (reg.r != st.r()) {
        throw std::invalid_argument("splitting type length must equal the number of x-variables");
    }
    if (st.blocks() == 1) {
        return p;
    }
    auto euler = SparsePolynomial::constant(reg, 1);
    for (int i = 1; i <= st.blocks(); ++i) {
        for (int j = 1; j < i; ++j) {
            for (int s = 1; s <= st.multiplicity(i); ++s) {
                for (int t = 1; t <= st.multiplicity(j); ++t) {
                    const int a = st.bound(i - 1) + s - 1;
                    const int b = st.bound(j - 1) + t - 1;
                    euler *= SparsePolynomial::variable(reg, b) - SparsePolynomial::variable(reg, a);
                }
            }
        }
    }
    const auto delta = vandermonde(reg);
    const auto jumps = st.jumps();
    SparsePolynomial numerator(reg);
    for_each_permutation(st.r(), [&](std::span<const int> w, int) {
        for (int pos = 1; pos < st.r(); ++pos) {
            if (w[pos - 1] > w[pos] && std::find(jumps.begin(), jumps.end(), pos) == jumps.end()) {
                return;
            }
        }
        // w[p/E] = w(p) * (Delta / w(E)) / Delta over the common denominator.
        numerator += multiply(p.permute_x(w), exact_div(delta, euler.permute_x(w)));
    });
    return exact_div(numerator, delta);
}

SparsePolynomial j_via_localization_unreduced(const RingSpecG &spec, int d, const TruncationPolicy &policy)
{
    if (d < 0) {
        throw std::invalid_argument("degree must be nonnegative");
    }
    const auto reg = VariableRegistry::xs_hbar(spec.r);
    SparsePolynomial total(reg);
    for (const auto &st : splitting_types(d, spec.r)) {
        total += brion_pushforward(euler_inverse_fixed_locus(st, spec, policy), st);
    }
    return total.truncated({policy.max_x_degree - spec.r * (spec.r - 1) / 2, false});
}

JSeries j_via_localization(const RingSpecG &spec, int d, const TruncationPolicy &policy)
{
    return jseries_from_symmetric(j_via_localization_unreduced(spec, d, policy), spec, d);
}

SparsePolynomial j_equivariant_symbolic(const RingSpecG &spec, int d, const TruncationPolicy &policy)
{
    if (d < 0) {
        throw std::invalid_argument("degree must be nonnegative");
    }
    const int r = spec.r;
    const int n = spec.n;
    const VariableRegistry reg{r, true, Novikov::none, n};
    const TruncationPolicy joint{policy.max_x_degree, true};
    const auto hbar = SparsePolynomial::variable(reg, reg.hbar());

    SparsePolynomial total(reg);
    for (const auto &tuple : compositions(d, r)) {
        auto term = SparsePolynomial::constant(reg, 1);
        for (int i = 0; i < r; ++i) {
            for (int j = i + 1; j < r; ++j) {
                term *= SparsePolynomial::variable(reg, i) - SparsePolynomial::variable(reg, j) +
                        hbar * Rational(tuple[i] - tuple[j]);
            }
        }
        for (int i = 0; i < r; ++i) {
            for (int l = 1; l <= tuple[i]; ++l) {
                for (int j = 0; j < n; ++j) {
                    const auto u = SparsePolynomial::variable(reg, i) - SparsePolynomial::variable(reg, reg.lambda(j));
                    term = multiply(term, inv_shifted_power_series(u, l, 1, joint), joint);
                }
            }
        }
        total += term;
    }
    auto out = antisym_div_vandermonde(total);
    if ((d * (r - 1)) % 2 == 1) {
        out = -out;
    }
    return out.truncated({policy.max_x_degree - r * (r - 1) / 2, true});
}

SparsePolynomial j_equivariant_raw(const RingSpecG &spec, int d, const EquivariantParams &lam,
                                   const TruncationPolicy &policy)
{
    if (static_cast<int>(lam.lambda.size()) != spec.n) {
        throw std::invalid_argument("equivariant J needs exactly n weights");
    }
    const auto symbolic = j_equivariant_symbolic(spec, d, policy);
    const auto target = VariableRegistry::xs_hbar(spec.r);
    std::vector<SparsePolynomial> images;
    for (int v = 0; v <= spec.r; ++v) {
        images.push_back(SparsePolynomial::variable(target, v));
    }
    for (const auto &value : lam.lambda) {
        images.push_back(SparsePolynomial::constant(target, value));
    }
    return substitute(symbolic, images, target);
}

} // namespace qgrass
