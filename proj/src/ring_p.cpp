#include <qgrass/ring_p.hpp>

#include <numeric>
#include <stdexcept>

#include <qgrass/permutations.hpp>

namespace qgrass
{

VariableRegistry ClassP::registry_for(int r, Novikov kind)
{
    if (kind == Novikov::none) {
        throw std::invalid_argument("QH*(P) needs Novikov variables");
    }
    return VariableRegistry{r, false, kind, 0};
}

ClassP::ClassP(int r, int n, Novikov kind) : n_(n), poly_(registry_for(r, kind))
{
    if (r < 1 || n < 1) {
        throw std::invalid_argument("(P^{n-1})^r needs r >= 1 and n >= 1");
    }
}

ClassP::ClassP(int n, SparsePolynomial p) : n_(n), poly_(std::move(p))
{
    const auto &reg = poly_.registry();
    if (reg.has_hbar || reg.equivariant_count != 0 || reg.novikov == Novikov::none || reg.r < 1 || n < 1) {
        throw std::invalid_argument("ClassP polynomial must live over {x_1..x_r, q}");
    }
    reduce();
}

ClassP ClassP::lift(const SparsePolynomial &x_poly, int n, Novikov kind)
{
    const auto &src = x_poly.registry();
    if (src.has_hbar || src.novikov != Novikov::none || src.equivariant_count != 0) {
        throw std::invalid_argument("lift expects a polynomial in x only");
    }
    const auto target = registry_for(src.r, kind);
    std::vector<int> map(static_cast<std::size_t>(src.r));
    std::iota(map.begin(), map.end(), 0);
    return ClassP(n, reindex(x_poly, map, target));
}

void ClassP::reduce()
{
    const auto &reg = poly_.registry();
    const int r = reg.r;
    bool reduced = true;
    for (const auto &[e, c] : poly_.terms()) {
        for (int i = 0; i < r && reduced; ++i) {
            reduced = e[i] < n_;
        }
        if (!reduced) {
            break;
        }
    }
    if (reduced) {
        return;
    }
    SparsePolynomial out(reg);
    for (const auto &[e, c] : poly_.terms()) {
        Exponent f = e;
        int total_hops = 0;
        for (int i = 0; i < r; ++i) {
            const int hops = e[i] / n_;
            f[i] = e[i] % n_;
            if (reg.novikov == Novikov::vector) {
                f[reg.q(i)] += hops;
            } else {
                f[reg.q()] += hops;
            }
            total_hops += hops;
        }
        Rational v = c;
        if (reg.novikov == Novikov::single && (r - 1) % 2 == 1 && total_hops % 2 == 1) {
            v = -v;
        }
        out.add_term(f, v);
    }
    poly_ = std::move(out);
}

void ClassP::check_shape(const ClassP &o) const
{
    if (n_ != o.n_ || !(poly_.registry() == o.poly_.registry())) {
        throw std::invalid_argument("classes live in different products of projective spaces");
    }
}

ClassP &ClassP::operator+=(const ClassP &o)
{
    check_shape(o);
    poly_ += o.poly_;
    return *this;
}

ClassP &ClassP::operator-=(const ClassP &o)
{
    check_shape(o);
    poly_ -= o.poly_;
    return *this;
}

ClassP &ClassP::operator*=(const Rational &c)
{
    poly_ *= c;
    return *this;
}

ClassP quantum_product_P(const ClassP &a, const ClassP &b)
{
    if (a.n() != b.n() || !(a.poly().registry() == b.poly().registry())) {
        throw std::invalid_argument("classes live in different products of projective spaces");
    }
    return ClassP(a.n(), multiply(a.poly(), b.poly()));
}

SparsePolynomial integrate_P(const ClassP &a)
{
    const auto &reg = a.poly().registry();
    SparsePolynomial out(reg);
    for (const auto &[e, c] : a.poly().terms()) {
        bool top = true;
        for (int i = 0; i < reg.r && top; ++i) {
            top = e[i] == a.n() - 1;
        }
        if (top) {
            Exponent f = e;
            std::fill(f.begin(), f.begin() + reg.r, 0);
            out.add_term(f, c);
        }
    }
    return out;
}

Rational gw_invariant_P(const ClassP &a, const ClassP &b, const ClassP &c, const std::vector<int> &degrees)
{
    const auto &reg = a.poly().registry();
    if (reg.novikov != Novikov::vector || static_cast<int>(degrees.size()) != reg.r) {
        throw std::invalid_argument("multidegree must have one entry per factor");
    }
    Exponent e(static_cast<std::size_t>(reg.size()), 0);
    for (int i = 0; i < reg.r; ++i) {
        if (degrees[i] < 0) {
            throw std::invalid_argument("multidegree entries must be nonnegative");
        }
        e[reg.q(i)] = degrees[i];
    }
    return integrate_P(quantum_product_P(quantum_product_P(a, b), c)).coefficient(e);
}

ClassP project_antisymmetric(const ClassP &a)
{
    const int r = a.r();
    SparsePolynomial acc(a.poly().registry());
    Rational count = 0;
    for_each_permutation(r, [&](std::span<const int> w, int sign) {
        auto moved = a.poly().permute_x(w);
        if (sign < 0) {
            moved = -moved;
        }
        acc += moved;
        count += 1;
    });
    acc *= Rational(1) / count;
    return ClassP(a.n(), std::move(acc));
}

ClassP specialize_novikov(const ClassP &a)
{
    const auto &src = a.poly().registry();
    if (src.novikov != Novikov::vector) {
        throw std::invalid_argument("specialization needs vector Novikov variables");
    }
    const int r = src.r;
    const auto target = ClassP::registry_for(r, Novikov::single);
    const int sign = sign_of_parity(r - 1);
    SparsePolynomial out(target);
    Exponent f(static_cast<std::size_t>(target.size()));
    for (const auto &[e, c] : a.poly().terms()) {
        std::copy(e.begin(), e.begin() + r, f.begin());
        int total = 0;
        for (int i = 0; i < r; ++i) {
            total += e[src.q(i)];
        }
        f[target.q()] = total;
        out.add_term(f, (sign < 0 && total % 2 == 1) ? Rational(-c) : c);
    }
    return ClassP(a.n(), std::move(out));
}

ClassP classical_part(const ClassP &a)
{
    const auto &reg = a.poly().registry();
    SparsePolynomial out(reg);
    for (const auto &[e, c] : a.poly().terms()) {
        bool classical = true;
        for (int v = reg.r; v < reg.size(); ++v) {
            classical = classical && e[v] == 0;
        }
        if (classical) {
            out.add_term(e, c);
        }
    }
    return ClassP(a.n(), std::move(out));
}

} // namespace qgrass
