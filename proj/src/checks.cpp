#include <qgrass/checks.hpp>

#include <stdexcept>

#include <qgrass/alternant.hpp>
#include <qgrass/schur.hpp>

namespace qgrass
{

namespace
{

Rational martin_factor(int r)
{
    Rational f(1, 1);
    f /= Rational(factorial(static_cast<unsigned>(r)));
    return sign_of_parity(r * (r - 1) / 2) < 0 ? Rational(-f) : f;
}

ClassP delta_class(int r, int n, Novikov kind) { return ClassP::lift(vandermonde(VariableRegistry::xs(r)), n, kind); }

ClassP schur_delta(const Partition &mu, const RingSpecG &spec, Novikov kind)
{
    const auto reg = VariableRegistry::xs(spec.r);
    const auto poly = multiply(schur_polynomial(mu, reg), vandermonde(reg));
    for (const auto &[e, c] : poly.terms()) {
        for (int i = 0; i < spec.r; ++i) {
            if (e[i] > spec.n - 1) {
                throw std::logic_error("sigma_mu * Delta has an exponent above n-1 for mu=" + mu.str());
            }
        }
    }
    return ClassP::lift(poly, spec.n, kind);
}

ClassP with_q_coefficient(const ClassP &x_class, const SparsePolynomial &q_poly)
{
    // q_poly lives over q_registry(); x_class has a single q in slot r.
    const auto &reg = x_class.poly().registry();
    const auto embedded = reindex(q_poly, {reg.q()}, reg);
    return ClassP(x_class.n(), multiply(x_class.poly(), embedded));
}

} // namespace

std::vector<std::vector<int>> compositions(int d, int r)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current(static_cast<std::size_t>(r), 0);
    auto rec = [&](auto &self, int pos, int remaining) -> void {
        if (pos == r - 1) {
            current[pos] = remaining;
            out.push_back(current);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            current[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    if (r >= 1 && d >= 0) {
        rec(rec, 0, d);
    }
    return out;
}

ClassP lift_class(const ClassG &gamma, Novikov kind)
{
    if (!gamma.is_classical()) {
        throw std::invalid_argument("lift expects a classical class");
    }
    const auto &spec = gamma.spec();
    ClassP out(spec.r, spec.n, kind);
    for (const auto &[mu, c] : gamma.terms()) {
        auto term = ClassP::lift(schur_polynomial(mu, spec.r), spec.n, kind);
        term *= c.constant_value();
        out += term;
    }
    return out;
}

ClassP theta(const ClassG &gamma)
{
    if (!gamma.is_classical()) {
        throw std::invalid_argument("theta expects a classical class");
    }
    const auto &spec = gamma.spec();
    ClassP out(spec.r, spec.n, Novikov::vector);
    for (const auto &[mu, c] : gamma.terms()) {
        auto term = schur_delta(mu, spec, Novikov::vector);
        term *= c.constant_value();
        out += term;
    }
    return out;
}

ClassP theta_bar(const ClassG &gamma)
{
    const auto &spec = gamma.spec();
    ClassP out(spec.r, spec.n, Novikov::single);
    for (const auto &[mu, c] : gamma.terms()) {
        out += with_q_coefficient(schur_delta(mu, spec, Novikov::single), c);
    }
    return out;
}

SideBySide martin_check(const ClassG &gamma)
{
    const auto &spec = gamma.spec();
    const Rational lhs = gamma.is_zero() ? Rational(0) : integrate_G(gamma).constant_value();
    const auto delta = delta_class(spec.r, spec.n, Novikov::vector);
    const auto integrand =
        classical_part(quantum_product_P(quantum_product_P(lift_class(gamma), delta), delta));
    const auto top = integrate_P(integrand);
    const Rational rhs = martin_factor(spec.r) * (top.is_zero() ? Rational(0) : top.constant_value());
    return {lhs, rhs, lhs == rhs};
}

bool lemma26_check(const Partition &nu, const ClassP &f, const RingSpecG &spec)
{
    if (f.r() != spec.r || f.n() != spec.n || f.kind() != Novikov::vector) {
        throw std::invalid_argument("f must be a class of (P^{n-1})^r with vector Novikov variables");
    }
    const auto sigma_nu = ClassP::lift(schur_polynomial(nu, spec.r), spec.n, Novikov::vector);
    const auto lhs = project_antisymmetric(specialize_novikov(quantum_product_P(sigma_nu, f)));
    const auto rhs = specialize_novikov(quantum_product_P(sigma_nu, project_antisymmetric(f)));
    return lhs == rhs;
}

bool theorem25_check(const Partition &mu, const Partition &nu, const RingSpecG &spec)
{
    const auto lhs = theta_bar(quantum_product_G(ClassG::schubert(spec, mu), ClassG::schubert(spec, nu)));
    const auto sigma_nu = ClassP::lift(schur_polynomial(nu, spec.r), spec.n, Novikov::vector);
    const auto rhs = specialize_novikov(quantum_product_P(theta(ClassG::schubert(spec, mu)), sigma_nu));
    return lhs == rhs;
}

SideBySide qintegration_check(const Partition &mu, const Partition &nu, const Partition &rho, int d,
                              const RingSpecG &spec)
{
    const Rational lhs = gw_invariant_G(mu, nu, rho, d, spec).value;
    const auto a = schur_delta(mu, spec, Novikov::vector);
    const auto b = ClassP::lift(schur_polynomial(nu, spec.r), spec.n, Novikov::vector);
    const auto c = schur_delta(rho, spec, Novikov::vector);
    Rational sum = 0;
    for (const auto &degrees : compositions(d, spec.r)) {
        sum += gw_invariant_P(a, b, c, degrees);
    }
    Rational rhs = martin_factor(spec.r) * sum;
    if ((d * (spec.r - 1)) % 2 == 1) {
        rhs = -rhs;
    }
    return {lhs, rhs, lhs == rhs};
}

ClassG alternant_reduce_schur(const Partition &rho, const RingSpecG &spec)
{
    const int r = spec.r;
    std::vector<int> alpha = rho.padded(r);
    for (int i = 0; i < r; ++i) {
        alpha[i] += r - 1 - i;
    }
    int sign = 1;
    int qpow = 0;
    for (;;) {
        int j = -1;
        for (int i = 0; i < r; ++i) {
            if (alpha[i] >= spec.n) {
                j = i;
                break;
            }
        }
        if (j < 0) {
            break;
        }
        alpha[j] -= spec.n;
        ++qpow;
        sign *= sign_of_parity(r - 1);
    }
    auto straight = straighten_alternant(alpha);
    ClassG out(spec);
    if (!straight) {
        return out;
    }
    sign *= straight->sign;
    out.add(straight->partition, SparsePolynomial::monomial(q_registry(), {qpow}, sign));
    return out;
}

} // namespace qgrass
