#include <qgrass/ring_g.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <qgrass/rim_hook.hpp>
#include <qgrass/schur.hpp>

namespace qgrass
{

RingSpecG::RingSpecG(int r_, int n_) : r(r_), n(n_)
{
    if (r < 1 || n <= r) {
        throw std::invalid_argument("G(r,n) needs 0 < r < n, got r=" + std::to_string(r) + " n=" + std::to_string(n));
    }
}

std::string RingSpecG::name() const { return "G(" + std::to_string(r) + "," + std::to_string(n) + ")"; }

ClassG ClassG::schubert(const RingSpecG &spec, const Partition &mu, const Rational &c)
{
    ClassG out(spec);
    out.add(mu, SparsePolynomial::constant(q_registry(), c));
    return out;
}

void ClassG::add(const Partition &mu, const SparsePolynomial &c)
{
    if (!mu.fits(spec_.r, spec_.cols())) {
        throw std::invalid_argument("partition " + mu.str() + " does not index a Schubert class of " + spec_.name());
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

SparsePolynomial ClassG::coefficient(const Partition &mu) const
{
    auto it = terms_.find(mu);
    return it == terms_.end() ? SparsePolynomial(q_registry()) : it->second;
}

bool ClassG::is_classical() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto &kv) { return kv.second.is_constant(); });
}

std::optional<int> ClassG::homogeneous_degree() const
{
    std::optional<int> degree;
    for (const auto &[mu, c] : terms_) {
        for (const auto &[e, v] : c.terms()) {
            const int d = mu.size() + spec_.n * e[0];
            if (degree && *degree != d) {
                return std::nullopt;
            }
            degree = d;
        }
    }
    return degree;
}

void ClassG::check_spec(const ClassG &o) const
{
    if (!(spec_ == o.spec_)) {
        throw std::invalid_argument("classes live in different Grassmannians");
    }
}

ClassG &ClassG::operator+=(const ClassG &o)
{
    check_spec(o);
    for (const auto &[mu, c] : o.terms_) {
        add(mu, c);
    }
    return *this;
}

ClassG &ClassG::operator*=(const SparsePolynomial &c)
{
    TermMap next;
    for (auto &[mu, v] : terms_) {
        auto prod = multiply(v, c);
        if (!prod.is_zero()) {
            next.emplace(mu, std::move(prod));
        }
    }
    terms_ = std::move(next);
    return *this;
}

namespace
{

std::string monomial_prefix(const Rational &c, int qpow)
{
    std::ostringstream os;
    const Rational mag = abs(c);
    bool wrote = false;
    if (mag != 1) {
        os << to_short_string(mag);
        wrote = true;
    }
    if (qpow > 0) {
        os << (wrote ? "·" : "") << "q";
        if (qpow > 1) {
            os << "^" << qpow;
        }
        wrote = true;
    }
    if (wrote) {
        os << "·";
    }
    return os.str();
}

} // namespace

std::string ClassG::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    // largest classes first: by size, then reverse lexicographic
    struct Item
    {
        Partition mu;
        int qpow;
        Rational c;
    };
    std::vector<Item> items;
    for (const auto &[mu, poly] : terms_) {
        for (const auto &[e, c] : poly.terms()) {
            items.push_back({mu, e[0], c});
        }
    }
    std::sort(items.begin(), items.end(), [](const Item &a, const Item &b) {
        if (a.qpow != b.qpow) {
            return a.qpow < b.qpow;
        }
        if (a.mu.size() != b.mu.size()) {
            return a.mu.size() > b.mu.size();
        }
        return a.mu > b.mu;
    });
    std::ostringstream os;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto &it = items[i];
        if (i == 0) {
            os << (it.c < 0 ? "-" : "");
        } else {
            os << (it.c < 0 ? " - " : " + ");
        }
        os << monomial_prefix(it.c, it.qpow) << "σ[" << it.mu.str() << "]";
    }
    return os.str();
}

ClassG quantum_reduce_schur(const Partition &rho, const RingSpecG &spec)
{
    if (rho.length() > spec.r) {
        throw std::invalid_argument("partition " + rho.str() + " has more than r rows");
    }
    Partition current = rho;
    int sign = 1;
    int qpow = 0;
    while (!current.fits(spec.r, spec.cols())) {
        const auto outcome = remove_n_rim(current, spec.n, 1);
        if (outcome.kind != RimHookOutcome::Kind::hook) {
            return ClassG(spec);
        }
        sign *= sign_of_parity(spec.r - outcome.height);
        ++qpow;
        current = outcome.remainder;
    }
    ClassG out(spec);
    out.add(current, SparsePolynomial::monomial(q_registry(), {qpow}, sign));
    return out;
}

ClassG classical_reduce_schur(const Partition &rho, const RingSpecG &spec)
{
    if (rho.fits(spec.r, spec.cols())) {
        return ClassG::schubert(spec, rho);
    }
    return ClassG(spec);
}

ClassG quantum_product_G(const ClassG &a, const ClassG &b)
{
    if (!(a.spec() == b.spec())) {
        throw std::invalid_argument("classes live in different Grassmannians");
    }
    const auto &spec = a.spec();
    ClassG out(spec);
    for (const auto &[mu, ca] : a.terms()) {
        for (const auto &[nu, cb] : b.terms()) {
            const auto coeff = multiply(ca, cb);
            const auto lr = lr_product(mu, nu, spec.r);
            for (const auto &[rho, n_rho] : lr.terms) {
                auto reduced = quantum_reduce_schur(rho, spec);
                reduced *= multiply(coeff, SparsePolynomial::constant(q_registry(), n_rho.constant_value()));
                out += reduced;
            }
        }
    }
    return out;
}

SparsePolynomial integrate_G(const ClassG &a) { return a.coefficient(a.spec().top()); }

Rational q_coefficient(const SparsePolynomial &p, int d) { return p.coefficient(Exponent{d}); }

GWInvariant gw_invariant_G(const Partition &mu, const Partition &nu, const Partition &rho, int d,
                           const RingSpecG &spec)
{
    if (d < 0) {
        throw std::invalid_argument("curve degree must be nonnegative");
    }
    GWInvariant out{mu, nu, rho, d, 0};
    if (mu.size() + nu.size() + rho.size() != spec.n * d + spec.dim()) {
        return out;
    }
    const auto prod = quantum_product_G(quantum_product_G(ClassG::schubert(spec, mu), ClassG::schubert(spec, nu)),
                                        ClassG::schubert(spec, rho));
    out.value = q_coefficient(integrate_G(prod), d);
    return out;
}

} // namespace qgrass
