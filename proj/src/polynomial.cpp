#include <qgrass/polynomial.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qgrass
{

bool GradedLex::operator()(const Exponent &a, const Exponent &b) const
{
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) {
        return da < db;
    }
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

int x_degree(const Exponent &e, const VariableRegistry &reg)
{
    int d = 0;
    for (int i = 0; i < reg.r; ++i) {
        d += e[i];
    }
    return d;
}

int TruncationPolicy::degree_of(const Exponent &e, const VariableRegistry &reg) const
{
    int d = x_degree(e, reg);
    if (count_lambda) {
        for (int j = 0; j < reg.equivariant_count; ++j) {
            d += e[reg.lambda(j)];
        }
    }
    return d;
}

SparsePolynomial SparsePolynomial::constant(const VariableRegistry &reg, const Rational &c)
{
    SparsePolynomial p(reg);
    p.add_term(Exponent(reg.size(), 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(const VariableRegistry &reg, int var, int power)
{
    Exponent e(reg.size(), 0);
    e.at(var) = power;
    return monomial(reg, std::move(e), 1);
}

SparsePolynomial SparsePolynomial::monomial(const VariableRegistry &reg, Exponent e, const Rational &c)
{
    if (static_cast<int>(e.size()) != reg.size()) {
        throw std::invalid_argument("exponent length does not match registry");
    }
    for (int v = 0; v < reg.size(); ++v) {
        if (e[v] < 0 && !(reg.has_hbar && v == reg.hbar())) {
            throw std::invalid_argument("only hbar may carry a negative exponent");
        }
    }
    SparsePolynomial p(reg);
    p.add_term(e, c);
    return p;
}

Rational SparsePolynomial::coefficient(const Exponent &e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool SparsePolynomial::is_constant() const
{
    if (terms_.empty()) {
        return true;
    }
    if (terms_.size() > 1) {
        return false;
    }
    const auto &e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

Rational SparsePolynomial::constant_value() const
{
    if (!is_constant()) {
        throw std::domain_error("polynomial is not constant: " + str());
    }
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void SparsePolynomial::add_term(const Exponent &e, const Rational &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

int SparsePolynomial::max_x_degree() const
{
    int d = 0;
    for (const auto &[e, c] : terms_) {
        d = std::max(d, x_degree(e, reg_));
    }
    return d;
}

int SparsePolynomial::min_exponent(int var) const
{
    int m = 0;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        m = first ? e[var] : std::min(m, e[var]);
        first = false;
    }
    return m;
}

int SparsePolynomial::max_exponent(int var) const
{
    int m = 0;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        m = first ? e[var] : std::max(m, e[var]);
        first = false;
    }
    return m;
}

SparsePolynomial SparsePolynomial::truncated(const TruncationPolicy &policy) const
{
    SparsePolynomial out(reg_);
    for (const auto &[e, c] : terms_) {
        if (policy.keeps(e, reg_)) {
            out.terms_.emplace_hint(out.terms_.end(), e, c);
        }
    }
    return out;
}

SparsePolynomial SparsePolynomial::permute_x(std::span<const int> w) const
{
    if (static_cast<int>(w.size()) != reg_.r) {
        throw std::invalid_argument("permutation length does not match x-variable count");
    }
    SparsePolynomial out(reg_);
    for (const auto &[e, c] : terms_) {
        Exponent f = e;
        for (int a = 0; a < reg_.r; ++a) {
            f[w[a]] = e[a];
        }
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

SparsePolynomial SparsePolynomial::operator-() const
{
    SparsePolynomial out = *this;
    for (auto &[e, c] : out.terms_) {
        c = -c;
    }
    return out;
}

void SparsePolynomial::check_registry(const SparsePolynomial &o) const
{
    if (!(reg_ == o.reg_)) {
        throw RegistryMismatch();
    }
}

SparsePolynomial &SparsePolynomial::operator+=(const SparsePolynomial &o)
{
    check_registry(o);
    for (const auto &[e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

SparsePolynomial &SparsePolynomial::operator-=(const SparsePolynomial &o)
{
    check_registry(o);
    for (const auto &[e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

SparsePolynomial &SparsePolynomial::operator*=(const SparsePolynomial &o)
{
    *this = multiply(*this, o);
    return *this;
}

SparsePolynomial &SparsePolynomial::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, v] : terms_) {
        v *= c;
    }
    return *this;
}

SparsePolynomial operator*(const SparsePolynomial &a, const SparsePolynomial &b) { return multiply(a, b); }

std::string SparsePolynomial::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    const auto names = reg_.names();
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[e, c] = *it;
        Rational mag = abs(c);
        if (first) {
            os << (c < 0 ? "-" : "");
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (mag != 1) {
            os << to_short_string(mag);
            wrote = true;
        }
        for (int v = 0; v < reg_.size(); ++v) {
            if (e[v] == 0) {
                continue;
            }
            os << (wrote ? "*" : "") << names[v];
            if (e[v] != 1) {
                os << "^" << e[v];
            }
            wrote = true;
        }
        if (!wrote) {
            os << "1";
        }
    }
    return os.str();
}

SparsePolynomial multiply(const SparsePolynomial &a, const SparsePolynomial &b,
                          const std::optional<TruncationPolicy> &policy)
{
    if (!(a.registry() == b.registry())) {
        throw RegistryMismatch();
    }
    const auto &reg = a.registry();
    SparsePolynomial out(reg);
    if (a.is_zero() || b.is_zero()) {
        return out;
    }
    std::vector<int> db;
    if (policy) {
        db.reserve(b.size());
        for (const auto &[e, c] : b.terms()) {
            db.push_back(policy->degree_of(e, reg));
        }
    }
    Exponent sum(reg.size());
    Rational prod;
    for (const auto &[ea, ca] : a.terms()) {
        const int da = policy ? policy->degree_of(ea, reg) : 0;
        if (policy && da > policy->max_x_degree) {
            continue;
        }
        std::size_t k = 0;
        for (const auto &[eb, cb] : b.terms()) {
            if (policy && da + db[k++] > policy->max_x_degree) {
                continue;
            }
            for (int v = 0; v < reg.size(); ++v) {
                sum[v] = ea[v] + eb[v];
            }
            prod = ca * cb;
            out.add_term(sum, prod);
        }
    }
    return out;
}

SparsePolynomial pow(const SparsePolynomial &p, unsigned e, const std::optional<TruncationPolicy> &policy)
{
    SparsePolynomial out = SparsePolynomial::constant(p.registry(), 1);
    SparsePolynomial base = p;
    while (e > 0) {
        if (e & 1U) {
            out = multiply(out, base, policy);
        }
        e >>= 1U;
        if (e > 0) {
            base = multiply(base, base, policy);
        }
    }
    return out;
}

SparsePolynomial exact_div(const SparsePolynomial &a, const SparsePolynomial &b)
{
    if (!(a.registry() == b.registry())) {
        throw RegistryMismatch();
    }
    if (b.is_zero()) {
        throw std::domain_error("division by the zero polynomial");
    }
    const auto &reg = a.registry();
    SparsePolynomial quotient(reg);
    if (a.is_zero()) {
        return quotient;
    }

    // Each variable's exponent range in an exact quotient is fixed by the
    // extreme exponents of a and b; a candidate outside that box proves the
    // division inexact and bounds the loop.
    const int nv = reg.size();
    std::vector<int> lo(nv), hi(nv);
    for (int v = 0; v < nv; ++v) {
        lo[v] = a.min_exponent(v) - b.min_exponent(v);
        hi[v] = a.max_exponent(v) - b.max_exponent(v);
        if (!(reg.has_hbar && v == reg.hbar())) {
            lo[v] = std::max(lo[v], 0);
        }
    }

    const auto lead = b.leading_term();
    const Exponent &lead_exp = lead->first;
    const Rational &lead_coeff = lead->second;

    SparsePolynomial rem = a;
    Exponent t(nv), shifted(nv);
    while (!rem.is_zero()) {
        const auto top = rem.leading_term();
        for (int v = 0; v < nv; ++v) {
            t[v] = top->first[v] - lead_exp[v];
            if (t[v] < lo[v] || t[v] > hi[v]) {
                throw InexactDivision("inexact division: remainder term does not factor through divisor ("
                                      + b.str() + ")");
            }
        }
        const Rational factor = top->second / lead_coeff;
        quotient.add_term(t, factor);
        for (const auto &[eb, cb] : b.terms()) {
            for (int v = 0; v < nv; ++v) {
                shifted[v] = t[v] + eb[v];
            }
            rem.add_term(shifted, -factor * cb);
        }
    }
    return quotient;
}

SparsePolynomial poly_arith(const SparsePolynomial &a, const SparsePolynomial &b, PolyOp op)
{
    switch (op) {
    case PolyOp::add:
        return a + b;
    case PolyOp::sub:
        return a - b;
    case PolyOp::mul:
        return a * b;
    case PolyOp::exact_div:
        return exact_div(a, b);
    }
    throw std::invalid_argument("unknown polynomial operation");
}

SparsePolynomial substitute(const SparsePolynomial &p, const std::vector<SparsePolynomial> &images,
                            const VariableRegistry &target)
{
    const auto &reg = p.registry();
    if (static_cast<int>(images.size()) != reg.size()) {
        throw std::invalid_argument("substitution needs one image per variable");
    }
    for (const auto &img : images) {
        if (!(img.registry() == target)) {
            throw RegistryMismatch();
        }
    }
    // power cache per variable, keyed by exponent
    std::vector<std::map<int, SparsePolynomial>> cache(reg.size());
    auto power_of = [&](int v, int e) -> const SparsePolynomial & {
        auto it = cache[v].find(e);
        if (it != cache[v].end()) {
            return it->second;
        }
        SparsePolynomial val(target);
        if (e >= 0) {
            val = pow(images[v], static_cast<unsigned>(e));
        } else {
            const auto &img = images[v];
            if (img.size() != 1) {
                throw std::domain_error("negative power of a non-monomial image");
            }
            const auto &[ie, ic] = *img.terms().begin();
            Exponent inv(ie.size());
            for (std::size_t k = 0; k < ie.size(); ++k) {
                inv[k] = -ie[k];
            }
            SparsePolynomial m(target);
            m.add_term(inv, 1 / ic);
            val = pow(m, static_cast<unsigned>(-e));
        }
        return cache[v].emplace(e, std::move(val)).first->second;
    };

    SparsePolynomial out(target);
    for (const auto &[e, c] : p.terms()) {
        SparsePolynomial term = SparsePolynomial::constant(target, c);
        for (int v = 0; v < reg.size() && !term.is_zero(); ++v) {
            if (e[v] != 0) {
                term = multiply(term, power_of(v, e[v]));
            }
        }
        out += term;
    }
    return out;
}

SparsePolynomial reindex(const SparsePolynomial &p, const std::vector<int> &map, const VariableRegistry &target)
{
    const auto &reg = p.registry();
    if (static_cast<int>(map.size()) != reg.size()) {
        throw std::invalid_argument("reindex map needs one target per variable");
    }
    SparsePolynomial out(target);
    Exponent f(target.size());
    for (const auto &[e, c] : p.terms()) {
        std::fill(f.begin(), f.end(), 0);
        for (int v = 0; v < reg.size(); ++v) {
            if (e[v] != 0) {
                f.at(map[v]) += e[v];
            }
        }
        out.add_term(f, c);
    }
    return out;
}

} // namespace qgrass
