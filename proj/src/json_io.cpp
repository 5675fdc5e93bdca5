#include <qgrass/json_io.hpp>

#include <stdexcept>

namespace qgrass
{

Json to_json(const SparsePolynomial &p)
{
    Json terms = Json::array();
    for (const auto &[e, c] : p.terms()) {
        terms.push_back({{"exp", e}, {"coeff", to_string(c)}});
    }
    return {{"vars", p.registry().names()}, {"terms", terms}};
}

VariableRegistry registry_from_names(const std::vector<std::string> &names)
{
    VariableRegistry reg;
    std::size_t pos = 0;
    auto indexed = [&](char prefix, int expected) {
        return pos < names.size() && names[pos] == std::string(1, prefix) + std::to_string(expected);
    };
    while (indexed('x', reg.r + 1)) {
        ++reg.r;
        ++pos;
    }
    if (pos < names.size() && names[pos] == "h") {
        reg.has_hbar = true;
        ++pos;
    }
    if (pos < names.size() && names[pos] == "q") {
        reg.novikov = Novikov::single;
        ++pos;
    } else if (reg.r > 0 && indexed('q', 1)) {
        for (int i = 1; i <= reg.r; ++i) {
            if (!indexed('q', i)) {
                throw std::invalid_argument("expected one Novikov variable per x");
            }
            ++pos;
        }
        reg.novikov = Novikov::vector;
    }
    while (indexed('l', reg.equivariant_count + 1)) {
        ++reg.equivariant_count;
        ++pos;
    }
    if (pos != names.size()) {
        throw std::invalid_argument("unrecognised variable '" + names[pos] + "'");
    }
    return reg;
}

SparsePolynomial polynomial_from_json(const Json &j)
{
    const auto reg = registry_from_names(j.at("vars").get<std::vector<std::string>>());
    SparsePolynomial p(reg);
    for (const auto &term : j.at("terms")) {
        auto e = term.at("exp").get<Exponent>();
        if (static_cast<int>(e.size()) != reg.size()) {
            throw std::invalid_argument("exponent length does not match the variables");
        }
        p += SparsePolynomial::monomial(reg, std::move(e), parse_rational(term.at("coeff").get<std::string>()));
    }
    return p;
}

Json to_json(const Partition &mu) { return mu.parts(); }

Partition partition_from_json(const Json &j) { return Partition(j.get<std::vector<int>>()); }

Json to_json(const JSeries &js)
{
    Json components = Json::array();
    for (const auto &[k, cls] : js.components) {
        Json entries = Json::array();
        for (const auto &[mu, c] : cls.terms()) {
            entries.push_back({{"partition", to_json(mu)}, {"coeff", to_string(c.constant_value())}});
        }
        components.push_back({{"k", k}, {"hbar_exp", js.hbar_exponent(k)}, {"class", entries}});
    }
    return {{"r", js.spec.r}, {"n", js.spec.n}, {"d", js.d}, {"components", components}};
}

JSeries jseries_from_json(const Json &j)
{
    JSeries out{RingSpecG(j.at("r").get<int>(), j.at("n").get<int>()), j.at("d").get<int>(), {}};
    for (const auto &comp : j.at("components")) {
        const int k = comp.at("k").get<int>();
        if (comp.at("hbar_exp").get<int>() != out.hbar_exponent(k)) {
            throw std::invalid_argument("hbar exponent inconsistent with k");
        }
        ClassG cls(out.spec);
        for (const auto &entry : comp.at("class")) {
            const auto mu = partition_from_json(entry.at("partition"));
            if (static_cast<int>(mu.size()) != k) {
                throw std::invalid_argument("partition size does not match k");
            }
            cls.add(mu, SparsePolynomial::constant(q_registry(), parse_rational(entry.at("coeff").get<std::string>())));
        }
        out.components.emplace(k, std::move(cls));
    }
    return out;
}

Json gw_to_json(const GWInvariant &gw, const std::string &method)
{
    return {{"mu", to_json(gw.mu)},     {"nu", to_json(gw.nu)},
            {"rho", to_json(gw.rho)},   {"d", gw.d},
            {"value", to_short_string(gw.value)}, {"method", method}};
}

} // namespace qgrass
