#include <qgrass/verify.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include <qgrass/checks.hpp>
#include <qgrass/identities.hpp>
#include <qgrass/localization.hpp>
#include <qgrass/schur.hpp>
#include <qgrass/vafa_intriligator.hpp>

namespace qgrass
{

std::string Report::status() const
{
    bool failed = false;
    for (const auto &item : items) {
        if (item.error) {
            return "error";
        }
        failed = failed || !item.pass;
    }
    return failed ? "fail" : "pass";
}

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"hori-vafa", "qintegration", "thm25",   "martin",  "localization",
                                                "prop35",    "bcks",         "bailey", "vi-cross"};
    return names;
}

unsigned thread_count()
{
    const char *env = std::getenv("QGRASS_THREADS");
    if (env == nullptr) {
        return 1;
    }
    const long v = std::strtol(env, nullptr, 10);
    return v >= 1 ? static_cast<unsigned>(v) : 1U;
}

Report run_items(const std::string &suite, std::vector<PendingItem> items)
{
    Report report{suite, {}};
    report.items.resize(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            auto &out = report.items[i];
            out.name = items[i].name;
            out.inputs = items[i].inputs;
            const auto start = std::chrono::steady_clock::now();
            try {
                std::tie(out.pass, out.detail) = items[i].run();
            } catch (const std::exception &e) {
                out.pass = false;
                out.error = true;
                out.detail = std::string("error: ") + e.what();
            }
            out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
    };
    const unsigned workers = std::min<unsigned>(thread_count(), static_cast<unsigned>(std::max<std::size_t>(items.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    return report;
}

namespace
{

std::vector<RingSpecG> rings(const SuiteBounds &b, std::vector<RingSpecG> defaults)
{
    if (b.r || b.n) {
        if (!(b.r && b.n)) {
            throw std::invalid_argument("--r and --n must be given together");
        }
        return {RingSpecG(*b.r, *b.n)};
    }
    return defaults;
}

std::string pstr(const Partition &p) { return p.str().empty() ? "0" : p.str(); }

Json ring_inputs(const RingSpecG &s) { return {{"r", s.r}, {"n", s.n}}; }

std::string side_detail(const SideBySide &s)
{
    return "lhs=" + to_short_string(s.lhs) + " rhs=" + to_short_string(s.rhs);
}

/// Admissible Schubert triples with d <= dmax: |mu|+|nu|+|rho| = nd + r(n-r).
template <class Fn>
void for_each_admissible(const RingSpecG &spec, int dmax, Fn &&fn)
{
    const auto parts = partitions_in_rectangle(spec.r, spec.cols());
    for (int d = 0; d <= dmax; ++d) {
        for (const auto &mu : parts) {
            for (const auto &nu : parts) {
                for (const auto &rho : parts) {
                    if (static_cast<int>(mu.size() + nu.size() + rho.size()) == spec.n * d + spec.dim()) {
                        fn(mu, nu, rho, d);
                    }
                }
            }
        }
    }
}

Json triple_inputs(const RingSpecG &s, const Partition &mu, const Partition &nu, const Partition &rho, int d)
{
    Json j = ring_inputs(s);
    j["mu"] = mu.parts();
    j["nu"] = nu.parts();
    j["rho"] = rho.parts();
    j["d"] = d;
    return j;
}

std::string triple_name(const RingSpecG &s, const Partition &mu, const Partition &nu, const Partition &rho, int d)
{
    return s.name() + " mu=" + pstr(mu) + " nu=" + pstr(nu) + " rho=" + pstr(rho) + " d=" + std::to_string(d);
}

struct JCase
{
    int r, n, d;
};

std::vector<JCase> j_cases(const SuiteBounds &b)
{
    if (b.r || b.n) {
        const auto spec = rings(b, {}).front();
        std::vector<JCase> out;
        for (int d = 0; d <= b.dmax.value_or(2); ++d) {
            out.push_back({spec.r, spec.n, d});
        }
        return out;
    }
    std::vector<JCase> out;
    for (const JCase c : {JCase{2, 4, 1}, JCase{2, 4, 2}, JCase{2, 5, 1}, JCase{2, 5, 2}, JCase{3, 6, 1}}) {
        if (!b.dmax || c.d <= *b.dmax) {
            out.push_back(c);
        }
    }
    return out;
}

std::vector<PendingItem> hori_vafa_items(const SuiteBounds &b)
{
    std::vector<PendingItem> items;
    for (const auto c : j_cases(b)) {
        const RingSpecG spec(c.r, c.n);
        Json in = ring_inputs(spec);
        in["d"] = c.d;
        items.push_back({spec.name() + " d=" + std::to_string(c.d), in, [spec, c] {
                             const bool ok = hv_verify(spec, c.d);
                             return std::pair{ok, std::string(ok ? "operator side matches closed form"
                                                                 : "operator side differs from closed form")};
                         }});
    }
    return items;
}

std::vector<PendingItem> localization_items(const SuiteBounds &b)
{
    std::vector<PendingItem> items;
    for (const auto c : j_cases(b)) {
        const RingSpecG spec(c.r, c.n);
        Json in = ring_inputs(spec);
        in["d"] = c.d;
        items.push_back({spec.name() + " d=" + std::to_string(c.d), in, [spec, c] {
                             const auto closed = j_grassmannian(spec, c.d);
                             const auto local = j_via_localization(spec, c.d);
                             const bool ok = closed == local;
                             return std::pair{ok, std::to_string(splitting_types(c.d, spec.r).size()) +
                                                      " splitting types; " + (ok ? "equal" : "differ")};
                         }});
    }
    return items;
}

std::vector<PendingItem> qintegration_items(const SuiteBounds &b)
{
    std::vector<PendingItem> items;
    for (const auto &spec : rings(b, {RingSpecG(2, 4)})) {
        for_each_admissible(spec, b.dmax.value_or(2), [&](const Partition &mu, const Partition &nu,
                                                          const Partition &rho, int d) {
            items.push_back({triple_name(spec, mu, nu, rho, d), triple_inputs(spec, mu, nu, rho, d), [=] {
                                 const auto s = qintegration_check(mu, nu, rho, d, spec);
                                 return std::pair{s.equal, side_detail(s)};
                             }});
        });
    }
    return items;
}

std::vector<PendingItem> thm25_items(const SuiteBounds &b)
{
    std::vector<PendingItem> items;
    for (const auto &spec : rings(b, {RingSpecG(2, 4), RingSpecG(2, 5)})) {
        const auto parts = partitions_in_rectangle(spec.r, spec.cols());
        for (const auto &mu : parts) {
            for (const auto &nu : parts) {
                Json in = ring_inputs(spec);
                in["mu"] = mu.parts();
                in["nu"] = nu.parts();
                items.push_back({spec.name() + " mu=" + pstr(mu) + " nu=" + pstr(nu), in, [=] {
                                     const bool ok = theorem25_check(mu, nu, spec);
                                     return std::pair{ok, std::string(ok ? "equal" : "differ")};
                                 }});
            }
        }
    }
    return items;
}

std::vector<PendingItem> martin_items(const SuiteBounds &b)
{
    std::vector<PendingItem> items;
    for (const auto &spec : rings(b, {RingSpecG(2, 4), RingSpecG(2, 5), RingSpecG(3, 6)})) {
        for (const auto &mu : partitions_in_rectangle(spec.r, spec.cols())) {
            Json in = ring_inputs(spec);
            in["mu"] = mu.parts();
            items.push_back({spec.name() + " sigma " + pstr(mu), in, [=] {
                                 const auto s = martin_check(ClassG::schubert(spec, mu));
                                 return std::pair{s.equal, side_detail(s)};
                             }});
            const auto dual = dual_partition(mu, spec.r, spec.n);
            Json pin = in;
            pin["dual"] = dual.parts();
            items.push_back({spec.name() + " sigma " + pstr(mu) + " * sigma " + pstr(dual), pin, [=] {
                                 ClassG prod(spec);
                                 for (const auto &[lambda, c] : lr_product(mu, dual, spec.r).terms) {
                                     if (lambda.fits(spec.r, spec.cols())) {
                                         prod.add(lambda, SparsePolynomial::constant(q_registry(), c.constant_value()));
                                     }
                                 }
                                 const auto s = martin_check(prod);
                                 const bool ok = s.equal && s.lhs == 1;
                                 return std::pair{ok, side_detail(s)};
                             }});
        }
    }
    return items;
}

std::vector<PendingItem> prop35_items(const SuiteBounds &b)
{
    std::vector<PendingItem> items;
    for (int n = 3; n <= b.nmax.value_or(8); ++n) {
        for (int d = 0; d <= b.dmax.value_or(8); ++d) {
            items.push_back({"n=" + std::to_string(n) + " d=" + std::to_string(d), Json{{"n", n}, {"d", d}}, [=] {
                                 const auto s = prop35_check(n, d);
                                 return std::pair{s.equal, side_detail(s)};
                             }});
        }
    }
    return items;
}

std::vector<PendingItem> bcks_items(const SuiteBounds &b)
{
    std::vector<PendingItem> items;
    const int nmax = b.nmax.value_or(7);
    const int dmax = b.dmax.value_or(5);
    for (int n = 3; n <= nmax; ++n) {
        for (int d = 0; d <= dmax; ++d) {
            items.push_back({"series n=" + std::to_string(n) + " d=" + std::to_string(d),
                             Json{{"n", n}, {"d", d}}, [=] {
                                 const Rational a = a_series_g2n(n, d);
                                 const Rational c = constant_term_g2n(n, d);
                                 return std::pair{a == c, "A=" + to_short_string(a) + " const=" + to_short_string(c)};
                             }});
        }
    }
    for (int n = 3; n <= std::min(nmax, 5); ++n) {
        for (int d = 0; d <= std::min(dmax, 3); ++d) {
            items.push_back({"J G(2," + std::to_string(n) + ") d=" + std::to_string(d),
                             Json{{"r", 2}, {"n", n}, {"d", d}}, [=] {
                                 const auto j = j_grassmannian(RingSpecG(2, n), d);
                                 Rational k0 = 0;
                                 if (auto it = j.components.find(0); it != j.components.end()) {
                                     k0 = q_coefficient(it->second.coefficient(Partition()), 0);
                                 }
                                 const Rational c = constant_term_g2n(n, d);
                                 return std::pair{k0 == c,
                                                  "J k=0 " + to_short_string(k0) + " const=" + to_short_string(c)};
                             }});
        }
    }
    return items;
}

Rational random_rational(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    Rational v(num(rng), den(rng));
    v.canonicalize();
    return v;
}

std::vector<PendingItem> bailey_items(const SuiteBounds &b)
{
    std::vector<PendingItem> items;
    std::mt19937_64 rng(20240531);
    for (int n = 3; n <= b.nmax.value_or(5); ++n) {
        for (int d = 0; d <= b.dmax.value_or(3); ++d) {
            for (int point = 0; point < 10; ++point) {
                Rational q, a;
                for (;;) {
                    q = random_rational(rng);
                    a = random_rational(rng);
                    try {
                        bailey_specialization_check(n, d, q, a);
                        break;
                    } catch (const PoleError &) {
                    }
                }
                items.push_back({"n=" + std::to_string(n) + " d=" + std::to_string(d) + " q=" + to_short_string(q) +
                                     " a=" + to_short_string(a),
                                 Json{{"n", n}, {"d", d}, {"q", to_short_string(q)}, {"a", to_short_string(a)}}, [=] {
                                     const auto s = bailey_specialization_check(n, d, q, a);
                                     return std::pair{s.equal, side_detail(s)};
                                 }});
            }
        }
    }
    return items;
}

std::vector<PendingItem> vi_items(const SuiteBounds &b)
{
    std::vector<PendingItem> items;
    std::vector<std::pair<RingSpecG, int>> cases;
    if (b.r || b.n) {
        cases.emplace_back(rings(b, {}).front(), b.dmax.value_or(2));
    } else {
        cases = {{RingSpecG(2, 4), b.dmax.value_or(3)}, {RingSpecG(2, 5), std::min(b.dmax.value_or(2), 2)}};
    }
    const int precision = b.precision;
    for (const auto &[spec, dmax] : cases) {
        for_each_admissible(spec, dmax, [&](const Partition &mu, const Partition &nu, const Partition &rho, int d) {
            items.push_back({triple_name(spec, mu, nu, rho, d), triple_inputs(spec, mu, nu, rho, d), [=] {
                                 const Rational exact = gw_invariant_G(mu, nu, rho, d, spec).value;
                                 VIOptions opts;
                                 opts.precision_digits = precision;
                                 const auto vi = vafa_intriligator(mu, nu, rho, d, spec, opts);
                                 std::ostringstream detail;
                                 detail << "rimhook=" << to_short_string(exact) << " vi=" << to_short_string(vi.value)
                                        << " residue=" << std::setprecision(3) << vi.residue;
                                 return std::pair{exact == vi.value && vi.residue < 1e-6, detail.str()};
                             }});
        });
    }
    return items;
}

} // namespace

Report verify_suite(const std::string &name, const SuiteBounds &bounds)
{
    std::vector<PendingItem> items;
    if (name == "hori-vafa") {
        items = hori_vafa_items(bounds);
    } else if (name == "localization") {
        items = localization_items(bounds);
    } else if (name == "qintegration") {
        items = qintegration_items(bounds);
    } else if (name == "thm25") {
        items = thm25_items(bounds);
    } else if (name == "martin") {
        items = martin_items(bounds);
    } else if (name == "prop35") {
        items = prop35_items(bounds);
    } else if (name == "bcks") {
        items = bcks_items(bounds);
    } else if (name == "bailey") {
        items = bailey_items(bounds);
    } else if (name == "vi-cross") {
        items = vi_items(bounds);
    } else {
        throw UnknownSuite(name);
    }
    return run_items(name, std::move(items));
}

Json to_json(const Report &report, bool timings)
{
    Json items = Json::array();
    for (const auto &item : report.items) {
        Json j{{"name", item.name}, {"inputs", item.inputs}, {"pass", item.pass}, {"detail", item.detail}};
        if (timings) {
            j["seconds"] = item.seconds;
        }
        items.push_back(std::move(j));
    }
    return {{"suite", report.suite}, {"status", report.status()}, {"items", items}};
}

std::string to_text(const Report &report, bool timings)
{
    std::ostringstream out;
    std::size_t passed = 0;
    for (const auto &item : report.items) {
        passed += item.pass ? 1 : 0;
    }
    out << "suite " << report.suite << ": " << report.status() << " (" << passed << "/" << report.items.size()
        << " passed)\n";
    for (const auto &item : report.items) {
        out << "  " << (item.pass ? "PASS" : (item.error ? "ERR " : "FAIL")) << "  " << item.name << "  "
            << item.detail;
        if (timings) {
            out << "  [" << std::fixed << std::setprecision(3) << item.seconds << "s]";
            out.unsetf(std::ios::fixed);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace qgrass
