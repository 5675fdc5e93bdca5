#include <qgrass/cli.hpp>

#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include <qgrass/json_io.hpp>
#include <qgrass/localization.hpp>
#include <qgrass/vafa_intriligator.hpp>
#include <qgrass/verify.hpp>

namespace qgrass
{

namespace
{

/// Bad user input detected after CLI11 parsing; maps to exit code 2.
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Options
{
    int r = 2;
    int n = 4;
    std::string mu, nu, rho;
    int d = 0;
    std::optional<int> dmax, nmax;
    std::string format = "text";
    int precision = 50;
    std::string method;
    std::optional<int> truncation;
    bool timings = false;
    std::string suite;
};

RingSpecG ring(const Options &o)
{
    try {
        return RingSpecG(o.r, o.n);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("invalid --r/--n: ") + e.what());
    }
}

Partition partition_arg(const std::string &flag, const std::string &text, const RingSpecG &spec)
{
    Partition p;
    try {
        p = parse_partition(text);
    } catch (const std::invalid_argument &e) {
        throw UsageError("invalid " + flag + ": " + e.what());
    }
    if (!p.fits(spec.r, spec.cols())) {
        throw UsageError("invalid " + flag + ": partition " + p.str() + " does not fit " + spec.name());
    }
    return p;
}

void require_degree(int d)
{
    if (d < 0) {
        throw UsageError("invalid --d: degree must be nonnegative");
    }
}

std::string pstr(const Partition &p) { return p.str().empty() ? "0" : p.str(); }

std::string run_product(const Options &o)
{
    const auto spec = ring(o);
    const auto mu = partition_arg("--mu", o.mu, spec);
    const auto nu = partition_arg("--nu", o.nu, spec);
    const auto prod = quantum_product_G(ClassG::schubert(spec, mu), ClassG::schubert(spec, nu));
    if (o.format == "json") {
        Json terms = Json::array();
        for (const auto &[lambda, c] : prod.terms()) {
            for (const auto &[e, v] : c.terms()) {
                terms.push_back({{"partition", lambda.parts()}, {"q", e[0]}, {"coeff", to_string(v)}});
            }
        }
        return Json{{"r", spec.r}, {"n", spec.n}, {"mu", mu.parts()}, {"nu", nu.parts()}, {"product", terms}}.dump(2) +
               "\n";
    }
    return prod.str() + "\n";
}

std::string run_gw(const Options &o)
{
    const auto spec = ring(o);
    const auto mu = partition_arg("--mu", o.mu, spec);
    const auto nu = partition_arg("--nu", o.nu, spec);
    const auto rho = partition_arg("--rho", o.rho, spec);
    require_degree(o.d);
    const std::string method = o.method.empty() ? "rimhook" : o.method;
    GWInvariant gw{mu, nu, rho, o.d, 0};
    std::string extra;
    if (method == "rimhook") {
        gw = gw_invariant_G(mu, nu, rho, o.d, spec);
    } else if (method == "vi") {
        if (static_cast<int>(mu.size() + nu.size() + rho.size()) != spec.n * o.d + spec.dim()) {
            gw.value = 0; // degree mismatch: the invariant vanishes
        } else {
            VIOptions opts;
            opts.precision_digits = o.precision;
            const auto vi = vafa_intriligator(mu, nu, rho, o.d, spec, opts);
            gw.value = vi.value;
            std::ostringstream s;
            s << ", residue " << std::setprecision(3) << vi.residue;
            extra = s.str();
        }
    } else {
        throw UsageError("invalid --method for gw: " + method + " (use rimhook or vi)");
    }
    if (o.format == "json") {
        return gw_to_json(gw, method).dump(2) + "\n";
    }
    return "<" + pstr(mu) + " | " + pstr(nu) + " | " + pstr(rho) + ">_" + std::to_string(o.d) + " on " + spec.name() +
           " = " + to_short_string(gw.value) + "  (" + method + extra + ")\n";
}

std::string run_jfun(const Options &o, std::string &warnings)
{
    const auto spec = ring(o);
    require_degree(o.d);
    auto policy = default_policy(spec);
    if (o.truncation) {
        if (*o.truncation < policy.max_x_degree) {
            warnings += "warning: --truncation " + std::to_string(*o.truncation) + " is below the safe cap " +
                        std::to_string(policy.max_x_degree) + "; high-degree classes will be missing or wrong\n";
        }
        if (*o.truncation < spec.r * (spec.r - 1) / 2) {
            throw UsageError("invalid --truncation: must be at least C(r,2)");
        }
        policy.max_x_degree = *o.truncation;
    }
    const std::string method = o.method.empty() ? "closed" : o.method;
    JSeries j;
    if (method == "closed") {
        j = j_grassmannian(spec, o.d, policy);
    } else if (method == "localization") {
        j = j_via_localization(spec, o.d, policy);
    } else {
        throw UsageError("invalid --method for jfun: " + method + " (use closed or localization)");
    }
    if (o.format == "json") {
        return to_json(j).dump(2) + "\n";
    }
    std::ostringstream out;
    out << "J_" << o.d << " on " << spec.name() << " (" << method << ")\n";
    for (const auto &[k, cls] : j.components) {
        out << "  k=" << k << "  h^" << j.hbar_exponent(k) << "  " << cls.str() << '\n';
    }
    return out.str();
}

std::string run_verify(const Options &o, bool restrict_ring, bool &passed)
{
    SuiteBounds b;
    if (restrict_ring) {
        const auto spec = ring(o);
        b.r = spec.r;
        b.n = spec.n;
    }
    b.dmax = o.dmax;
    b.nmax = o.nmax;
    b.precision = o.precision;
    if (o.truncation) {
        throw UsageError("--truncation does not apply to verify");
    }
    Report report;
    try {
        report = verify_suite(o.suite, b);
    } catch (const UnknownSuite &e) {
        throw UsageError(e.what());
    }
    passed = report.passed();
    if (o.format == "json") {
        return to_json(report, o.timings).dump(2) + "\n";
    }
    return to_text(report, o.timings);
}

} // namespace

CliResult run(const std::vector<std::string> &args)
{
    CliResult result;
    Options o;
    CLI::App app{"Quantum cohomology of Grassmannians: products, invariants, J-functions, checks", "qgrass"};
    app.require_subcommand(1);

    auto add_ring = [&](CLI::App *sub) {
        sub->add_option("--r", o.r, "subspace dimension r")->capture_default_str();
        sub->add_option("--n", o.n, "ambient dimension n")->capture_default_str();
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto *product = app.add_subcommand("product", "quantum product of two Schubert classes");
    add_ring(product);
    product->add_option("--mu", o.mu, "first partition, e.g. 2,1")->required();
    product->add_option("--nu", o.nu, "second partition")->required();

    auto *gw = app.add_subcommand("gw", "three-point Gromov-Witten invariant");
    add_ring(gw);
    gw->add_option("--mu", o.mu)->required();
    gw->add_option("--nu", o.nu)->required();
    gw->add_option("--rho", o.rho)->required();
    gw->add_option("--d", o.d, "degree")->required();
    gw->add_option("--method", o.method, "rimhook or vi")->check(CLI::IsMember({"rimhook", "vi"}));
    gw->add_option("--precision", o.precision, "decimal digits for the vi method")->check(CLI::Range(10, 10000));

    auto *jfun = app.add_subcommand("jfun", "degree-d coefficient of the J-function");
    add_ring(jfun);
    jfun->add_option("--d", o.d, "degree")->required();
    jfun->add_option("--method", o.method, "closed or localization")
        ->check(CLI::IsMember({"closed", "localization"}));
    jfun->add_option("--truncation", o.truncation, "x-degree cap for intermediate products");

    auto *verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--r", o.r, "restrict to one ring (with --n)");
    verify->add_option("--n", o.n, "restrict to one ring (with --r)");
    verify->add_option("--dmax", o.dmax, "largest degree");
    verify->add_option("--nmax", o.nmax, "largest n (identity suites)");
    verify->add_option("--precision", o.precision, "decimal digits for vi-cross")->check(CLI::Range(10, 10000));
    verify->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--timings", o.timings, "include per-item timings");

    std::vector<const char *> argv{"qgrass"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return {code == 0 ? 0 : 2, out.str(), err.str()};
    }

    try {
        bool passed = true;
        std::string warnings;
        if (product->parsed()) {
            result.out = run_product(o);
        } else if (gw->parsed()) {
            result.out = run_gw(o);
        } else if (jfun->parsed()) {
            result.out = run_jfun(o, warnings);
        } else {
            const auto ring_flags = verify->count("--r") + verify->count("--n");
            if (ring_flags == 1) {
                throw UsageError("--r and --n must be given together");
            }
            result.out = run_verify(o, ring_flags == 2, passed);
        }
        result.err = warnings;
        result.exit_code = passed ? 0 : 1;
    } catch (const UsageError &e) {
        return {2, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception &e) {
        return {1, "", std::string("error: ") + e.what() + "\n"};
    }
    return result;
}

} // namespace qgrass
