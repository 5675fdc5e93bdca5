#pragma once

#include <map>
#include <string>

#include <qgrass/partition.hpp>
#include <qgrass/polynomial.hpp>

namespace qgrass
{

/// G(r, n); the Novikov variable q has degree n.
struct RingSpecG
{
    int r = 1;
    int n = 2;

    RingSpecG() = default;
    /// Throws std::invalid_argument unless 0 < r < n.
    RingSpecG(int r_, int n_);

    int cols() const { return n - r; }
    int dim() const { return r * (n - r); }
    Partition top() const { return Partition::rectangle(r, n - r); }
    std::string name() const;

    bool operator==(const RingSpecG &) const = default;
};

/// Registry of the coefficient ring Q[q].
inline VariableRegistry q_registry() { return VariableRegistry::novikov_only(); }

/// Element of QH*(G(r,n)) in the Schubert basis, coefficients in Q[q].
class ClassG
{
public:
    using TermMap = std::map<Partition, SparsePolynomial>;

    explicit ClassG(RingSpecG spec) : spec_(spec) {}

    static ClassG schubert(const RingSpecG &spec, const Partition &mu, const Rational &c = 1);

    const RingSpecG &spec() const { return spec_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * sigma_mu; mu must fit the rectangle.
    void add(const Partition &mu, const SparsePolynomial &c);
    SparsePolynomial coefficient(const Partition &mu) const;

    /// True when no coefficient involves q.
    bool is_classical() const;
    /// Common value of |mu| + n * deg_q over all terms, if there is one.
    std::optional<int> homogeneous_degree() const;

    ClassG &operator+=(const ClassG &o);
    ClassG &operator*=(const SparsePolynomial &c);
    friend ClassG operator+(ClassG a, const ClassG &b) { return a += b; }

    bool operator==(const ClassG &o) const { return spec_ == o.spec_ && terms_ == o.terms_; }

    /// e.g. "σ[2] + σ[1,1]", "-q·σ[]", "0".
    std::string str() const;

private:
    void check_spec(const ClassG &o) const;

    RingSpecG spec_;
    TermMap terms_;
};

/// Reduces sigma_rho (rho with at most r rows) into the Schubert basis of
/// QH*(G) by repeatedly stripping n-rim hooks from the first row while it
/// exceeds n - r, each hook of height s contributing (-1)^(r-s) q.
ClassG quantum_reduce_schur(const Partition &rho, const RingSpecG &spec);

/// Quantum product via Littlewood-Richardson expansion then rim-hook reduction.
ClassG quantum_product_G(const ClassG &a, const ClassG &b);

/// Coefficient of the top class (the full rectangle), as a polynomial in q.
SparsePolynomial integrate_G(const ClassG &a);

/// Classical Schur polynomial reduction: drops classes outside the rectangle.
ClassG classical_reduce_schur(const Partition &rho, const RingSpecG &spec);

struct GWInvariant
{
    Partition mu, nu, rho;
    int d = 0;
    Rational value;
};

/// <sigma_mu, sigma_nu, sigma_rho>_d, read off integrate_G(sigma_mu * sigma_nu * sigma_rho).
GWInvariant gw_invariant_G(const Partition &mu, const Partition &nu, const Partition &rho, int d,
                           const RingSpecG &spec);

/// Coefficient of q^d in a polynomial over q_registry().
Rational q_coefficient(const SparsePolynomial &p, int d);

} // namespace qgrass
