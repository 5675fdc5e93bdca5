#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <qgrass/rational.hpp>
#include <qgrass/registry.hpp>

namespace qgrass
{

using Exponent = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// x_1 most significant. Multiplicative, so leading terms multiply.
struct GradedLex
{
    bool operator()(const Exponent &a, const Exponent &b) const;
};

/// Caps the total x-degree of stored terms. With count_lambda the equivariant
/// variables count towards the cap as well (joint (x, lambda) degree).
struct TruncationPolicy
{
    int max_x_degree = 0;
    bool count_lambda = false;

    int degree_of(const Exponent &e, const VariableRegistry &reg) const;
    bool keeps(const Exponent &e, const VariableRegistry &reg) const { return degree_of(e, reg) <= max_x_degree; }
};

class RegistryMismatch : public std::invalid_argument
{
public:
    RegistryMismatch() : std::invalid_argument("polynomial registry mismatch") {}
};

class InexactDivision : public std::domain_error
{
public:
    explicit InexactDivision(const std::string &what) : std::domain_error(what) {}
};

/// Exact multivariate polynomial over Q. Only the hbar exponent may be negative.
/// Terms are kept in GradedLex order with no zero coefficients, so equality is
/// structural.
class SparsePolynomial
{
public:
    using TermMap = std::map<Exponent, Rational, GradedLex>;

    SparsePolynomial() = default;
    explicit SparsePolynomial(VariableRegistry reg) : reg_(reg) {}

    static SparsePolynomial constant(const VariableRegistry &reg, const Rational &c);
    static SparsePolynomial variable(const VariableRegistry &reg, int var, int power = 1);
    static SparsePolynomial monomial(const VariableRegistry &reg, Exponent e, const Rational &c);

    const VariableRegistry &registry() const { return reg_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Exponent &e) const;
    bool is_constant() const;
    /// Throws std::domain_error unless the polynomial is a constant.
    Rational constant_value() const;

    /// Largest term in GradedLex order; the polynomial must be nonzero.
    TermMap::const_reverse_iterator leading_term() const { return terms_.rbegin(); }

    /// Accumulates c * X^e, dropping the entry if it cancels.
    void add_term(const Exponent &e, const Rational &c);

    int max_x_degree() const;
    int min_exponent(int var) const;
    int max_exponent(int var) const;

    SparsePolynomial truncated(const TruncationPolicy &policy) const;

    /// Applies the variable permutation x_a -> x_{w[a]} (0-based).
    SparsePolynomial permute_x(std::span<const int> w) const;

    SparsePolynomial operator-() const;
    SparsePolynomial &operator+=(const SparsePolynomial &o);
    SparsePolynomial &operator-=(const SparsePolynomial &o);
    SparsePolynomial &operator*=(const SparsePolynomial &o);
    SparsePolynomial &operator*=(const Rational &c);

    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial &b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial &b) { return a -= b; }
    friend SparsePolynomial operator*(const SparsePolynomial &a, const SparsePolynomial &b);
    friend SparsePolynomial operator*(SparsePolynomial a, const Rational &c) { return a *= c; }
    friend SparsePolynomial operator*(const Rational &c, SparsePolynomial a) { return a *= c; }

    bool operator==(const SparsePolynomial &o) const { return reg_ == o.reg_ && terms_ == o.terms_; }

    /// Human-readable form, e.g. "x1^2 - 1/2*x2*h^-3".
    std::string str() const;

private:
    void check_registry(const SparsePolynomial &o) const;

    VariableRegistry reg_;
    TermMap terms_;
};

int x_degree(const Exponent &e, const VariableRegistry &reg);

/// Product with terms above the policy's degree cap discarded as they are formed.
SparsePolynomial multiply(const SparsePolynomial &a, const SparsePolynomial &b,
                          const std::optional<TruncationPolicy> &policy = std::nullopt);

SparsePolynomial pow(const SparsePolynomial &p, unsigned e,
                     const std::optional<TruncationPolicy> &policy = std::nullopt);

/// Quotient q with a = q * b. Throws InexactDivision when b does not divide a.
SparsePolynomial exact_div(const SparsePolynomial &a, const SparsePolynomial &b);

enum class PolyOp { add, sub, mul, exact_div };

SparsePolynomial poly_arith(const SparsePolynomial &a, const SparsePolynomial &b, PolyOp op);

/// Ring map sending variable v of p's registry to images[v] (all images over
/// `target`). A negative exponent requires the image to be a single monomial.
SparsePolynomial substitute(const SparsePolynomial &p, const std::vector<SparsePolynomial> &images,
                            const VariableRegistry &target);

/// Embeds p into a larger registry by sending each variable v to variable map[v].
SparsePolynomial reindex(const SparsePolynomial &p, const std::vector<int> &map, const VariableRegistry &target);

} // namespace qgrass
