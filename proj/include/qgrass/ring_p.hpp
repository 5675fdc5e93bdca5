#pragma once

#include <vector>

#include <qgrass/polynomial.hpp>

namespace qgrass
{

/// Element of QH*(P), P = (P^{n-1})^r, in the reduced monomial basis
/// x^I (0 <= i_j < n). With vector Novikov variables the relations are
/// x_i^n = q_i; with a single q (the specialized quotient) x_i^n = (-1)^(r-1) q.
class ClassP
{
public:
    /// Zero class; `kind` is Novikov::vector or Novikov::single.
    ClassP(int r, int n, Novikov kind = Novikov::vector);
    /// Reduces p into normal form; p's registry must be {r x's, no hbar, Novikov}.
    ClassP(int n, SparsePolynomial p);

    /// Registry {x_1..x_r, q-variables} for the given Novikov flavour.
    static VariableRegistry registry_for(int r, Novikov kind);

    /// Lifts a polynomial in x only (any registry with r x's and nothing else).
    static ClassP lift(const SparsePolynomial &x_poly, int n, Novikov kind = Novikov::vector);

    int r() const { return poly_.registry().r; }
    int n() const { return n_; }
    Novikov kind() const { return poly_.registry().novikov; }
    const SparsePolynomial &poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    ClassP &operator+=(const ClassP &o);
    ClassP &operator-=(const ClassP &o);
    ClassP &operator*=(const Rational &c);
    friend ClassP operator+(ClassP a, const ClassP &b) { return a += b; }
    friend ClassP operator-(ClassP a, const ClassP &b) { return a -= b; }

    bool operator==(const ClassP &o) const { return n_ == o.n_ && poly_ == o.poly_; }

private:
    void reduce();
    void check_shape(const ClassP &o) const;

    int n_;
    SparsePolynomial poly_;
};

/// Monomial product followed by x_i^n -> q_i until every exponent is below n.
ClassP quantum_product_P(const ClassP &a, const ClassP &b);

/// Coefficient of x_1^{n-1}...x_r^{n-1} per Novikov monomial; the result keeps
/// the class's registry with all x-exponents zero.
SparsePolynomial integrate_P(const ClassP &a);

/// <a, b, c>_(d_1..d_r): coefficient of q_1^{d_1}...q_r^{d_r} in integrate_P(a*b*c).
Rational gw_invariant_P(const ClassP &a, const ClassP &b, const ClassP &c, const std::vector<int> &degrees);

/// Sign-isotypic projector (1/r!) sum_w sgn(w) w, permuting x's only.
ClassP project_antisymmetric(const ClassP &a);

/// Substitutes q_i = (-1)^(r-1) q into a class with vector Novikov variables.
ClassP specialize_novikov(const ClassP &a);

/// Drops every term carrying a Novikov variable (the classical part).
ClassP classical_part(const ClassP &a);

} // namespace qgrass
