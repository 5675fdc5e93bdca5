#pragma once

#include <map>
#include <vector>

#include <qgrass/polynomial.hpp>
#include <qgrass/ring_g.hpp>

namespace qgrass
{

/// Degree-d coefficient of the small J-function of G(r,n). Component k is a
/// classical class of degree k carrying hbar^-(n*d + k); only the class is stored.
struct JSeries
{
    RingSpecG spec;
    int d = 0;
    std::map<int, ClassG> components;

    int hbar_exponent(int k) const { return -(spec.n * d + k); }
    bool operator==(const JSeries &) const = default;
};

/// Intermediate cap x-degree r(n-r) + C(r,2): enough for every class of G
/// after division by the Vandermonde.
TruncationPolicy default_policy(const RingSpecG &spec);

/// prod_i prod_{l=1}^{d_i} (x_i + l hbar)^-n over xs_hbar(r), truncated.
SparsePolynomial j_product_space(int r, int n, const std::vector<int> &tuple, const TruncationPolicy &policy);

/// Multiplier produced by prod_{i<j}(hbar d/dt_i - hbar d/dt_j) acting on the
/// tuple's exponential term exp(sum t_i (x_i/hbar + d_i)).
SparsePolynomial apply_vandermonde_operator(const std::vector<int> &tuple);

/// J_d as a symmetric polynomial in x (with hbar), before passing to the
/// Schubert basis. Terms have x-degree at most policy cap - C(r,2).
SparsePolynomial j_grassmannian_unreduced(const RingSpecG &spec, int d, const TruncationPolicy &policy);

JSeries j_grassmannian(const RingSpecG &spec, int d, const TruncationPolicy &policy);
inline JSeries j_grassmannian(const RingSpecG &spec, int d) { return j_grassmannian(spec, d, default_policy(spec)); }

/// Reads a symmetric polynomial over xs_hbar(r) into Schubert classes, dropping
/// partitions outside the rectangle. Throws std::logic_error when a class
/// carries any hbar power other than -(n*d + k).
JSeries jseries_from_symmetric(const SparsePolynomial &p, const RingSpecG &spec, int d);

/// Applies the Vandermonde operator to the J-function of (P^{n-1})^r with one
/// Novikov variable per factor, divides by Delta, sets q_i = (-1)^(r-1) q and
/// compares the q^d coefficient with j_grassmannian.
bool hv_verify(const RingSpecG &spec, int d, const TruncationPolicy &policy);
inline bool hv_verify(const RingSpecG &spec, int d) { return hv_verify(spec, d, default_policy(spec)); }

} // namespace qgrass
