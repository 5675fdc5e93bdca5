#pragma once

#include <map>
#include <optional>
#include <span>

#include <qgrass/partition.hpp>
#include <qgrass/polynomial.hpp>

namespace qgrass
{

/// Schur basis expansion; coefficients live over `coeff_registry` (the
/// non-x variables of the context). No zero coefficients are stored.
struct SchurExpansion
{
    VariableRegistry coeff_registry;
    std::map<Partition, SparsePolynomial> terms;

    void add(const Partition &lambda, const SparsePolynomial &c);
    /// Constant coefficient of lambda (0 if absent); throws if not constant.
    Rational constant_coefficient(const Partition &lambda) const;

    bool operator==(const SchurExpansion &) const = default;
};

/// D_{mu+delta} / D_delta in x_1..x_r of `reg`; throws if mu has more than reg.r rows.
SparsePolynomial schur_polynomial(const Partition &mu, const VariableRegistry &reg);
SparsePolynomial schur_polynomial(const Partition &mu, int r);

struct SignedPartition
{
    int sign = 1;
    Partition partition;

    bool operator==(const SignedPartition &) const = default;
};

/// D_alpha = sign * D_{lambda+delta}; nullopt when alpha has a repeated entry.
std::optional<SignedPartition> straighten_alternant(std::span<const int> alpha);

/// sigma_mu * sigma_nu in the Schur basis of r-variable symmetric polynomials
/// (rows of the result may exceed any rectangle). Computed by straightening
/// D_{mu+delta+beta} over the monomials x^beta of sigma_nu.
SchurExpansion lr_product(const Partition &mu, const Partition &nu, int r);

/// Expands a symmetric polynomial in the Schur basis by reading the strictly
/// decreasing exponents of p * Delta. Throws std::domain_error if p is not symmetric.
SchurExpansion schur_expand(const SparsePolynomial &p);

} // namespace qgrass
