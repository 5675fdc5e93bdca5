#pragma once

#include <span>

#include <qgrass/polynomial.hpp>

namespace qgrass
{

class NotAntisymmetric : public std::domain_error
{
public:
    NotAntisymmetric() : std::domain_error("polynomial is not antisymmetric in the x-variables") {}
};

/// det(x_i^{alpha_j}) over the registry's x-variables; alpha.size() == reg.r.
SparsePolynomial alternant_determinant(const VariableRegistry &reg, std::span<const int> alpha);

/// prod_{i<j} (x_i - x_j).
SparsePolynomial vandermonde(const VariableRegistry &reg);

/// Compares p with -p under every transposition of two x-variables.
bool is_antisymmetric(const SparsePolynomial &p);
bool is_symmetric(const SparsePolynomial &p);

/// Exact quotient p / Delta for antisymmetric p. Throws NotAntisymmetric, or
/// InexactDivision if divisibility fails.
SparsePolynomial antisym_div_vandermonde(const SparsePolynomial &p);

} // namespace qgrass
