#pragma once

#include <qgrass/polynomial.hpp>

namespace qgrass
{

/// (x_i + l*hbar)^(-n) as a Laurent polynomial in hbar, truncated at the
/// policy's x-degree: sum_k binom(n-1+k, k) (-1)^k x_i^k (l*hbar)^-(n+k).
/// `i` is 0-based.
SparsePolynomial inv_linear_power_series(const VariableRegistry &reg, int i, int l, int n,
                                         const TruncationPolicy &policy);

/// (u + l*hbar)^(-n) for a form u of positive policy degree (no hbar, no
/// constant term), expanded in powers of u and truncated by the policy.
SparsePolynomial inv_shifted_power_series(const SparsePolynomial &u, int l, int n, const TruncationPolicy &policy);

} // namespace qgrass
