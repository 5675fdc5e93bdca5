#pragma once

#include <vector>

#include <qgrass/jfunction.hpp>

namespace qgrass
{

/// Sorted degrees 0 <= d_1 <= ... <= d_r of a C*-fixed quot point, grouped into
/// blocks of equal degree. Blocks are numbered 1..k+1 with boundaries
/// m_0 = 0 < m_1 < ... < m_{k+1} = r.
class SplittingType
{
public:
    explicit SplittingType(std::vector<int> degrees);

    const std::vector<int> &degrees() const { return degrees_; }
    int r() const { return static_cast<int>(degrees_.size()); }
    int total() const;
    /// Jumping indices m_1..m_k.
    std::vector<int> jumps() const;
    int blocks() const { return static_cast<int>(bounds_.size()) - 1; }
    /// m_i for 0 <= i <= k+1.
    int bound(int i) const { return bounds_[i]; }
    /// r_i = m_i - m_{i-1}, 1 <= i <= k+1.
    int multiplicity(int i) const { return bounds_[i] - bounds_[i - 1]; }
    int block_degree(int i) const { return degrees_[bounds_[i] - 1]; }
    /// d_ij = d_{m_i} - d_{m_j}.
    int gap(int i, int j) const { return block_degree(i) - block_degree(j); }
    /// sum_{j<i} r_i r_j d_ij == (r-1) d (mod 2).
    bool sign_parity_holds() const;

    bool operator==(const SplittingType &) const = default;

private:
    std::vector<int> degrees_;
    std::vector<int> bounds_;
};

/// Splitting types of total d with r entries, in lexicographic order.
std::vector<SplittingType> splitting_types(int d, int r);

/// 1/e of the normal bundle on the fixed locus, as a truncated Laurent
/// polynomial over xs_hbar(r).
SparsePolynomial euler_inverse_fixed_locus(const SplittingType &st, const RingSpecG &spec,
                                           const TruncationPolicy &policy);

/// sum over coset representatives w (descents only at the jumps) of
/// w[p / prod_{j<i} prod_{s,t} (x_{m_{j-1}+t} - x_{m_{i-1}+s})].
SparsePolynomial brion_pushforward(const SparsePolynomial &p, const SplittingType &st);

SparsePolynomial j_via_localization_unreduced(const RingSpecG &spec, int d, const TruncationPolicy &policy);
JSeries j_via_localization(const RingSpecG &spec, int d, const TruncationPolicy &policy);
inline JSeries j_via_localization(const RingSpecG &spec, int d)
{
    return j_via_localization(spec, d, default_policy(spec));
}

struct EquivariantParams
{
    std::vector<Rational> lambda; // one weight per coordinate of C^n
};

/// Equivariant J_d with symbolic weights lambda_1..lambda_n, divided by Delta.
/// Truncation counts x and lambda together, so a term survives when its joint
/// degree is at most the cap minus C(r,2).
SparsePolynomial j_equivariant_symbolic(const RingSpecG &spec, int d, const TruncationPolicy &policy);

/// j_equivariant_symbolic with the weights set to `lam`; no ideal reduction.
SparsePolynomial j_equivariant_raw(const RingSpecG &spec, int d, const EquivariantParams &lam,
                                   const TruncationPolicy &policy);

} // namespace qgrass
