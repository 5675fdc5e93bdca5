#pragma once

#include <qgrass/partition.hpp>
#include <qgrass/ring_g.hpp>
#include <qgrass/ring_p.hpp>

namespace qgrass
{

/// Both sides of an exact identity.
struct SideBySide
{
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

/// Lift of a classical class: sum of its Schur polynomials evaluated in H*(P).
ClassP lift_class(const ClassG &gamma, Novikov kind = Novikov::vector);

/// theta(gamma) = lift(gamma) * Delta. Every exponent of sigma_mu * Delta is at
/// most n-1, so no reduction happens (checked; throws std::logic_error otherwise).
ClassP theta(const ClassG &gamma);

/// theta extended over Q[q]: lands in the specialized ring with a single q.
ClassP theta_bar(const ClassG &gamma);

/// int_G gamma against ((-1)^C(r,2) / r!) int_P lift(gamma) * Delta^2.
SideBySide martin_check(const ClassG &gamma);

/// p_V((sigma_nu *_P f)|spec) == (sigma_nu *_P p_V f)|spec, where |spec sets
/// q_i = (-1)^(r-1) q.
bool lemma26_check(const Partition &nu, const ClassP &f, const RingSpecG &spec);

/// theta_bar(sigma_mu *_G sigma_nu) == (theta(sigma_mu) *_P sigma_nu)|spec.
bool theorem25_check(const Partition &mu, const Partition &nu, const RingSpecG &spec);

/// <mu,nu,rho>_d against ((-1)^C(r,2)/r!) sum_{|d_i|=d} (-1)^{d(r-1)} <mu Delta, nu, rho Delta>_(d_i).
SideBySide qintegration_check(const Partition &mu, const Partition &nu, const Partition &rho, int d,
                              const RingSpecG &spec);

/// Reduces D_{rho+delta} modulo x_i^n = (-1)^(r-1) q by lowering one entry >= n
/// at a time and straightening; the independent alternant route to the
/// rim-hook reduction of sigma_rho.
ClassG alternant_reduce_schur(const Partition &rho, const RingSpecG &spec);

/// All compositions (d_1..d_r) of d in lexicographic order.
std::vector<std::vector<int>> compositions(int d, int r);

} // namespace qgrass
