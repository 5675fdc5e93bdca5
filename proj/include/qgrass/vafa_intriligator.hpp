#pragma once

#include <stdexcept>
#include <string>

#include <qgrass/partition.hpp>
#include <qgrass/ring_g.hpp>

namespace qgrass
{

struct VIOptions
{
    int precision_digits = 50;
    long max_denominator = 1;
    double tolerance = 1e-6;
};

struct VIResult
{
    Rational value;
    /// Distance of the floating sum from `value` (imaginary part included).
    double residue = 0.0;
    std::string raw; // real part of the floating sum
};

class VIPrecisionError : public std::runtime_error
{
public:
    VIPrecisionError(const std::string &what, double residue) : std::runtime_error(what), residue_(residue) {}
    double residue() const { return residue_; }

private:
    double residue_;
};

/// <mu,nu,rho>_d by summing over r-tuples of n-th roots of unity:
/// (-1)^(d(r-1)) / (r! n^r) sum sigma_mu sigma_nu sigma_rho(e) prod e_i prod_{i!=j}(e_i - e_j),
/// equivalently (-1)^(C(r,2)+d(r-1)) / (r! n^r) times the same sum with Delta(e)^2.
/// Requires |mu|+|nu|+|rho| = nd + r(n-r). Throws VIPrecisionError when the
/// sum is not within tolerance of a rational with the allowed denominator.
VIResult vafa_intriligator(const Partition &mu, const Partition &nu, const Partition &rho, int d,
                           const RingSpecG &spec, const VIOptions &options = {});

} // namespace qgrass
