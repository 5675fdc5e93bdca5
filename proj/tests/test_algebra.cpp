#include <doctest.h>

#include <random>

#include <qgrass/alternant.hpp>
#include <qgrass/json_io.hpp>
#include <qgrass/schur.hpp>
#include <qgrass/series.hpp>

#include "oracles.hpp"

using namespace qgrass;
using oracle::c;
using oracle::hbar;
using oracle::x;

namespace
{

SparsePolynomial random_poly(const VariableRegistry &reg, std::mt19937_64 &rng, int terms, int maxdeg)
{
    std::uniform_int_distribution<int> e(0, maxdeg), num(-7, 7), den(1, 4);
    SparsePolynomial p(reg);
    for (int t = 0; t < terms; ++t) {
        Exponent ex(static_cast<std::size_t>(reg.size()), 0);
        for (int v = 0; v < reg.size(); ++v) {
            ex[v] = e(rng);
        }
        Rational q(num(rng), den(rng));
        q.canonicalize();
        p.add_term(ex, q);
    }
    return p;
}

} // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-3") == -3);
    CHECK(to_string(Rational(2)) == "2/1");
    CHECK(to_string(Rational(-1, 4)) == "-1/4");
    CHECK(to_short_string(parse_rational("-4/2")) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(5) == 120);
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("polynomial arithmetic")
{
    const auto reg = VariableRegistry::xs(2);
    const auto x1 = x(reg, 0), x2 = x(reg, 1);
    const auto diff_sq = x1 * x1 - x2 * x2;

    CHECK(poly_arith(x1 - x2, x1 + x2, PolyOp::mul) == diff_sq);
    CHECK(poly_arith(diff_sq, x1 - x2, PolyOp::exact_div) == x1 + x2);
    CHECK_THROWS_AS(poly_arith(diff_sq + c(reg, 1), x1 - x2, PolyOp::exact_div), InexactDivision);
    CHECK_THROWS_AS(x1 + x(VariableRegistry::xs(3), 0), RegistryMismatch);
    CHECK((x1 - x1).is_zero());
    CHECK((x1 - x1).size() == 0);
    CHECK_THROWS(SparsePolynomial::monomial(reg, {-1, 0}, 1));
}

TEST_CASE("ring axioms on random sparse inputs")
{
    std::mt19937_64 rng(7);
    const VariableRegistry reg{3, true, Novikov::single, 0};
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_poly(reg, rng, 5, 3);
        const auto q = random_poly(reg, rng, 5, 3);
        const auto s = random_poly(reg, rng, 4, 2);
        CHECK((p + q) - q == p);
        CHECK(p * q == q * p);
        CHECK((p * q) * s == p * (q * s));
        CHECK(p * (q + s) == p * q + p * s);
        if (!q.is_zero()) {
            CHECK(exact_div(p * q, q) == p);
        }
    }
}

TEST_CASE("laurent exponents in hbar")
{
    const auto reg = VariableRegistry::xs_hbar(1);
    const auto p = hbar(reg, -2) * x(reg, 0) + hbar(reg, -1);
    CHECK(p.min_exponent(reg.hbar()) == -2);
    CHECK(exact_div(p * (x(reg, 0) + hbar(reg)), x(reg, 0) + hbar(reg)) == p);
    CHECK(multiply(hbar(reg, 3), hbar(reg, -3)) == c(reg, 1));
}

TEST_CASE("inverse linear power series")
{
    const auto reg = VariableRegistry::xs_hbar(1);
    const auto x1 = x(reg, 0);

    CHECK(inv_linear_power_series(reg, 0, 1, 2, {2}) ==
          hbar(reg, -2) - c(reg, 2) * x1 * hbar(reg, -3) + c(reg, 3) * x1 * x1 * hbar(reg, -4));
    CHECK(inv_linear_power_series(reg, 0, 1, 1, {0}) == hbar(reg, -1));
    CHECK(inv_linear_power_series(reg, 0, 2, 1, {1}) ==
          c(reg, Rational(1, 2)) * hbar(reg, -1) - c(reg, Rational(1, 4)) * x1 * hbar(reg, -2));

    for (int l = 1; l <= 4; ++l) {
        for (int n = 1; n <= 6; ++n) {
            for (int k = 0; k <= 8; ++k) {
                const TruncationPolicy policy{k};
                const auto s = inv_linear_power_series(reg, 0, l, n, policy);
                const auto back = multiply(s, pow(x1 + c(reg, l) * hbar(reg), n), policy);
                CHECK(back == c(reg, 1));
            }
        }
    }
}

TEST_CASE("shifted power series in a linear form")
{
    const VariableRegistry reg{1, true, Novikov::none, 1};
    const auto u = x(reg, 0) - SparsePolynomial::variable(reg, reg.lambda(0));
    const TruncationPolicy joint{4, true};
    const auto s = inv_shifted_power_series(u, 3, 2, joint);
    CHECK(multiply(s, pow(u + c(reg, 3) * hbar(reg), 2), joint) == c(reg, 1));
    CHECK_THROWS(inv_shifted_power_series(c(reg, 1), 1, 1, joint));
}

TEST_CASE("alternants and vandermonde division")
{
    const auto reg = VariableRegistry::xs(2);
    const auto x1 = x(reg, 0), x2 = x(reg, 1);
    const std::vector<int> a10{1, 0}, a11{1, 1}, a20{2, 0};

    CHECK(alternant_determinant(reg, a10) == x1 - x2);
    CHECK(alternant_determinant(reg, a11).is_zero());
    CHECK(alternant_determinant(reg, a20) == x1 * x1 - x2 * x2);
    CHECK(antisym_div_vandermonde(vandermonde(reg)) == c(reg, 1));
    CHECK(antisym_div_vandermonde(x1 * x1 - x2 * x2) == x1 + x2);
    CHECK_THROWS_AS(antisym_div_vandermonde(x1), NotAntisymmetric);

    const auto reg3 = VariableRegistry::xs(3);
    const std::vector<int> mu_delta{4, 2, 0}; // (2,1) + delta
    CHECK(antisym_div_vandermonde(alternant_determinant(reg3, mu_delta)) == schur_polynomial(Partition({2, 1}), 3));

    // Sign under permutation of the exponent vector.
    const std::vector<int> alpha{5, 1, 3};
    const auto base = alternant_determinant(reg3, alpha);
    for_each_permutation(3, [&](std::span<const int> w, int sign) {
        std::vector<int> permuted(3);
        for (int i = 0; i < 3; ++i) {
            permuted[i] = alpha[w[i]];
        }
        CHECK(alternant_determinant(reg3, permuted) == base * Rational(sign));
    });
}

TEST_CASE("division of random symmetric times vandermonde")
{
    std::mt19937_64 rng(11);
    for (int r = 2; r <= 3; ++r) {
        const auto reg = VariableRegistry::xs(r);
        for (int trial = 0; trial < 10; ++trial) {
            // Random combination of Schur polynomials of degree <= 8.
            std::uniform_int_distribution<int> coeff(-3, 3);
            SparsePolynomial sym(reg);
            for (int k = 0; k <= 8; k += 2 + trial % 3) {
                for (const auto &mu : partitions_of(k, r)) {
                    sym += schur_polynomial(mu, reg) * Rational(coeff(rng));
                }
            }
            CHECK(is_symmetric(sym));
            CHECK(antisym_div_vandermonde(sym * vandermonde(reg)) == sym);
        }
    }
}

TEST_CASE("substitute and reindex")
{
    const auto reg = VariableRegistry::xs_hbar(2);
    const auto p = x(reg, 0) * x(reg, 0) * hbar(reg, -1) + x(reg, 1);
    // Swap x1 and x2, keep hbar.
    const std::vector<SparsePolynomial> images{x(reg, 1), x(reg, 0), hbar(reg)};
    const std::vector<int> w{1, 0};
    CHECK(substitute(p, images, reg) == p.permute_x(w));
    CHECK(p.truncated({1}) == x(reg, 1));
    CHECK(p.max_x_degree() == 2);
}

TEST_CASE("polynomial json round trip")
{
    const VariableRegistry reg{2, true, Novikov::vector, 1};
    const auto p = x(reg, 0) * hbar(reg, -3) * Rational(-1, 2) +
                   SparsePolynomial::variable(reg, reg.q(1)) * SparsePolynomial::variable(reg, reg.lambda(0));
    const auto j = to_json(p);
    CHECK(j["vars"] == Json({"x1", "x2", "h", "q1", "q2", "l1"}));
    CHECK(j["terms"][0]["coeff"].get<std::string>().find('/') != std::string::npos);
    CHECK(polynomial_from_json(Json::parse(j.dump())) == p);
    CHECK_THROWS(polynomial_from_json(Json::parse(R"({"vars":["y"],"terms":[]})")));
}
