#include <doctest.h>

#include <qgrass/alternant.hpp>
#include <qgrass/rim_hook.hpp>
#include <qgrass/schur.hpp>

#include "oracles.hpp"

using namespace qgrass;
using oracle::x;

namespace
{

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

using Kind = RimHookOutcome::Kind;

} // namespace

TEST_CASE("partitions")
{
    CHECK(P({2, 1, 0, 0}) == P({2, 1}));
    CHECK(P({2, 1}).size() == 3);
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({1, -1}), std::invalid_argument);
    CHECK(parse_partition("2, 1") == P({2, 1}));
    CHECK(parse_partition("0").empty());
    CHECK(parse_partition("").empty());
    CHECK_THROWS_AS(parse_partition("1,a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
    CHECK(partitions_in_rectangle(2, 2).size() == 6);
    CHECK(partitions_in_rectangle(3, 3).size() == 20);
    CHECK(partitions_of(4, 2).size() == 3);
}

TEST_CASE("dual partitions")
{
    CHECK(dual_partition(Partition(), 2, 4) == P({2, 2}));
    CHECK(dual_partition(P({2, 1}), 2, 4) == P({1}));
    CHECK(dual_partition(P({1}), 1, 6) == P({4}));
    CHECK_THROWS(dual_partition(P({3}), 2, 4));
    for (const auto &[r, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
        for (const auto &mu : partitions_in_rectangle(r, n - r)) {
            const auto dual = dual_partition(mu, r, n);
            CHECK(dual_partition(dual, r, n) == mu);
            CHECK(mu.size() + dual.size() == r * (n - r));
        }
    }
}

TEST_CASE("schur polynomials")
{
    const auto reg = VariableRegistry::xs(2);
    CHECK(schur_polynomial(Partition(), 2) == SparsePolynomial::constant(reg, 1));
    CHECK(schur_polynomial(P({1}), 2) == x(reg, 0) + x(reg, 1));
    CHECK(schur_polynomial(P({1, 1}), 2) == x(reg, 0) * x(reg, 1));
    CHECK_THROWS(schur_polynomial(P({1, 1, 1}), 2));

    // Bialternant against Jacobi-Trudi.
    for (int r = 1; r <= 3; ++r) {
        for (int k = 0; k <= 5; ++k) {
            for (const auto &mu : partitions_of(k, r)) {
                CHECK(schur_polynomial(mu, r) == oracle::jacobi_trudi(mu.parts(), r));
            }
        }
    }
}

TEST_CASE("straightening alternants")
{
    const std::vector<int> delta{2, 1, 0}, a02{0, 2}, a11{1, 1};
    CHECK(straighten_alternant(delta) == SignedPartition{1, Partition()});
    CHECK(straighten_alternant(a02) == SignedPartition{-1, P({1})});
    CHECK(!straighten_alternant(a11));

    const auto reg = VariableRegistry::xs(3);
    const std::vector<int> alpha{1, 5, 3};
    const auto s = straighten_alternant(alpha);
    REQUIRE(s);
    auto lambda_delta = s->partition.padded(3);
    for (int i = 0; i < 3; ++i) {
        lambda_delta[i] += 2 - i;
    }
    CHECK(alternant_determinant(reg, alpha) == alternant_determinant(reg, lambda_delta) * Rational(s->sign));
}

TEST_CASE("littlewood-richardson products")
{
    auto only = [](const SchurExpansion &e) {
        std::map<Partition, Rational> out;
        for (const auto &[lambda, c] : e.terms) {
            out[lambda] = c.constant_value();
        }
        return out;
    };
    CHECK(only(lr_product(P({1}), P({1}), 2)) == std::map<Partition, Rational>{{P({2}), 1}, {P({1, 1}), 1}});
    CHECK(only(lr_product(P({2, 1}), Partition(), 2)) == std::map<Partition, Rational>{{P({2, 1}), 1}});
    CHECK(only(lr_product(P({2}), P({1, 1}), 2)) == std::map<Partition, Rational>{{P({3, 1}), 1}});
    CHECK(only(lr_product(P({2, 1}), P({2, 1}), 3))[P({3, 2, 1})] == 2);

    // Re-expanding the product polynomial reproduces the LR data; symmetric in mu, nu.
    for (int r = 1; r <= 3; ++r) {
        for (int a = 0; a <= 4; ++a) {
            for (int b = 0; b <= 4; ++b) {
                for (const auto &mu : partitions_of(a, r)) {
                    for (const auto &nu : partitions_of(b, r)) {
                        const auto lr = lr_product(mu, nu, r);
                        SparsePolynomial sum(VariableRegistry::xs(r));
                        for (const auto &[lambda, c] : lr.terms) {
                            CHECK(c.constant_value() > 0);
                            sum += schur_polynomial(lambda, r) * c.constant_value();
                        }
                        CHECK(sum == schur_polynomial(mu, r) * schur_polynomial(nu, r));
                        CHECK(lr == lr_product(nu, mu, r));
                    }
                }
            }
        }
    }
}

TEST_CASE("schur expansion of symmetric polynomials")
{
    const auto h3 = oracle::complete_homogeneous(2, 3);
    const auto e = schur_expand(h3);
    CHECK(e.terms.size() == 1);
    CHECK(e.constant_coefficient(P({3})) == 1);
    const auto reg = VariableRegistry::xs(2);
    CHECK_THROWS_AS(schur_expand(x(reg, 0)), std::domain_error);
}

TEST_CASE("rim hook removal")
{
    CHECK(remove_n_rim(P({3, 1}), 4, 1) == RimHookOutcome{Kind::hook, Partition(), 2});
    CHECK(remove_n_rim(P({3, 1}), 3, 1).kind == Kind::illegal_rim);
    CHECK(remove_n_rim(P({4}), 5, 1).kind == Kind::no_rim);
    CHECK(remove_n_rim(P({4}), 4, 1) == RimHookOutcome{Kind::hook, Partition(), 1});
    CHECK(remove_n_rim(P({3, 3}), 4, 1) == RimHookOutcome{Kind::hook, P({2}), 2});
    CHECK_THROWS(remove_n_rim(Partition(), 2, 1));
    CHECK_THROWS(remove_n_rim(P({2}), 2, 2));

    // Size and containment for every legal hook.
    for (int k = 1; k <= 9; ++k) {
        for (const auto &rho : partitions_of(k, 4)) {
            for (int n = 1; n <= 6; ++n) {
                for (int row = 1; row <= rho.length(); ++row) {
                    const auto out = remove_n_rim(rho, n, row);
                    if (out.kind == Kind::hook) {
                        CHECK(out.remainder.size() + n == rho.size());
                        CHECK(rho.contains(out.remainder));
                        CHECK(out.height >= 1);
                    }
                }
            }
        }
    }
}
