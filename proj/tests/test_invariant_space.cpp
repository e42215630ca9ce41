#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include <semiform/box_partitions.hpp>
#include <semiform/errors.hpp>
#include <semiform/invariant_space.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace semiform;

namespace
{

Polynomial P(unsigned n, const char *text)
{
    return Polynomial::parse(n, text);
}

std::vector<Monomial> monos(unsigned n, std::initializer_list<const char *> texts)
{
    std::vector<Monomial> out;
    for (const auto *t : texts) {
        out.push_back(P(n, t).terms().begin()->first);
    }
    return out;
}

} // namespace

TEST(BasisQ, Examples)
{
    EXPECT_EQ(basis_Q({2, 2, 2}).monomials, monos(2, {"a0*a2", "a1^2"}));
    EXPECT_EQ(basis_Q({5, 3, 0}).monomials, monos(5, {"a0^3"}));
    EXPECT_EQ(basis_Q({4, 4, 6}).size(), 7u);
    EXPECT_EQ(basis_Q({2, 2, 5}).size(), 0u);
    const auto b = basis_Q({4, 4, 6});
    EXPECT_EQ(b.index_of(partition_monomial(BoxPartition({3, 3}, 4, 4))), 2u);
    EXPECT_FALSE(b.index_of(Monomial::variable(4, 1, 4)));
    EXPECT_THROW(b.coordinates(P(4, "a1^4")), std::invalid_argument);
}

TEST(MatrixOf, Examples)
{
    const auto d = matrix_of(Op::D, {2, 2, 2});
    EXPECT_EQ(d.codomain.monomials, monos(2, {"a0*a1"}));
    ASSERT_EQ(d.matrix.rows, 1u);
    ASSERT_EQ(d.matrix.cols, 2u);
    EXPECT_EQ(d.matrix.columns[0], (RationalColumn{{0, Rational(2)}}));
    EXPECT_EQ(d.matrix.columns[1], (RationalColumn{{0, Rational(2)}}));

    const auto d1 = matrix_of(Op::D, {1, 2, 1});
    EXPECT_EQ(d1.matrix.rows, 1u);
    EXPECT_EQ(d1.matrix.columns[0], (RationalColumn{{0, Rational(1)}}));

    const auto top = matrix_of(Op::Delta, {3, 2, 6});
    EXPECT_EQ(top.matrix.rows, 0u);
    EXPECT_EQ(top.matrix.cols, 1u);
    EXPECT_TRUE(top.matrix.columns[0].empty());

    const auto bottom = matrix_of(Op::D, {3, 2, 0});
    EXPECT_EQ(bottom.matrix.rows, 0u);
    EXPECT_EQ(bottom.codomain.sig, (SpaceSignature{3, 2, 0}));
}

TEST(MatrixOf, ColumnsAreOperatorImages)
{
    for (const SpaceSignature sig : {SpaceSignature{3, 3, 4}, SpaceSignature{4, 3, 5}, SpaceSignature{2, 5, 3}}) {
        for (const auto op : {Op::D, Op::Delta}) {
            const auto a = matrix_of(op, sig);
            for (std::size_t j = 0; j < a.domain.size(); ++j) {
                const auto mono = Polynomial::from_monomial(a.domain.monomials[j]);
                const auto image = op == Op::D ? oracle::D(mono) : oracle::Delta(mono);
                Polynomial rebuilt(sig.n);
                for (const auto &[i, v] : a.matrix.columns[j]) {
                    rebuilt = rebuilt + Polynomial::from_monomial(a.codomain.monomials[i], v);
                    if (op == Op::D) {
                        EXPECT_GT(v, 0);
                        EXPECT_EQ(v.get_den(), 1);
                    }
                }
                EXPECT_EQ(rebuilt, image);
            }
        }
    }
}

TEST(SemiInvariants, Examples)
{
    const auto disc = semi_invariant_basis({2, 2, 2});
    EXPECT_TRUE(disc.in_sylvester_range);
    EXPECT_EQ(disc.polynomials, std::vector<Polynomial>{P(2, "a0*a2 - a1^2")});

    const auto quartic = semi_invariant_basis({4, 4, 6});
    ASSERT_EQ(quartic.polynomials.size(), 2u);
    EXPECT_TRUE(span_contains(quartic, fixtures::I1()));
    EXPECT_TRUE(span_contains(quartic, fixtures::I2()));
    EXPECT_FALSE(span_contains(quartic, P(4, "a0*a2^3")));

    EXPECT_EQ(semi_invariant_basis({3, 5, 0}).polynomials, std::vector<Polynomial>{P(3, "a0^5")});

    const auto outside = semi_invariant_basis({2, 2, 3});
    EXPECT_FALSE(outside.in_sylvester_range);
    EXPECT_TRUE(outside.polynomials.empty());
}

TEST(SemiInvariants, NormalForm)
{
    const auto b = semi_invariant_basis({4, 4, 6});
    for (const auto &p : b.polynomials) {
        Integer g = 0;
        for (const auto &[mono, c] : p.terms()) {
            EXPECT_EQ(c.get_den(), 1);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        }
        EXPECT_EQ(g, 1);
        EXPECT_GT(p.terms().begin()->second, 0);
    }
    // Reduced echelon: each leading monomial is absent from the other element.
    EXPECT_EQ(b.polynomials[1].coefficient(b.polynomials[0].terms().begin()->first), 0);
    EXPECT_EQ(b.polynomials[0].coefficient(b.polynomials[1].terms().begin()->first), 0);
}

TEST(SemiInvariants, BothTestsAgreeOnComputedBases)
{
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned k = 1; k <= 4; ++k) {
            for (unsigned m = 0; m <= n * k / 2; ++m) {
                const auto b = semi_invariant_basis({n, k, m});
                EXPECT_EQ(b.polynomials.size(), delta(k, n, m));
                for (const auto &p : b.polynomials) {
                    EXPECT_TRUE(is_semi_invariant(p, SemiInvariantTest::by_operator));
                    EXPECT_TRUE(is_semi_invariant(p, SemiInvariantTest::by_shear));
                }
            }
        }
    }
}

TEST(IsSemiInvariant, Examples)
{
    for (const auto test : {SemiInvariantTest::by_operator, SemiInvariantTest::by_shear}) {
        EXPECT_TRUE(is_semi_invariant(fixtures::I1(), test));
        EXPECT_FALSE(is_semi_invariant(P(3, "a1"), test));
        EXPECT_TRUE(is_semi_invariant(P(2, "a0*a2 - a1^2"), test));
    }
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const unsigned n = 1 + rng() % 4, k = rng() % 4, m = rng() % (n * k + 1);
        const auto p = oracle::random_isobaric(rng, n, k, m);
        EXPECT_EQ(is_semi_invariant(p, SemiInvariantTest::by_operator), is_semi_invariant(p, SemiInvariantTest::by_shear));
    }
}

TEST(Sylvester, Examples)
{
    const auto r = sylvester_report(2, 2, 2);
    EXPECT_EQ(r.rank_D, 1u);
    EXPECT_EQ(r.nullity_D, 1u);
    EXPECT_TRUE(r.injective);
    // V_1 = <a0 a1> and V_2 = <a0^2>: D(a0 a1) = a0^2 is still nonzero.
    EXPECT_EQ(r.chain_dims, (std::vector<std::size_t>{2, 1, 1, 0}));
    EXPECT_EQ(r.kernel_dims, (std::vector<std::size_t>{1, 0, 1}));
    EXPECT_TRUE(r.ok());

    const auto cubic = sylvester_report(3, 3, 3);
    EXPECT_TRUE(cubic.ok());
    EXPECT_GE(cubic.chain_dims[3], 1u); // a0^3 survives in V_3
    EXPECT_EQ(cubic.chain_dims[4], 0u);

    EXPECT_EQ(sylvester_report(4, 4, 6).nullity_D, 2u);
    EXPECT_THROW(sylvester_report(2, 2, 0), std::out_of_range);
    EXPECT_THROW(sylvester_report(2, 2, 3), std::out_of_range);
}

TEST(Sylvester, TheoremsHoldOnGrid)
{
    for (unsigned n = 0; n <= 5; ++n) {
        for (unsigned k = 0; k <= 5; ++k) {
            for (unsigned m = 0; m <= n * k / 2; ++m) {
                const auto r = analyze_signature({n, k, m});
                EXPECT_TRUE(r.ok()) << n << " " << k << " " << m;
                EXPECT_EQ(r.rank_D, count_p(k, n, static_cast<long>(m) - 1));
                EXPECT_EQ(r.nullity_D, delta(k, n, m));
                EXPECT_EQ(r.nullity_D, analyze_signature({k, n, m}).nullity_D);
            }
        }
    }
}

TEST(Sylvester, CumulativeDeltasGiveP)
{
    for (unsigned n = 1; n <= 6; ++n) {
        for (unsigned k = 1; k <= 6; ++k) {
            Integer running = 0;
            for (unsigned m = 0; m <= n * k / 2; ++m) {
                running += delta(k, n, m);
                EXPECT_EQ(running, count_p(k, n, m));
            }
        }
    }
}

TEST(DimensionTable, Tsv)
{
    const auto rows = dimension_table(2, 2);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(dimension_table_tsv(rows), "n\tk\tm\tp\tdelta\trank\tnullity\tsurjective\tinjective\n"
                                         "2\t2\t0\t1\t1\t0\t1\ttrue\ttrue\n"
                                         "2\t2\t1\t1\t0\t1\t0\ttrue\ttrue\n"
                                         "2\t2\t2\t2\t1\t1\t1\ttrue\ttrue\n");
}

TEST(RingClosure, ProductsOfSemiInvariants)
{
    const auto a = semi_invariant_basis({3, 2, 2});
    const auto b = semi_invariant_basis({3, 4, 6});
    ASSERT_FALSE(a.polynomials.empty());
    ASSERT_FALSE(b.polynomials.empty());
    for (const auto &p : a.polynomials) {
        for (const auto &q : b.polynomials) {
            EXPECT_TRUE(apply_D(p * q).is_zero());
        }
    }
    const auto i12 = fixtures::I1() * fixtures::I2();
    EXPECT_TRUE(span_contains(semi_invariant_basis({4, 8, 12}), i12));
}

TEST(Additivity, Examples)
{
    const auto disc = P(2, "a0*a2 - a1^2");
    const auto w2 = additivity_witness(2, 2, 2, 2);
    EXPECT_EQ(w2.branch, "a0-power");
    EXPECT_EQ(w2.result, P(2, "a0^2") * disc);

    const auto w4 = additivity_witness(2, 2, 2, 4);
    EXPECT_EQ(w4.branch, "product");
    EXPECT_EQ(w4.m1, 2u);
    EXPECT_EQ(w4.m2, 2u);
    EXPECT_EQ(w4.result, disc * disc);

    // m = 12 is below the top weight 16 and at least nk1/2 + 2 = 10, so the
    // split is (8, 4) rather than (6, 6).
    const auto w12 = additivity_witness(4, 4, 4, 12);
    EXPECT_EQ(w12.m1, 8u);
    EXPECT_EQ(w12.m2, 4u);
    EXPECT_TRUE(is_semi_invariant(w12.result, SemiInvariantTest::by_operator));
    EXPECT_EQ(*homogeneity(w12.result), (Homogeneity{8, 12}));

    const auto w16 = additivity_witness(4, 4, 4, 16);
    EXPECT_EQ(w16.m1, 8u);
    EXPECT_EQ(w16.m2, 8u);
    const auto w5 = additivity_witness(4, 4, 4, 5);
    EXPECT_EQ(w5.m1, 3u);
    EXPECT_EQ(w5.m2, 2u);
}

TEST(Additivity, Rejections)
{
    EXPECT_THROW(additivity_witness(1, 2, 2, 2), std::invalid_argument);
    EXPECT_THROW(additivity_witness(3, 3, 3, 2), std::invalid_argument);
    EXPECT_THROW(additivity_witness(2, 2, 2, 1), std::invalid_argument);
    EXPECT_THROW(additivity_witness(2, 2, 2, 5), std::invalid_argument);
    // Needs a weight-3 semi-invariant of a binary quadratic form of degree 2.
    EXPECT_THROW(additivity_witness(2, 2, 2, 3), std::invalid_argument);
}

TEST(Capacity, GuardrailFollowsEnvironment)
{
    ::setenv("SEMIFORM_MAX_DIM", "6", 1);
    EXPECT_THROW(basis_Q({4, 4, 6}), CapacityError);
    EXPECT_NO_THROW(basis_Q({4, 4, 5}));
    ::unsetenv("SEMIFORM_MAX_DIM");
    EXPECT_NO_THROW(basis_Q({4, 4, 6}));
}
