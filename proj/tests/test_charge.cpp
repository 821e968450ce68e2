#include "weylpq/charge.hpp"
#include "weylpq/verify.hpp"

#include <gtest/gtest.h>

using namespace weylpq;

namespace {

const BiPoly P = BiPoly::p(), Q = BiPoly::q();

long long total(const WeightMultiplicityMap& m) {
    long long s = 0;
    for (const auto& [w, c] : m) s += c;
    return s;
}

}  // namespace

TEST(Colored, A2Values) {
    DeformationContext ctx(parse_system("A2"), parse_levi("1", 2));
    EXPECT_EQ(n_pq(ctx, RootVector{1, 1}), BiPoly(2) + Q + BiPoly(2) * P + P * Q);
    EXPECT_EQ(r_pq(ctx, RootVector{1, 1}), P + P * Q);
    EXPECT_EQ(r_pq(ctx, RootVector{0, 0}), BiPoly::one());
    EXPECT_TRUE(r_pq(ctx, RootVector{-1, 1}).is_zero());
}

TEST(Colored, BruteForceAgreesWithEngines) {
    for (const auto& s : {"A2", "B2", "G2", "A3", "C3"}) {
        const RootSystem rs = parse_system(s);
        for (LeviMask m = 0; m <= full_levi(rs.rank()); ++m) {
            DeformationContext ctx(rs, m);
            for (const auto& beta : root_box(rs.rank(), rs.rank() <= 2 ? 6 : 4)) {
                ASSERT_EQ(colored_bruteforce(rs, ctx.parabolic_data(), beta, false), n_pq(ctx, beta)) << s << beta;
                ASSERT_EQ(r_pq_bruteforce(rs, ctx.parabolic_data(), beta), r_pq(ctx, beta)) << s << beta;
                ASSERT_EQ(shifted_zero_weight(ctx, beta), r_pq(ctx, beta)) << s << beta;
                ASSERT_EQ(n_pq(ctx, beta), shift_vars(ctx.pq()(beta))) << s << beta;
            }
        }
    }
}

TEST(Colored, BruteForceBound) {
    const RootSystem rs = parse_system("A2");
    EXPECT_THROW(colored_bruteforce(rs, parabolic(rs, 1u), RootVector{5, 5}, true, 8), CapExceeded);
}

TEST(Colored, ProductExpansion) {
    for (const auto& s : {"A2", "B2", "C3"}) {
        const RootSystem rs = parse_system(s);
        for (LeviMask m = 0; m <= full_levi(rs.rank()); ++m) {
            DeformationContext ctx(rs, m);
            EXPECT_TRUE(delta_series_check(ctx, 6)) << s << " " << m;
        }
    }
}

TEST(Freudenthal, DimensionsAndKnownMultiplicities) {
    const RootSystem a2 = parse_system("A2");
    auto adj = freudenthal(a2, Weight{1, 1});
    EXPECT_EQ(total(adj), 8);
    EXPECT_EQ(adj.at(Weight{0, 0}), 2);
    const RootSystem g2 = parse_system("G2");
    auto seven = freudenthal(g2, Weight{1, 0});
    EXPECT_EQ(total(seven), 7);
    EXPECT_EQ(seven.at(Weight{0, 0}), 1);
    EXPECT_EQ(total(freudenthal(g2, Weight{0, 1})), 14);
    EXPECT_EQ(freudenthal(g2, Weight{0, 1}).at(Weight{0, 0}), 2);
    const RootSystem f4 = parse_system("F4");
    EXPECT_EQ(total(freudenthal(f4, Weight{0, 0, 0, 1})), 26);
    EXPECT_EQ(freudenthal(f4, Weight{0, 0, 0, 1}).at(Weight{0, 0, 0, 0}), 2);
    const RootSystem d4 = parse_system("D4");
    EXPECT_EQ(freudenthal(d4, Weight{0, 1, 0, 0}).at(Weight{0, 0, 0, 0}), 4);
}

TEST(Freudenthal, SumsToWeylDimension) {
    for (const auto& s : {"A3", "B3", "C3", "D4", "G2"}) {
        const RootSystem rs = parse_system(s);
        for (const auto& nu : dominant_grid(rs.rank(), 2))
            EXPECT_EQ(Integer(total(freudenthal(rs, nu))), weyl_dimension(rs, nu)) << s << nu;
    }
}

TEST(Freudenthal, DimensionCap) {
    const RootSystem rs = parse_system("C3");
    EXPECT_THROW(freudenthal(rs, Weight{6, 6, 6}), CapExceeded);
    EXPECT_EQ(weyl_dimension(rs, Weight{1, 0, 0}), 6);
}

TEST(Crystal, ExampleCharges) {
    DeformationContext ctx(parse_system("A2"), parse_levi("1", 2));
    const Weight zero{0, 0};
    EXPECT_EQ(diagonal(chi(ctx, zero, zero)), BiPoly::one());
    EXPECT_EQ(diagonal(chi(ctx, Weight{2, -1}, zero)), Q);
    EXPECT_EQ(diagonal(chi(ctx, Weight{-1, 2}, zero)), Q);
    EXPECT_EQ(diagonal(chi(ctx, Weight{1, 1}, zero)), Q * Q + Q);
    EXPECT_TRUE(chi(ctx, Weight{-1, -1}, zero).is_zero());
}

TEST(Crystal, SumIdentityOnGrid) {
    for (const auto& s : {"A3", "B3", "C3", "G2"}) {
        const RootSystem rs = parse_system(s);
        for (LeviMask m = 0; m <= full_levi(rs.rank()); ++m) {
            DeformationContext ctx(rs, m);
            for (const auto& nu : dominant_grid(rs.rank(), 2)) {
                const auto weights = freudenthal(rs, nu);
                for (const auto& beta : root_box(rs.rank(), 4)) {
                    const Weight mu = nu - rs.to_weight(beta);
                    ASSERT_TRUE(crystal_sum_check(ctx, weights, nu, mu).all()) << s << " " << m << nu << mu;
                }
            }
        }
    }
}
