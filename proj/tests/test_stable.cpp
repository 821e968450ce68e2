#include "weylpq/stable.hpp"
#include "weylpq/verify.hpp"

#include <gtest/gtest.h>

using namespace weylpq;

namespace {

std::optional<Rational> constant_for(const char* sys, const char* levi) {
    const RootSystem rs = parse_system(sys);
    return hypothesis_h_check(rs, parabolic(rs, parse_levi(levi, rs.rank())));
}

}  // namespace

TEST(HypothesisH, ConstantsForTypeALevis) {
    EXPECT_EQ(constant_for("C2", "1"), Rational(2));
    EXPECT_EQ(constant_for("C3", "1,2"), Rational(2));
    EXPECT_EQ(constant_for("D4", "1,2,3"), Rational(1));
    EXPECT_EQ(constant_for("D4", "2,3,4"), Rational(1));
    EXPECT_EQ(constant_for("B3", "2,3"), Rational(1));
    EXPECT_EQ(constant_for("A3", "1,3"), Rational(1));
    EXPECT_FALSE(constant_for("B3", "1,2").has_value());
    EXPECT_FALSE(constant_for("A2", "1,2").has_value());
}

TEST(HypothesisH, LStatistic) {
    const RootSystem rs = parse_system("C2");
    const ParabolicData par = parabolic(rs, 1u);
    EXPECT_EQ(l_statistic(rs, par, RootVector{0, 1}), 1);
    EXPECT_EQ(l_statistic(rs, par, RootVector{2, 1}), 1);
    EXPECT_EQ(l_statistic(rs, par, RootVector{2, 2}), 2);
    const RootSystem b3 = parse_system("B3");
    EXPECT_THROW(l_statistic(b3, parabolic(b3, parse_levi("1,2", 3)), RootVector{0, 0, 1}), PreconditionError);
}

TEST(Stabilization, ClosedFormMatchesDirectComputationFarOut) {
    DeformationContext ctx(parse_system("C3"), parse_levi("1,2", 3));
    const Weight d = ctx.parabolic_data().rho_diamond;
    for (const auto& nu : dominant_grid(3, 2))
        for (const auto& beta : root_box(3, 3)) {
            const Weight mu = nu - ctx.system().to_weight(beta);
            const BiPoly far = kpq(ctx, nu + 12 * d, mu + 12 * d);
            EXPECT_EQ(far, kpq_stable_closed_form(ctx, nu, mu)) << nu << mu;
        }
}

TEST(Stabilization, ConvergesWithinCap) {
    for (const auto& [sys, levi] : std::vector<std::pair<const char*, const char*>>{
             {"C2", "1"}, {"C3", "1,2"}, {"B3", "1,2"}, {"D4", "1,2,3"}, {"B3", "2,3"}}) {
        const RootSystem rs = parse_system(sys);
        DeformationContext ctx(rs, parse_levi(levi, rs.rank()));
        for (const auto& nu : dominant_grid(rs.rank(), 2))
            for (const auto& beta : root_box(rs.rank(), 3)) {
                const Weight mu = nu - rs.to_weight(beta);
                const StabilizationResult st = kpq_stab(ctx, nu, mu);
                EXPECT_LE(st.k_stable, kDefaultStabilizationCap);
                EXPECT_EQ(st.value, st.closed_form);
                EXPECT_EQ(st.step_ms.size(), static_cast<std::size_t>(st.k_stable + 2));
            }
    }
}

TEST(Stabilization, CapExceededBelowTheStableIndex) {
    const RootSystem rs = parse_system("C2");
    DeformationContext ctx(rs, 1u);
    int found = 0;
    for (const auto& nu : dominant_grid(2, 2))
        for (const auto& beta : root_box(2, 4)) {
            const Weight mu = nu - rs.to_weight(beta);
            const int k = kpq_stab(ctx, nu, mu).k_stable;
            if (k == 0) continue;
            ++found;
            EXPECT_THROW(kpq_stab(ctx, nu, mu, k - 1), CapExceeded);
            EXPECT_EQ(kpq_stab(ctx, nu, mu, k).k_stable, k);
        }
    EXPECT_GT(found, 0);
}

TEST(Stabilization, RejectsMuNotBelowNu) {
    DeformationContext ctx(parse_system("C2"), 1u);
    EXPECT_THROW(kpq_stab(ctx, Weight{0, 1}, Weight{1, 1}), PreconditionError);
}

TEST(Factorization, HoldsForLeviDominantMu) {
    for (const auto& [sys, levi] : std::vector<std::pair<const char*, const char*>>{
             {"C2", "1"}, {"C3", "1,2"}, {"D4", "1,2,3"}, {"B3", "2,3"}}) {
        const RootSystem rs = parse_system(sys);
        DeformationContext ctx(rs, parse_levi(levi, rs.rank()));
        for (const auto& nu : dominant_grid(rs.rank(), 2))
            for (const auto& beta : root_box(rs.rank(), 3)) {
                const Weight mu = nu - rs.to_weight(beta);
                if (!is_levi_dominant(ctx.parabolic_data(), mu)) continue;
                EXPECT_TRUE(factorization_check(ctx, nu, mu)) << sys << nu << mu;
            }
    }
}

TEST(Factorization, SinglePowerOfP) {
    DeformationContext ctx(parse_system("C3"), parse_levi("1,2", 3));
    for (const auto& gamma : root_box(3, 6))
        EXPECT_TRUE(single_power_check(ctx, gamma, ctx.parabolic_data().rho_diamond)) << gamma;
}

TEST(Stabilization, WitnessOnEveryLevi) {
    for (const auto& s : {"A3", "B3", "C3", "G2"}) {
        const RootSystem rs = parse_system(s);
        for (LeviMask m = 0; m <= full_levi(rs.rank()); ++m) {
            DeformationContext ctx(rs, m);
            EXPECT_TRUE(stabilizer_witness_check(ctx)) << s << " " << m;
        }
    }
}

TEST(DeltaStabilization, LeviFromZeroCoordinates) {
    const RootSystem rs = parse_system("C3");
    const DeltaStabilization d = delta_stab(rs, Weight{0, 0, 1}, Weight{1, 0, 1}, Weight{0, 0, 0});
    EXPECT_EQ(d.levi, parse_levi("1,2", 3));
    EXPECT_EQ(d.h2_constant, Rational(2));
    ASSERT_TRUE(d.factorization_ok.has_value());
    EXPECT_TRUE(*d.factorization_ok);
    DeformationContext ctx(rs, d.levi);
    EXPECT_EQ(d.result.value, kpq_stab(ctx, Weight{1, 0, 1}, Weight{0, 0, 0}).value);
    EXPECT_THROW(delta_stab(rs, Weight{0, -1, 1}, Weight{1, 0, 1}, Weight{0, 0, 0}), PreconditionError);
}
