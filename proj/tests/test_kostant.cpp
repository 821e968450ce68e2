#include "weylpq/context.hpp"
#include "weylpq/kostant.hpp"
#include "weylpq/verify.hpp"

#include <gtest/gtest.h>

using namespace weylpq;

namespace {

/// Recursive enumeration of multisets of roots, with no memoization.
BiPoly brute_partitions(const std::vector<TaggedRoot>& roots, std::size_t i, const RootVector& rest) {
    if (rest.is_zero()) return BiPoly::one();
    if (i == roots.size() || !rest.nonnegative()) return {};
    BiPoly total;
    RootVector r = rest;
    BiPoly factor = BiPoly::one();
    const BiPoly v = roots[i].var == Var::P ? BiPoly::p() : BiPoly::q();
    while (r.nonnegative()) {
        total += factor * brute_partitions(roots, i + 1, r);
        r = r - roots[i].root;
        factor = factor * v;
    }
    return total;
}

}  // namespace

TEST(Kostant, TrivialValues) {
    const RootSystem rs = parse_system("B3");
    KostantEngine e = make_pq_engine(rs, parabolic(rs, parse_levi("2,3", 3)));
    EXPECT_EQ(e(rs.zero_root()), BiPoly::one());
    EXPECT_TRUE(e(RootVector{-1, 0, 0}).is_zero());
    EXPECT_TRUE(e(RootVector{1, -1, 2}).is_zero());
}

TEST(Kostant, A2WithLeviOne) {
    const RootSystem rs = parse_system("A2");
    KostantEngine e = make_pq_engine(rs, parabolic(rs, 1u));
    EXPECT_EQ(e(RootVector{1, 1}), BiPoly::p() + BiPoly::p() * BiPoly::q());
    EXPECT_EQ(e(RootVector{1, 0}), BiPoly::q());
    EXPECT_EQ(e(RootVector{2, 0}), BiPoly::q().pow(2));
}

TEST(Kostant, MatchesBruteForceEnumeration) {
    for (const auto& s : {"A2", "B2", "G2", "A3", "C3", "B3"}) {
        const RootSystem rs = parse_system(s);
        for (LeviMask m = 0; m <= full_levi(rs.rank()); ++m) {
            const ParabolicData par = parabolic(rs, m);
            KostantEngine e = make_pq_engine(rs, par);
            const auto roots = tagged_roots(rs, par);
            for (const auto& beta : root_box(rs.rank(), rs.rank() <= 2 ? 6 : 4))
                ASSERT_EQ(e(beta), brute_partitions(roots, 0, beta)) << s << " levi " << m << " beta " << beta;
        }
    }
}

TEST(Kostant, UnweightedCountsAtOne) {
    const RootSystem rs = parse_system("A2");
    KostantEngine e = make_pq_engine(rs, parabolic(rs, 0u));
    // ordinary Kostant partition function of A2: P(a a1 + b a2) = min(a,b) + 1
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b)
            EXPECT_EQ(specialize(e(RootVector{a, b}), 1, 1).coeff(0, 0), std::min(a, b) + 1);
}

TEST(Kostant, CauchyConvolution) {
    for (const auto& s : {"A3", "C3", "D4", "G2"}) {
        const RootSystem rs = parse_system(s);
        for (LeviMask m = 0; m <= full_levi(rs.rank()); ++m) {
            const ParabolicData par = parabolic(rs, m);
            KostantEngine pq = make_pq_engine(rs, par), hat = make_hat_engine(rs, par), bar = make_bar_engine(rs, par);
            for (const auto& beta : root_box(rs.rank(), 4)) ASSERT_TRUE(cauchy_check(pq, hat, bar, beta)) << s;
        }
    }
}

TEST(Kostant, ShiftedEngineIsShiftOfPq) {
    const RootSystem rs = parse_system("C3");
    DeformationContext ctx(rs, parse_levi("1,2", 3));
    for (const auto& beta : root_box(3, 5)) EXPECT_EQ(ctx.colored_n()(beta), shift_vars(ctx.pq()(beta)));
}

TEST(Kostant, SingleVariableIsDiagonal) {
    const RootSystem rs = parse_system("B3");
    DeformationContext ctx(rs, parse_levi("1", 3));
    for (const auto& beta : root_box(3, 5)) EXPECT_EQ(ctx.single_variable()(beta), diagonal(ctx.pq()(beta)));
}

TEST(Kostant, RepeatedQueriesHitTheMemo) {
    const RootSystem rs = parse_system("A3");
    KostantEngine e = make_pq_engine(rs, parabolic(rs, 0u));
    const BiPoly first = e(RootVector{3, 3, 3});
    const auto n = e.memo_size();
    EXPECT_EQ(e(RootVector{3, 3, 3}), first);
    EXPECT_EQ(e.memo_size(), n);
}
