#include "weylpq/rootsys.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace weylpq;

namespace {

const std::vector<std::string> kSystems{"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2", "F4"};

}  // namespace

TEST(RootSystem, PositiveRootCountsAndWeylOrders) {
    struct Row {
        const char* name;
        std::size_t roots;
        long long order;
    };
    const Row rows[] = {{"A1", 1, 2},  {"A2", 3, 6},   {"A3", 6, 24},  {"B2", 4, 8},   {"B3", 9, 48},
                        {"C2", 4, 8},  {"C3", 9, 48},  {"D4", 12, 192}, {"G2", 6, 12}, {"F4", 24, 1152},
                        {"E6", 36, 51840}};
    for (const auto& r : rows) {
        const RootSystem rs = parse_system(r.name);
        EXPECT_EQ(rs.positive_roots().size(), r.roots) << r.name;
        EXPECT_EQ(rs.weyl_order(), r.order) << r.name;
    }
}

TEST(RootSystem, CartanConventionIsBourbaki) {
    const RootSystem b2 = parse_system("B2");
    EXPECT_EQ(b2.cartan()(0, 1), -1);
    EXPECT_EQ(b2.cartan()(1, 0), -2);
    const RootSystem c2 = parse_system("C2");
    EXPECT_EQ(c2.cartan()(0, 1), -2);
    EXPECT_EQ(c2.cartan()(1, 0), -1);
    const RootSystem g2 = parse_system("G2");
    EXPECT_EQ(g2.cartan()(0, 1), -3);
}

TEST(RootSystem, HighestRootsMatchTables) {
    const std::vector<std::pair<const char*, std::vector<int>>> rows{
        {"A3", {1, 1, 1}}, {"B3", {1, 2, 2}}, {"C3", {2, 2, 1}},      {"D4", {1, 2, 1, 1}},
        {"G2", {3, 2}},    {"F4", {2, 3, 4, 2}}, {"B2", {1, 2}}, {"C2", {2, 1}}};
    for (const auto& [name, top] : rows) {
        const RootSystem rs = parse_system(name);
        RootVector best = rs.positive_roots().front();
        for (const auto& r : rs.positive_roots())
            if (r.sum() > best.sum()) best = r;
        EXPECT_EQ(best.to_vector(), top) << name;
    }
}

TEST(RootSystem, WeightRootConversionRoundTrips) {
    for (const auto& s : kSystems) {
        const RootSystem rs = parse_system(s);
        for (const auto& r : rs.positive_roots()) {
            auto back = rs.to_root_coords(rs.to_weight(r));
            ASSERT_TRUE(back.has_value());
            EXPECT_EQ(*back, r) << s;
        }
        EXPECT_TRUE(rs.is_dominant(rs.rho()));
    }
    const RootSystem a2 = parse_system("A2");
    EXPECT_FALSE(a2.to_root_coords(Weight{1, 0}).has_value());
}

TEST(RootSystem, WeylGroupEnumeration) {
    for (const auto& s : kSystems) {
        const RootSystem rs = parse_system(s);
        const auto w = weyl_group(rs);
        ASSERT_EQ(static_cast<long long>(w.size()), rs.weyl_order()) << s;
        EXPECT_EQ(w.front().length, 0);
        long long signs = 0;
        std::set<Weight> orbit;
        for (const auto& g : w) {
            signs += g.sign;
            orbit.insert(act(g, rs.rho()));
        }
        EXPECT_EQ(signs, 0) << s;
        EXPECT_EQ(static_cast<long long>(orbit.size()), rs.weyl_order()) << s;
        EXPECT_TRUE(orbit.count(-rs.rho())) << s;
    }
}

TEST(RootSystem, WeylActionPreservesForm) {
    for (const auto& s : {"B3", "G2", "C3"}) {
        const RootSystem rs = parse_system(s);
        const Weight a{1, 0, 2}, b{0, 3, 1};
        const Weight x = s == std::string("G2") ? Weight{1, 2} : a;
        const Weight y = s == std::string("G2") ? Weight{3, 1} : b;
        for (const auto& g : weyl_group(rs))
            EXPECT_EQ(rs.scaled_weight_form(act(g, x), act(g, y)), rs.scaled_weight_form(x, y));
    }
}

TEST(RootSystem, ReflectionsNegateSimpleRoots) {
    for (const auto& s : kSystems) {
        const RootSystem rs = parse_system(s);
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            const RootVector a = RootVector::unit(rs.rank(), i);
            EXPECT_EQ(rs.reflect(a, i), -a);
            EXPECT_EQ(rs.to_weight(a)[i], 2);
        }
    }
}

TEST(RootSystem, DominantConjugate) {
    const RootSystem a2 = parse_system("A2");
    EXPECT_EQ(dominant_conjugate(a2, Weight{-1, 0}), (Weight{0, 1}));
    EXPECT_EQ(dominant_conjugate(a2, Weight{2, -1}), (Weight{1, 1}));
    const auto dc = dominant_conjugate(a2, Weight{-1, 0}, 1u);
    EXPECT_EQ(dc.weight, (Weight{1, -1}));
    EXPECT_EQ(dc.sign, -1);
}

TEST(Parabolic, ComplementAndRhoSplit) {
    const RootSystem c3 = parse_system("C3");
    const ParabolicData par = parabolic(c3, parse_levi("1,2", 3));
    EXPECT_EQ(par.levi_positive_roots.size(), 3u);
    EXPECT_EQ(par.complement_roots.size(), 6u);
    EXPECT_EQ(par.levi_weyl.size(), 6u);
    EXPECT_EQ(par.rho_bar, (Weight{1, 1, 0}));
    EXPECT_EQ(par.rho_diamond, (Weight{0, 0, 1}));
    EXPECT_EQ(par.rho_bar + par.rho_diamond, c3.rho());
    auto [bar, dia] = decompose_diamond(par, Weight{2, -1, 3});
    EXPECT_EQ(bar, (Weight{2, -1, 0}));
    EXPECT_EQ(dia, (Weight{0, 0, 3}));
    EXPECT_FALSE(is_levi_dominant(par, Weight{2, -1, 3}));
    EXPECT_TRUE(is_levi_dominant(par, Weight{2, 1, -3}));
}

TEST(Parabolic, ComplementStabilityOnEveryLevi) {
    for (const auto& s : kSystems) {
        const RootSystem rs = parse_system(s);
        for (LeviMask m = 0; m <= full_levi(rs.rank()); ++m)
            EXPECT_TRUE(check_complement_stability(parabolic(rs, m))) << s << " " << m;
    }
}

TEST(Parabolic, LeviParsing) {
    EXPECT_EQ(parse_levi("", 3), 0u);
    EXPECT_EQ(parse_levi("1,3", 3), 5u);
    EXPECT_EQ(levi_to_string(5u, 3), "1,3");
    EXPECT_THROW(parse_levi("4", 3), PreconditionError);
    EXPECT_THROW(parse_levi("x", 3), PreconditionError);
}

TEST(RootSystem, RejectsBadDescriptors) {
    EXPECT_THROW(parse_system("Z3"), PreconditionError);
    EXPECT_THROW(parse_system("A"), PreconditionError);
    EXPECT_THROW(parse_system("B1"), PreconditionError);
    EXPECT_THROW(weyl_group(parse_system("E7")), CapExceeded);
    EXPECT_THROW(weyl_group(parse_system("F4"), 100), CapExceeded);
}
