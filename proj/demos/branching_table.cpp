/**
 * @file branching_table.cpp
 * @brief Prints K_{nu,mu}(p,q) next to its Levi decomposition for one system.
 *
 * Usage: demo_branching_table [SYSTEM] [LEVI] [LEVEL]
 * e.g.   demo_branching_table C3 1,2 2
 */

#include "weylpq/lusztig.hpp"
#include "weylpq/verify.hpp"

#include <iostream>

using namespace weylpq;

int main(int argc, char** argv) {
    const std::string sys = argc > 1 ? argv[1] : "C3";
    const std::string levi = argc > 2 ? argv[2] : "1,2";
    const int level = argc > 3 ? std::stoi(argv[3]) : 1;

    const RootSystem rs = parse_system(sys);
    DeformationContext ctx(rs, parse_levi(levi, rs.rank()));
    std::cout << rs.name() << " with Levi {" << levi << "}\n";
    for (const auto& nu : dominant_grid(rs.rank(), level)) {
        for (const auto& mu : dominant_weights_below(rs, nu)) {
            const BiPoly k = kpq(ctx, nu, mu);
            std::cout << "K_{" << nu << "," << mu << "} = " << k << "\n";
            for (const auto& kappa : enumerate_levi_highest_weights(ctx, nu, mu)) {
                const BiPoly b = branching_poly(ctx, nu, kappa);
                const BiPoly kb = parabolic_lusztig(ctx, kappa, mu);
                if (b.is_zero() || kb.is_zero()) continue;
                std::cout << "    kappa=" << kappa << "  b=" << b << "  Kbar=" << kb << "\n";
            }
            std::cout << "    decomposition " << (decomposition_check(ctx, nu, mu) ? "ok" : "MISMATCH") << "\n";
        }
    }
}
