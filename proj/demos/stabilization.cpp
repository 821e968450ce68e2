/**
 * @file stabilization.cpp
 * @brief Watches K_{nu+k rho_diamond, mu+k rho_diamond} settle onto its stable value.
 *
 * Usage: demo_stabilization [SYSTEM] [LEVI] [NU] [MU]
 * e.g.   demo_stabilization C2 1 2,0 0,-1
 */

#include "weylpq/cli.hpp"
#include "weylpq/stable.hpp"

#include <iostream>

using namespace weylpq;

int main(int argc, char** argv) {
    const RootSystem rs = parse_system(argc > 1 ? argv[1] : "C2");
    DeformationContext ctx(rs, parse_levi(argc > 2 ? argv[2] : "1", rs.rank()));
    const Weight nu(cli::parse_weight(argc > 3 ? argv[3] : "2,0"));
    const Weight mu(cli::parse_weight(argc > 4 ? argv[4] : "0,-1"));
    const Weight d = ctx.parabolic_data().rho_diamond;

    if (auto c = hypothesis_h_check(rs, ctx.parabolic_data()))
        std::cout << "complement pairing constant c = " << cli::rational_str(*c) << "\n";
    else
        std::cout << "no constant complement pairing\n";

    const StabilizationResult st = kpq_stab(ctx, nu, mu);
    for (int k = 0; k <= st.k_stable + 2; ++k)
        std::cout << "k=" << k << "  " << kpq(ctx, nu + k * d, mu + k * d) << "\n";
    std::cout << "stable from k=" << st.k_stable << ": " << st.value << "\n";
    if (is_levi_dominant(ctx.parabolic_data(), mu) && hypothesis_h_check(rs, ctx.parabolic_data()))
        std::cout << "factorization " << (factorization_check(ctx, nu, mu) ? "holds" : "fails") << "\n";
}
