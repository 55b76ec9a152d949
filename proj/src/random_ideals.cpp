#include "slp/random_ideals.hpp"

namespace slp {

int quotient_socle_degree(const MonomialIdeal& ideal) {
    return static_cast<int>(quotient_basis(ideal).size()) - 1;
}

MonomialIdeal random_artinian_ideal(std::mt19937_64& rng, const RandomIdealParams& params) {
    auto draw = [&](int lo, int hi) {  // inclusive, avoids distribution portability issues
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    int n = draw(1, params.max_vars);
    while (true) {
        std::vector<Monomial> generators;
        std::vector<int> pure(n);
        for (int v = 0; v < n; ++v) {
            pure[v] = draw(1, params.max_socle + 1);
            Monomial g;
            g.exponents.assign(n, 0);
            g.exponents[v] = pure[v];
            generators.push_back(std::move(g));
        }
        int extras = draw(0, params.max_extra_generators);
        for (int e = 0; e < extras; ++e) {
            Monomial g;
            g.exponents.assign(n, 0);
            int degree = 0;
            for (int v = 0; v < n; ++v) {
                g.exponents[v] = draw(0, std::max(0, pure[v] - 1));
                degree += g.exponents[v];
            }
            if (degree >= 1)
                generators.push_back(std::move(g));
        }
        MonomialIdeal ideal(n, std::move(generators));
        if (quotient_socle_degree(ideal) <= params.max_socle)
            return ideal;
    }
}

}  // namespace slp
