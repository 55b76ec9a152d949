#ifndef SLP_RANDOM_IDEALS_HPP
#define SLP_RANDOM_IDEALS_HPP

#include <cstdint>
#include <random>

#include "slp/monomial.hpp"

namespace slp {

/// Seeded generator of random Artinian monomial ideals. Artinian-ness is
/// guaranteed by always including a pure power of each variable; the socle
/// degree bound is enforced by rejection. Deterministic for a given engine
/// state.
struct RandomIdealParams {
    int max_vars = 3;
    int max_socle = 8;
    int max_extra_generators = 3;
};

MonomialIdeal random_artinian_ideal(std::mt19937_64& rng, const RandomIdealParams& params);

/// Socle degree of the quotient (largest degree with a standard monomial).
int quotient_socle_degree(const MonomialIdeal& ideal);

}  // namespace slp

#endif
