#ifndef SLP_CONSTRUCTIONS_HPP
#define SLP_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "slp/decomposition.hpp"
#include "slp/module.hpp"
#include "slp/monomial.hpp"
#include "slp/rank_table.hpp"
#include "slp/structure.hpp"

namespace slp {

/// Chain-level Clebsch-Gordan rule: the product of chains of lengths d and e
/// splits into min(d,e) chains of lengths d+e-1, d+e-3, ..., shifted inward
/// one step at a time. Shifts add. Total length d*e is asserted.
std::vector<CyclicSummand> cyclic_tensor(const CyclicSummand& a, const CyclicSummand& b);

/// Decomposition of the order-m truncated polynomial extension, summand by
/// summand via the Clebsch-Gordan rule.
CyclicDecomposition extension_decomposition(const CyclicDecomposition& decomposition, int m);

/// Bilinear expansion of a product decomposition over all summand pairs,
/// keeping the per-pair expansions for reporting.
struct TensorPlan {
    CyclicDecomposition left;
    CyclicDecomposition right;
    CyclicDecomposition result;

    struct PairExpansion {
        CyclicSummand left;
        CyclicSummand right;
        std::vector<CyclicSummand> terms;
    };
    std::vector<PairExpansion> pairs;
};

TensorPlan decomposition_tensor(const CyclicDecomposition& left, const CyclicDecomposition& right);

/// The ideal (x_1^{a_1}, ..., x_n^{a_n}); its quotient is a product of
/// truncated polynomial rings and always has the strong Lefschetz property in
/// characteristic zero.
MonomialIdeal monomial_ci(const std::vector<int>& exponents);

/// Tensor of two-variable quotients with symmetric Hilbert series: the
/// product keeps the strong Lefschetz property, witnessed by the sum of the
/// factor witnesses, and its Hilbert series stays symmetric.
struct SymmetricTensorVerdict {
    bool slp_holds = false;
    bool symmetric = false;
    std::vector<std::int64_t> witness;  // integer coefficients of the sum witness
    std::optional<HilbertSeries> series;
    SlpVerdict failure;  // failing cell when slp_holds is false
};

SymmetricTensorVerdict iterated_symmetric_tensor(const std::vector<MonomialIdeal>& ideals,
                                                 int witness_trials = 64,
                                                 std::uint64_t witness_seed = 20240601);

/// Strong Lefschetz check of a monomial quotient over F_p.
struct CharPVerdict {
    SlpVerdict verdict;
    RankTable table;
};

CharPVerdict char_p_slp(const MonomialIdeal& ideal, std::uint64_t p,
                        const std::vector<std::int64_t>& form_coefficients);

}  // namespace slp

#endif
