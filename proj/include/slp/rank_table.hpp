#ifndef SLP_RANK_TABLE_HPP
#define SLP_RANK_TABLE_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <type_traits>
#include <vector>

#include "slp/decomposition.hpp"
#include "slp/module.hpp"

namespace slp {

/// Exact ranks r[d][a] of l^a : M_d -> M_{d+a} for 0 <= d <= p and
/// 0 <= a <= p+1, with r[d][0] = dim M_d. Cells whose target degree exceeds p
/// are 0 since the target space is zero.
struct RankTable {
    int p = 0;
    std::vector<int> dims;
    std::vector<std::vector<int>> r;

    int rank(int d, int a) const {
        if (d < 0)
            return 0;
        if (a > p + 1)
            return 0;
        return r[d][a];
    }

    int dim(int d) const { return d >= 0 && d <= p ? dims[d] : 0; }
};

struct SlpVerdict {
    bool holds = true;
    int a = -1;  // failing power, lexicographically first (a, then d)
    int d = -1;  // failing source degree
};

/// Lazily computes ranks of iterated multiplication maps, memoizing the
/// running compositions per starting degree.
///
/// Over the rationals each cell is first computed modulo a 61-bit prime.
/// That value is a lower bound on the exact rank; when it meets an exact
/// upper bound (full rank, or the min of already-certified neighbours via
/// rank(AB) <= min(rank A, rank B)), the cell is certified exact. Otherwise
/// the cell falls back to fraction-free elimination on the exact
/// composition. Over a prime field everything runs directly in F_p.
template <typename K>
class PowerRankEngine {
public:
    PowerRankEngine(const GradedModule<K>& module, const LinearForm<K>& form) : module_(&module) {
        p_ = module.socle_degree();
        steps_.reserve(p_);
        for (int d = 0; d < p_; ++d)
            steps_.push_back(mult_matrix(module, form, d));

        ranks_.resize(p_ + 1);
        for (int d = 0; d <= p_; ++d)
            ranks_[d].push_back(module.dim(d));  // a = 0

        if constexpr (std::is_same_v<K, Rational>) {
            fast_ = true;
            step61_.reserve(p_);
            for (int d = 0; d < p_ && fast_; ++d) {
                auto reduced = modp::reduce(steps_[d]);
                if (!reduced)
                    fast_ = false;
                else
                    step61_.push_back(std::move(*reduced));
            }
            if (fast_)
                comp61_.resize(p_ + 1);
        }
        compx_.resize(p_ + 1);
        compx_a_.assign(p_ + 1, 0);
    }

    int p() const { return p_; }
    int dim(int d) const { return module_->dim(d); }

    /// Exact rank of l^a : M_d -> M_{d+a}; requires 0 <= d <= p, a >= 0.
    int rank(int d, int a) {
        require(d >= 0 && d <= p_ && a >= 0, ErrorKind::DegreeOutOfRange, "rank cell out of range");
        if (d + a > p_)
            return 0;
        while (static_cast<int>(ranks_[d].size()) <= a)
            compute_next_cell(d);
        return ranks_[d][a];
    }

    RankTable table() {
        RankTable t;
        t.p = p_;
        t.dims.resize(p_ + 1);
        for (int d = 0; d <= p_; ++d)
            t.dims[d] = module_->dim(d);
        t.r.assign(p_ + 1, std::vector<int>(p_ + 2, 0));
        for (int d = 0; d <= p_; ++d)
            for (int a = 0; a <= p_ + 1; ++a)
                t.r[d][a] = d + a > p_ ? (a == 0 ? module_->dim(d) : 0) : rank(d, a);
        return t;
    }

private:
    void compute_next_cell(int d) {
        int a = static_cast<int>(ranks_[d].size());  // next exponent to compute
        // exact upper bound: a composition ranks at most each factor
        int upper = std::min(ranks_[d][a - 1], dim(d + a));
        if (a > 1)
            upper = std::min(upper, rank(d + a - 1, 1));
        int value;
        if constexpr (std::is_same_v<K, Rational>) {
            if (fast_) {
                comp61_[d] = a == 1 ? step61_[d] : modp::mat_mul(step61_[d + a - 1], comp61_[d]);
                int lower = modp::rank(comp61_[d]);
                value = lower == upper ? lower : exact_cell_rank(d, a);
            } else {
                value = exact_cell_rank(d, a);
            }
        } else {
            advance_exact(d, a);
            value = exact_rank(compx_[d]);
        }
        ranks_[d].push_back(value);
    }

    int exact_cell_rank(int d, int a) {
        advance_exact(d, a);
        return exact_rank(compx_[d]);
    }

    void advance_exact(int d, int a) {
        while (compx_a_[d] < a) {
            int cur = compx_a_[d];
            compx_[d] = cur == 0 ? steps_[d] : steps_[d + cur] * compx_[d];
            ++compx_a_[d];
        }
    }

    const GradedModule<K>* module_;
    int p_ = 0;
    std::vector<Matrix<K>> steps_;
    std::vector<std::vector<int>> ranks_;

    bool fast_ = false;
    std::vector<modp::Mat64> step61_;
    std::vector<modp::Mat64> comp61_;

    std::vector<Matrix<K>> compx_;
    std::vector<int> compx_a_;
};

template <typename K>
RankTable rank_table(const GradedModule<K>& module, const LinearForm<K>& form) {
    PowerRankEngine<K> engine(module, form);
    return engine.table();
}

/// SLP holds when every power map between nonzero pieces has full rank.
/// Scans cells in lexicographic (a, d) order and stops at the first failure.
template <typename K>
SlpVerdict slp_check(PowerRankEngine<K>& engine) {
    int p = engine.p();
    for (int a = 1; a <= p; ++a)
        for (int d = 0; d + a <= p; ++d)
            if (engine.rank(d, a) != std::min(engine.dim(d), engine.dim(d + a)))
                return {false, a, d};
    return {};
}

template <typename K>
SlpVerdict slp_check(const GradedModule<K>& module, const LinearForm<K>& form) {
    PowerRankEngine<K> engine(module, form);
    return slp_check(engine);
}

SlpVerdict slp_verdict_from_table(const RankTable& table);

/// Weak Lefschetz: only the one-step maps need full rank.
template <typename K>
bool wlp_check(const GradedModule<K>& module, const LinearForm<K>& form) {
    PowerRankEngine<K> engine(module, form);
    for (int d = 0; d + 1 <= engine.p(); ++d)
        if (engine.rank(d, 1) != std::min(engine.dim(d), engine.dim(d + 1)))
            return false;
    return true;
}

/// Graded Jordan-type bookkeeping: the multiplicity of the summand starting
/// at degree i with length d falls out of the rank table as a double
/// difference. Verified against the Hilbert series before returning.
CyclicDecomposition decomposition_from_table(const RankTable& table);

template <typename K>
CyclicDecomposition cyclic_decomposition(const GradedModule<K>& module, const LinearForm<K>& form) {
    return decomposition_from_table(rank_table(module, form));
}

/// Result of a randomized witness search. A missing witness is evidence from
/// the sampled forms only, never a proof that no strong Lefschetz element
/// exists.
template <typename K>
struct WitnessSearch {
    std::optional<LinearForm<K>> witness;
    int trials_used = 0;
    std::optional<LinearForm<K>> best_form;  // failing form with the largest rank total
    SlpVerdict best_failure;
    long best_rank_total = -1;
};

/// Tries the all-ones form, then seeded uniform integer coefficient vectors
/// in [-bound, bound], returning the first strong Lefschetz witness.
template <typename K>
WitnessSearch<K> find_slp_element(const GradedModule<K>& module, int trials, std::uint64_t seed,
                                  int bound = 5) {
    require(trials >= 1, ErrorKind::ShapeMismatch, "witness search needs at least one trial");
    require(bound >= 1, ErrorKind::ShapeMismatch, "coefficient bound must be positive");
    WitnessSearch<K> report;
    std::mt19937_64 rng(seed);

    auto draw_form = [&](int trial) -> LinearForm<K> {
        if (trial == 0)
            return all_ones_form<K>(module.field(), module.num_vars());
        while (true) {
            std::vector<std::int64_t> coeffs(module.num_vars());
            for (auto& c : coeffs)
                c = static_cast<std::int64_t>(rng() % (2 * bound + 1)) - bound;
            bool all_zero = true;
            for (std::int64_t c : coeffs)
                if (c != 0)
                    all_zero = false;
            if (all_zero)
                continue;
            try {
                return form_from_ints<K>(module.field(), coeffs);
            } catch (const Error&) {
                continue;  // nonzero integers may still vanish mod p
            }
        }
    };

    for (int trial = 0; trial < trials; ++trial) {
        LinearForm<K> candidate = draw_form(trial);
        ++report.trials_used;
        PowerRankEngine<K> engine(module, candidate);
        RankTable table = engine.table();
        SlpVerdict verdict = slp_verdict_from_table(table);
        if (verdict.holds) {
            report.witness = candidate;
            return report;
        }
        long total = 0;
        for (int d = 0; d <= table.p; ++d)
            for (int a = 1; a <= table.p - d; ++a)
                total += table.r[d][a];
        if (total > report.best_rank_total) {
            report.best_rank_total = total;
            report.best_form = candidate;
            report.best_failure = verdict;
        }
    }
    return report;
}

}  // namespace slp

#endif
