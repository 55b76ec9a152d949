#ifndef SLP_STRUCTURE_HPP
#define SLP_STRUCTURE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "slp/decomposition.hpp"
#include "slp/hilbert.hpp"
#include "slp/rank_table.hpp"

namespace slp {

enum class ClassHChain { FirstChain, SecondChain, Both, Neither };

/// Membership in the class of Hilbert series closed under all truncated
/// polynomial extensions: one of two interleaving inequality chains must hold
/// at every index 1 <= i <= floor(p/2).
struct ClassHVerdict {
    bool member = false;
    ClassHChain chain = ClassHChain::Neither;
    // first index where each chain breaks, when it breaks
    std::optional<int> first_chain_violation;
    std::optional<int> second_chain_violation;

    /// Smallest index at which some chain has failed; set only when Neither.
    std::optional<int> violating_index;
};

/// First chain:  h_{i-1} <= h_{p-i} <= h_i for all i in range.
/// Second chain: h_{p-i+1} <= h_i <= h_{p-i} for all i in range.
/// An empty range (p <= 1) counts as membership with chain = Both.
ClassHVerdict class_h_membership(const HilbertSeries& series);

bool is_symmetric(const HilbertSeries& series);

struct AlmostCenteredVerdict {
    bool almost_centered = true;
    // pair with maximal center spread when the condition fails
    std::optional<std::pair<CyclicSummand, CyclicSummand>> witness;
};

/// Almost centered: every comparable pair has start/end gaps differing by at
/// most one; since gap difference equals the center difference, this is a
/// spread condition on the centers length + 2*shift. Requires a totally
/// ordered decomposition.
AlmostCenteredVerdict is_almost_centered(const CyclicDecomposition& decomposition);

/// Multiset of summand centers, with the window check p <= center <= p+2
/// that holds whenever all extensions keep the strong Lefschetz property.
struct CenterProfile {
    std::vector<int> centers;  // sorted ascending
    int min_center = 0;
    int max_center = 0;
    int socle_degree = 0;
    bool within_window = false;  // all centers within [p, p+2]
};

CenterProfile center_profile(const CyclicDecomposition& decomposition);

/// Witness summand explaining a strict Hilbert inequality h_i < h_j for a
/// strong Lefschetz pair: a summand supporting degree j but not degree i.
/// Returns nullopt exactly when h_i >= h_j.
template <typename K>
std::optional<CyclicSummand> pickalpha_witness(const GradedModule<K>& module,
                                               const LinearForm<K>& form, int i, int j) {
    int p = module.socle_degree();
    require(i >= 0 && i <= p && j >= 0 && j <= p, ErrorKind::DegreeOutOfRange,
            "indices must lie in 0..socle degree");
    PowerRankEngine<K> engine(module, form);
    RankTable table = engine.table();
    require(slp_verdict_from_table(table).holds, ErrorKind::NotSLP,
            "form is not a strong Lefschetz element");
    if (table.dim(i) >= table.dim(j))
        return std::nullopt;
    CyclicDecomposition decomposition = decomposition_from_table(table);
    for (const CyclicSummand& s : decomposition.summands()) {
        if (i < j && s.start() > i && s.end() >= j)
            return s;
        if (j < i && s.start() <= j && s.end() < i)
            return s;
    }
    fail(ErrorKind::InternalInconsistency,
         "h_i < h_j for an SLP pair but no summand separates degrees " + std::to_string(i) +
             " and " + std::to_string(j));
}

/// Smallest m in 1..m_max whose truncated polynomial extension loses the
/// strong Lefschetz property under the extended form; nullopt when all pass.
/// The default bound p+2 is large enough for every failure the theory
/// produces; the harness cross-checks this empirically.
template <typename K>
std::optional<int> minimal_failing_m(const GradedModule<K>& module, const LinearForm<K>& form,
                                     std::optional<int> m_max = std::nullopt) {
    require(slp_check(module, form).holds, ErrorKind::NotSLP,
            "form is not a strong Lefschetz element");
    int bound = m_max.value_or(module.socle_degree() + 2);
    for (int m = 1; m <= bound; ++m) {
        GradedModule<K> extension = extend_module(module, m);
        if (!slp_check(extension, extended_form(module, form)).holds)
            return m;
    }
    return std::nullopt;
}

/// Executable form of the three-way equivalence: series membership, extension
/// stability, and the almost centered condition must agree.
struct EquivalenceReport {
    bool in_class_h = false;
    bool almost_centered = false;
    bool extensions_all_pass = false;
    bool consistent = false;
    int m_max = 0;
    std::optional<int> failing_m;
    SlpVerdict failing_cell;  // failing (a, d) of the failing extension
    ClassHVerdict class_h;
    AlmostCenteredVerdict centered;
};

template <typename K>
EquivalenceReport theorem_equivalence_report(const GradedModule<K>& module,
                                             const LinearForm<K>& form,
                                             std::optional<int> m_max = std::nullopt) {
    int sweep_bound = m_max && *m_max > 0 ? *m_max : module.socle_degree() + 2;
    PowerRankEngine<K> engine(module, form);
    RankTable table = engine.table();
    require(slp_verdict_from_table(table).holds, ErrorKind::NotSLP,
            "form is not a strong Lefschetz element");

    EquivalenceReport report;
    report.m_max = sweep_bound;
    report.class_h = class_h_membership(hilbert_series(module));
    report.in_class_h = report.class_h.member;
    report.centered = is_almost_centered(decomposition_from_table(table));
    report.almost_centered = report.centered.almost_centered;

    report.extensions_all_pass = true;
    for (int m = 1; m <= report.m_max && report.extensions_all_pass; ++m) {
        GradedModule<K> extension = extend_module(module, m);
        SlpVerdict verdict = slp_check(extension, extended_form(module, form));
        if (!verdict.holds) {
            report.extensions_all_pass = false;
            report.failing_m = m;
            report.failing_cell = verdict;
        }
    }
    report.consistent = report.in_class_h == report.almost_centered &&
                        report.almost_centered == report.extensions_all_pass;
    return report;
}

}  // namespace slp

#endif
