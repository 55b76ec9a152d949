#ifndef SLP_DECOMPOSITION_HPP
#define SLP_DECOMPOSITION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slp/hilbert.hpp"

namespace slp {

/// One cyclic summand S(-shift)/(l^length): a chain supported on degrees
/// [shift, shift + length - 1].
struct CyclicSummand {
    int shift = 0;
    int length = 1;

    int start() const { return shift; }
    int end() const { return shift + length - 1; }  // last supported degree
    bool covers(int degree) const { return degree >= start() && degree <= end(); }

    /// Center statistic length + 2*shift; comparable summands are almost
    /// centered exactly when their centers differ by at most 1.
    int center() const { return length + 2 * shift; }

    bool operator==(const CyclicSummand& other) const = default;

    std::string str() const;
};

/// Canonical order: by shift ascending, then length descending. This equals
/// descending lexicographic order of the 0/1 support rows in the diagram.
bool canonical_summand_less(const CyclicSummand& a, const CyclicSummand& b);

enum class SummandOrder { Precedes, Succeeds, Equal, Incomparable };

/// Verdict of comparing two summands under interval containment, with the
/// start/end gaps attached when comparable.
struct OrderVerdict {
    SummandOrder relation = SummandOrder::Incomparable;
    std::optional<int> gap_left;   // difference of starting degrees
    std::optional<int> gap_right;  // difference of ending degrees

    bool comparable() const { return relation != SummandOrder::Incomparable; }
};

/// B precedes A when A's support interval contains B's: shift_A <= shift_B and
/// shift_B + length_B <= shift_A + length_A.
OrderVerdict compare_summands(const CyclicSummand& a, const CyclicSummand& b);

/// Multiset of cyclic summands in canonical order.
class CyclicDecomposition {
public:
    CyclicDecomposition() = default;
    explicit CyclicDecomposition(std::vector<CyclicSummand> summands);

    const std::vector<CyclicSummand>& summands() const { return summands_; }
    bool empty() const { return summands_.empty(); }
    std::size_t size() const { return summands_.size(); }

    long total_length() const;

    /// Largest supported degree over all summands.
    int socle_degree() const;

    /// Number of summands covering each degree 0..socle; for a decomposition
    /// of a module this equals the Hilbert series.
    std::vector<int> cover_counts() const;

    bool operator==(const CyclicDecomposition& other) const = default;

    std::string str() const;

private:
    std::vector<CyclicSummand> summands_;
};

struct TotalOrderVerdict {
    bool totally_ordered = true;
    std::optional<std::pair<CyclicSummand, CyclicSummand>> witness;  // first incomparable pair
};

TotalOrderVerdict is_totally_ordered(const CyclicDecomposition& decomposition);

/// Maximum summand under the containment order. Requires a nonempty totally
/// ordered decomposition.
CyclicSummand largest_summand(const CyclicDecomposition& decomposition);

}  // namespace slp

#endif
