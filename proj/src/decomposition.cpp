#include "slp/decomposition.hpp"

#include <algorithm>
#include <sstream>

namespace slp {

std::string CyclicSummand::str() const {
    std::ostringstream out;
    out << "S";
    if (shift > 0)
        out << "(-" << shift << ")";
    out << "/(l";
    if (length > 1)
        out << "^" << length;
    out << ")";
    return out.str();
}

bool canonical_summand_less(const CyclicSummand& a, const CyclicSummand& b) {
    if (a.shift != b.shift)
        return a.shift < b.shift;
    return a.length > b.length;
}

OrderVerdict compare_summands(const CyclicSummand& a, const CyclicSummand& b) {
    auto contains = [](const CyclicSummand& outer, const CyclicSummand& inner) {
        return outer.start() <= inner.start() && inner.end() <= outer.end();
    };
    OrderVerdict verdict;
    if (a == b) {
        verdict.relation = SummandOrder::Equal;
        verdict.gap_left = 0;
        verdict.gap_right = 0;
    } else if (contains(b, a)) {
        verdict.relation = SummandOrder::Precedes;
        verdict.gap_left = a.start() - b.start();
        verdict.gap_right = b.end() - a.end();
    } else if (contains(a, b)) {
        verdict.relation = SummandOrder::Succeeds;
        verdict.gap_left = b.start() - a.start();
        verdict.gap_right = a.end() - b.end();
    }
    return verdict;
}

CyclicDecomposition::CyclicDecomposition(std::vector<CyclicSummand> summands)
    : summands_(std::move(summands)) {
    for (const CyclicSummand& s : summands_) {
        require(s.shift >= 0, ErrorKind::ShapeMismatch, "negative summand shift");
        require(s.length >= 1, ErrorKind::ShapeMismatch, "summand length must be positive");
    }
    std::sort(summands_.begin(), summands_.end(), canonical_summand_less);
}

long CyclicDecomposition::total_length() const {
    long t = 0;
    for (const CyclicSummand& s : summands_)
        t += s.length;
    return t;
}

int CyclicDecomposition::socle_degree() const {
    int p = -1;
    for (const CyclicSummand& s : summands_)
        p = std::max(p, s.end());
    return p;
}

std::vector<int> CyclicDecomposition::cover_counts() const {
    std::vector<int> counts(socle_degree() + 1, 0);
    for (const CyclicSummand& s : summands_)
        for (int d = s.start(); d <= s.end(); ++d)
            ++counts[d];
    return counts;
}

std::string CyclicDecomposition::str() const {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        if (i)
            out << ", ";
        out << "(" << summands_[i].shift << "," << summands_[i].length << ")";
    }
    out << "}";
    return out.str();
}

TotalOrderVerdict is_totally_ordered(const CyclicDecomposition& decomposition) {
    const auto& summands = decomposition.summands();
    for (std::size_t i = 0; i < summands.size(); ++i)
        for (std::size_t j = i + 1; j < summands.size(); ++j)
            if (!compare_summands(summands[i], summands[j]).comparable())
                return {false, std::make_pair(summands[i], summands[j])};
    return {true, std::nullopt};
}

CyclicSummand largest_summand(const CyclicDecomposition& decomposition) {
    require(!decomposition.empty(), ErrorKind::NotTotallyOrdered,
            "largest summand of an empty decomposition");
    TotalOrderVerdict order = is_totally_ordered(decomposition);
    require(order.totally_ordered, ErrorKind::NotTotallyOrdered,
            "decomposition is not totally ordered");
    CyclicSummand best = decomposition.summands().front();
    for (const CyclicSummand& s : decomposition.summands())
        if (compare_summands(s, best).relation == SummandOrder::Succeeds)
            best = s;
    return best;
}

}  // namespace slp
