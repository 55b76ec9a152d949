#include "slp/structure.hpp"

#include <algorithm>

namespace slp {

ClassHVerdict class_h_membership(const HilbertSeries& series) {
    int p = series.socle_degree();
    ClassHVerdict verdict;
    bool first = true, second = true;
    for (int i = 1; i <= p / 2; ++i) {
        bool first_here = series.at(i - 1) <= series.at(p - i) && series.at(p - i) <= series.at(i);
        bool second_here =
            series.at(p - i + 1) <= series.at(i) && series.at(i) <= series.at(p - i);
        if (!first_here && first) {
            first = false;
            verdict.first_chain_violation = i;
        }
        if (!second_here && second) {
            second = false;
            verdict.second_chain_violation = i;
        }
    }
    verdict.member = first || second;
    if (first && second)
        verdict.chain = ClassHChain::Both;
    else if (first)
        verdict.chain = ClassHChain::FirstChain;
    else if (second)
        verdict.chain = ClassHChain::SecondChain;
    else {
        verdict.chain = ClassHChain::Neither;
        verdict.violating_index =
            std::min(*verdict.first_chain_violation, *verdict.second_chain_violation);
    }
    return verdict;
}

bool is_symmetric(const HilbertSeries& series) {
    int p = series.socle_degree();
    for (int i = 0; i <= p / 2; ++i)
        if (series.at(i) != series.at(p - i))
            return false;
    return true;
}

AlmostCenteredVerdict is_almost_centered(const CyclicDecomposition& decomposition) {
    TotalOrderVerdict order = is_totally_ordered(decomposition);
    require(order.totally_ordered, ErrorKind::NotTotallyOrdered,
            "almost centered is defined for totally ordered decompositions");
    AlmostCenteredVerdict verdict;
    if (decomposition.empty())
        return verdict;
    const CyclicSummand* lo = nullptr;
    const CyclicSummand* hi = nullptr;
    for (const CyclicSummand& s : decomposition.summands()) {
        if (!lo || s.center() < lo->center())
            lo = &s;
        if (!hi || s.center() > hi->center())
            hi = &s;
    }
    if (hi->center() - lo->center() > 1) {
        verdict.almost_centered = false;
        verdict.witness = std::make_pair(*lo, *hi);
    }
    return verdict;
}

CenterProfile center_profile(const CyclicDecomposition& decomposition) {
    CenterProfile profile;
    profile.socle_degree = decomposition.socle_degree();
    for (const CyclicSummand& s : decomposition.summands())
        profile.centers.push_back(s.center());
    std::sort(profile.centers.begin(), profile.centers.end());
    if (!profile.centers.empty()) {
        profile.min_center = profile.centers.front();
        profile.max_center = profile.centers.back();
        profile.within_window = profile.min_center >= profile.socle_degree &&
                                profile.max_center <= profile.socle_degree + 2;
    }
    return profile;
}

}  // namespace slp
