#include "slp/rank_table.hpp"

#include <sstream>

namespace slp {

SlpVerdict slp_verdict_from_table(const RankTable& table) {
    for (int a = 1; a <= table.p; ++a)
        for (int d = 0; d + a <= table.p; ++d)
            if (table.r[d][a] != std::min(table.dim(d), table.dim(d + a)))
                return {false, a, d};
    return {};
}

CyclicDecomposition decomposition_from_table(const RankTable& table) {
    std::vector<CyclicSummand> summands;
    for (int i = 0; i <= table.p; ++i) {
        for (int d = 1; d <= table.p + 1 - i; ++d) {
            int count = (table.rank(i, d - 1) - table.rank(i, d)) -
                        (table.rank(i - 1, d) - table.rank(i - 1, d + 1));
            if (count < 0) {
                std::ostringstream msg;
                msg << "negative multiplicity " << count << " for summand (" << i << "," << d
                    << "); rank computation is inconsistent";
                fail(ErrorKind::InternalInconsistency, msg.str());
            }
            for (int c = 0; c < count; ++c)
                summands.push_back({i, d});
        }
    }
    CyclicDecomposition decomposition(std::move(summands));

    // reconstruction check against the Hilbert series
    std::vector<int> covers = decomposition.cover_counts();
    covers.resize(table.p + 1, 0);
    for (int d = 0; d <= table.p; ++d)
        if (covers[d] != table.dim(d)) {
            std::ostringstream msg;
            msg << "decomposition covers " << covers[d] << " at degree " << d << " but dim is "
                << table.dim(d);
            fail(ErrorKind::InternalInconsistency, msg.str());
        }
    return decomposition;
}

}  // namespace slp
