#ifndef SLP_REPORT_HPP
#define SLP_REPORT_HPP

#include <json.hpp>

#include "slp/decomposition.hpp"
#include "slp/diagram.hpp"
#include "slp/harness.hpp"
#include "slp/hilbert.hpp"
#include "slp/rank_table.hpp"
#include "slp/structure.hpp"

namespace slp {

/// Reports use ordered JSON so field order is fixed by construction; together
/// with integer-only payloads this keeps re-runs byte-identical.
using Json = nlohmann::ordered_json;

Json decomposition_json(const CyclicDecomposition& decomposition);
Json hilbert_json(const HilbertSeries& series);
Json diagram_json(const Diagram& diagram);
Json slp_verdict_json(const SlpVerdict& verdict);
Json class_h_json(const ClassHVerdict& verdict);
Json summand_json(const CyclicSummand& summand);
Json harness_json(const HarnessReport& report);

}  // namespace slp

#endif
