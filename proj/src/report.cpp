#include "slp/report.hpp"

namespace slp {

Json summand_json(const CyclicSummand& summand) {
    return Json::array({summand.shift, summand.length});
}

Json decomposition_json(const CyclicDecomposition& decomposition) {
    Json out = Json::array();
    for (const CyclicSummand& s : decomposition.summands())
        out.push_back(summand_json(s));
    return out;
}

Json hilbert_json(const HilbertSeries& series) {
    return Json(series.coeffs);
}

Json diagram_json(const Diagram& diagram) {
    Json rows = Json::array();
    for (const Diagram::Row& row : diagram.rows) {
        Json entry;
        entry["label"] = row.label;
        entry["support"] = row.support;
        rows.push_back(std::move(entry));
    }
    Json out;
    out["header"] = diagram.header;
    out["rows"] = std::move(rows);
    return out;
}

Json slp_verdict_json(const SlpVerdict& verdict) {
    Json out;
    out["holds"] = verdict.holds;
    if (!verdict.holds) {
        out["failing_power"] = verdict.a;
        out["failing_degree"] = verdict.d;
    }
    return out;
}

Json class_h_json(const ClassHVerdict& verdict) {
    Json out;
    out["member"] = verdict.member;
    switch (verdict.chain) {
    case ClassHChain::FirstChain: out["chain"] = "first"; break;
    case ClassHChain::SecondChain: out["chain"] = "second"; break;
    case ClassHChain::Both: out["chain"] = "both"; break;
    case ClassHChain::Neither: out["chain"] = "neither"; break;
    }
    if (verdict.first_chain_violation)
        out["first_chain_violation"] = *verdict.first_chain_violation;
    if (verdict.second_chain_violation)
        out["second_chain_violation"] = *verdict.second_chain_violation;
    if (verdict.violating_index)
        out["violating_index"] = *verdict.violating_index;
    return out;
}

Json harness_json(const HarnessReport& report) {
    Json out;
    out["seed"] = report.seed;
    out["trials"] = report.trials;
    out["max_vars"] = report.max_vars;
    out["max_socle"] = report.max_socle;
    out["witness_trials"] = report.witness_trials;
    out["instances"] = report.instances;
    out["witnesses_found"] = report.witnesses_found;
    out["forms_cross_checked"] = report.forms_cross_checked;
    out["non_slp_forms_checked"] = report.non_slp_forms_checked;
    out["tensor_pairs_checked"] = report.tensor_pairs_checked;
    out["failing_m_observed"] = report.failing_m_observed;
    out["failing_m_matches_gap_formula"] = report.failing_m_matches_gap_formula;
    Json properties;
    for (const auto& [name, stat] : report.properties) {
        Json entry;
        entry["checks"] = stat.checks;
        entry["violations"] = stat.violations;
        if (stat.violations > 0)
            entry["first_violation"] = stat.first_violation;
        properties[name] = std::move(entry);
    }
    out["properties"] = std::move(properties);
    out["all_pass"] = report.all_pass();
    return out;
}

}  // namespace slp
