#include "slp/constructions.hpp"

#include <algorithm>
#include <string>

namespace slp {

std::vector<CyclicSummand> cyclic_tensor(const CyclicSummand& a, const CyclicSummand& b) {
    require(a.length >= 1 && b.length >= 1, ErrorKind::ShapeMismatch,
            "chain lengths must be positive");
    std::vector<CyclicSummand> terms;
    int steps = std::min(a.length, b.length);
    for (int h = 0; h < steps; ++h)
        terms.push_back({a.shift + b.shift + h, a.length + b.length - 1 - 2 * h});
    long total = 0;
    for (const CyclicSummand& t : terms)
        total += t.length;
    require(total == static_cast<long>(a.length) * b.length, ErrorKind::InternalInconsistency,
            "chain product lengths do not sum to " + std::to_string(a.length * b.length));
    return terms;
}

CyclicDecomposition extension_decomposition(const CyclicDecomposition& decomposition, int m) {
    require(m >= 1, ErrorKind::InvalidM, "extension order must be >= 1");
    std::vector<CyclicSummand> terms;
    for (const CyclicSummand& s : decomposition.summands()) {
        std::vector<CyclicSummand> expansion = cyclic_tensor(s, {0, m});
        terms.insert(terms.end(), expansion.begin(), expansion.end());
    }
    CyclicDecomposition result(std::move(terms));
    require(result.total_length() == m * decomposition.total_length(),
            ErrorKind::InternalInconsistency, "extension lengths do not sum to m * dim");
    return result;
}

TensorPlan decomposition_tensor(const CyclicDecomposition& left, const CyclicDecomposition& right) {
    TensorPlan plan;
    plan.left = left;
    plan.right = right;
    std::vector<CyclicSummand> terms;
    for (const CyclicSummand& a : left.summands())
        for (const CyclicSummand& b : right.summands()) {
            TensorPlan::PairExpansion expansion{a, b, cyclic_tensor(a, b)};
            terms.insert(terms.end(), expansion.terms.begin(), expansion.terms.end());
            plan.pairs.push_back(std::move(expansion));
        }
    plan.result = CyclicDecomposition(std::move(terms));
    require(plan.result.total_length() == left.total_length() * right.total_length(),
            ErrorKind::InternalInconsistency, "product lengths do not multiply");
    return plan;
}

MonomialIdeal monomial_ci(const std::vector<int>& exponents) {
    require(!exponents.empty(), ErrorKind::InvalidExponent,
            "complete intersection needs at least one exponent");
    int n = static_cast<int>(exponents.size());
    std::vector<Monomial> generators;
    for (int v = 0; v < n; ++v) {
        require(exponents[v] >= 1, ErrorKind::InvalidExponent,
                "exponent a_" + std::to_string(v + 1) + " must be >= 1");
        Monomial g;
        g.exponents.assign(n, 0);
        g.exponents[v] = exponents[v];
        generators.push_back(std::move(g));
    }
    return MonomialIdeal(n, std::move(generators));
}

SymmetricTensorVerdict iterated_symmetric_tensor(const std::vector<MonomialIdeal>& ideals,
                                                 int witness_trials, std::uint64_t witness_seed) {
    require(!ideals.empty(), ErrorKind::ShapeMismatch, "need at least one ideal");
    FieldSpec field = FieldSpec::rationals();

    std::optional<GradedModule<Rational>> product;
    std::vector<std::int64_t> witness;
    for (const MonomialIdeal& ideal : ideals) {
        require(ideal.num_vars() == 2, ErrorKind::ShapeMismatch,
                "factors must live in two variables");
        require(is_artinian(ideal), ErrorKind::NotArtinian,
                "factor " + ideal.str() + " is not Artinian");
        GradedModule<Rational> factor = module_from_ideal<Rational>(ideal, field);
        require(is_symmetric(hilbert_series(factor)), ErrorKind::NotSymmetric,
                "factor " + ideal.str() + " has a non-symmetric Hilbert series");

        WitnessSearch<Rational> search =
            find_slp_element(factor, witness_trials, witness_seed);
        require(search.witness.has_value(), ErrorKind::NotSLP,
                "no strong Lefschetz witness found for factor " + ideal.str());
        // two-variable quotients always carry one in characteristic zero, and
        // the search draws integer coefficients, so record them exactly
        for (const Rational& c : search.witness->coefficients)
            witness.push_back(static_cast<std::int64_t>(c.get_num().get_si()));

        product = product ? tensor_module(*product, factor) : std::move(factor);
    }

    SymmetricTensorVerdict verdict;
    verdict.witness = witness;
    LinearForm<Rational> sum_witness = form_from_ints<Rational>(field, witness);
    SlpVerdict slp = slp_check(*product, sum_witness);
    verdict.slp_holds = slp.holds;
    verdict.failure = slp;
    verdict.series = hilbert_series(*product);
    verdict.symmetric = is_symmetric(*verdict.series);
    return verdict;
}

CharPVerdict char_p_slp(const MonomialIdeal& ideal, std::uint64_t p,
                        const std::vector<std::int64_t>& form_coefficients) {
    require(is_artinian(ideal), ErrorKind::NotArtinian,
            "quotient of " + ideal.str() + " is not finite dimensional");
    FieldSpec field = FieldSpec::prime_field(p);  // throws NotPrime
    GradedModule<Zp> module = module_from_ideal<Zp>(ideal, field);
    LinearForm<Zp> form = form_from_ints<Zp>(field, form_coefficients);
    PowerRankEngine<Zp> engine(module, form);
    CharPVerdict out;
    out.table = engine.table();
    out.verdict = slp_verdict_from_table(out.table);
    return out;
}

}  // namespace slp
