#include "slp/cli.hpp"

#include <CLI11.hpp>

#include "slp/constructions.hpp"
#include "slp/diagram.hpp"
#include "slp/ideal_io.hpp"
#include "slp/report.hpp"
#include "slp/version.hpp"

namespace slp {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240601;

std::vector<std::int64_t> parse_int_csv(const std::string& text) {
    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            std::size_t used = 0;
            values.push_back(std::stoll(token, &used));
            if (used != token.size())
                throw std::invalid_argument(token);
        } catch (const std::exception&) {
            fail(ErrorKind::ParseError, "expected a comma-separated integer list, got '" + text + "'");
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    require(!values.empty(), ErrorKind::ParseError, "empty integer list");
    return values;
}

std::string csv_of(const std::vector<std::int64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

struct FormOptions {
    std::string form_csv;
    bool auto_form = false;
    std::uint64_t seed = kDefaultSeed;
    int trials = 64;
    int bound = 5;

    void attach(CLI::App* cmd) {
        cmd->add_option("--form", form_csv, "form coefficients c1,c2,...");
        cmd->add_flag("--auto", auto_form, "search for a strong Lefschetz witness");
        cmd->add_option("--seed", seed, "seed for --auto and sampling");
        cmd->add_option("--trials", trials, "trial count for --auto");
        cmd->add_option("--bound", bound, "coefficient bound for --auto");
    }
};

struct FormChoice {
    std::vector<std::int64_t> coefficients;
    bool from_auto = false;
    bool found = true;
    int trials_used = 0;
    std::vector<std::int64_t> best;
    SlpVerdict best_failure;
};

template <typename K>
std::vector<std::int64_t> int_coefficients(const LinearForm<K>& form) {
    std::vector<std::int64_t> out;
    for (const K& c : form.coefficients) {
        if constexpr (std::is_same_v<K, Rational>)
            out.push_back(c.get_num().get_si());
        else
            out.push_back(static_cast<std::int64_t>(c.value()));
    }
    return out;
}

template <typename K>
FormChoice resolve_form(const GradedModule<K>& module, const FormOptions& opts) {
    FormChoice choice;
    if (!opts.form_csv.empty()) {
        choice.coefficients = parse_int_csv(opts.form_csv);
        require(static_cast<int>(choice.coefficients.size()) == module.num_vars(),
                ErrorKind::ShapeMismatch,
                "--form needs " + std::to_string(module.num_vars()) + " coefficients");
        form_from_ints<K>(module.field(), choice.coefficients);  // validates nonzero
        return choice;
    }
    require(opts.auto_form, ErrorKind::ParseError, "pass --form c1,c2,... or --auto");
    choice.from_auto = true;
    WitnessSearch<K> search = find_slp_element(module, opts.trials, opts.seed, opts.bound);
    choice.trials_used = search.trials_used;
    if (search.witness) {
        choice.coefficients = int_coefficients(*search.witness);
    } else {
        choice.found = false;
        if (search.best_form)
            choice.best = int_coefficients(*search.best_form);
        choice.best_failure = search.best_failure;
    }
    return choice;
}

struct Output {
    std::ostream& out;
    bool json = false;
    Json report;

    Output(std::ostream& stream, bool as_json, const std::string& command) : out(stream), json(as_json) {
        report["version"] = kVersion;
        report["command"] = command;
        report["inputs"] = Json::array();
        report["parameters"] = Json::object();
    }

    void add_input(const std::string& path) {
        Json entry;
        entry["path"] = path;
        entry["digest"] = file_digest(path);
        report["inputs"].push_back(std::move(entry));
    }

    void param(const std::string& key, const Json& value) { report["parameters"][key] = value; }

    void line(const std::string& text) {
        if (!json)
            out << text << "\n";
    }

    void finish() {
        if (json)
            out << report.dump(2) << "\n";
    }
};

void describe_form(Output& output, const FormChoice& choice) {
    output.param("form", choice.coefficients);
    output.param("form_source", choice.from_auto ? "auto" : "given");
    output.line("form: " + csv_of(choice.coefficients) + (choice.from_auto ? " (auto)" : ""));
}

/// Emits the not-found report for --auto searches; callers return exit 1.
void describe_missing_witness(Output& output, const FormChoice& choice, const FormOptions& opts) {
    output.param("form_source", "auto");
    output.report["verdicts"]["witness_found"] = false;
    output.line("no strong Lefschetz witness among " + std::to_string(choice.trials_used) +
                " sampled forms (seed " + std::to_string(opts.seed) + ")");
    if (!choice.best.empty()) {
        output.report["witnesses"]["best_form"] = choice.best;
        output.report["witnesses"]["best_failure"] = slp_verdict_json(choice.best_failure);
        output.line("closest form: " + csv_of(choice.best) + ", first failure at (a=" +
                    std::to_string(choice.best_failure.a) + ", d=" +
                    std::to_string(choice.best_failure.d) + ")");
    }
    output.line("a missing witness among sampled forms is evidence, not a proof of absence");
}

std::string verdict_line(const SlpVerdict& verdict, const std::string& name) {
    if (verdict.holds)
        return name + ": holds";
    return name + ": fails at (a=" + std::to_string(verdict.a) +
           ", d=" + std::to_string(verdict.d) + ")";
}

const FieldSpec kQQ = FieldSpec::rationals();

// ---------------------------------------------------------------- commands

int cmd_hilbert(const std::string& path, Output& output) {
    MonomialIdeal ideal = parse_ideal_file(path);
    auto module = module_from_ideal<Rational>(ideal, kQQ);
    HilbertSeries h = hilbert_series(module);
    output.report["hilbert"] = hilbert_json(h);
    output.report["socle_degree"] = h.socle_degree();
    output.report["total_dimension"] = h.total();
    output.line("ideal: " + ideal.str());
    output.line("hilbert: " + h.str());
    output.line("socle degree: " + std::to_string(h.socle_degree()));
    output.line("total dimension: " + std::to_string(h.total()));
    return 0;
}

int cmd_class_h(const std::string& path, Output& output) {
    MonomialIdeal ideal = parse_ideal_file(path);
    HilbertSeries h = hilbert_series(module_from_ideal<Rational>(ideal, kQQ));
    ClassHVerdict verdict = class_h_membership(h);
    output.report["hilbert"] = hilbert_json(h);
    output.report["verdicts"]["class_h"] = class_h_json(verdict);
    output.line("hilbert: " + h.str());
    if (verdict.member) {
        std::string chain = verdict.chain == ClassHChain::Both ? "both chains"
                            : verdict.chain == ClassHChain::FirstChain ? "first chain"
                                                                       : "second chain";
        output.line("class-h: member (" + chain + ")");
        return 0;
    }
    output.line("class-h: not a member (first chain fails at i=" +
                std::to_string(*verdict.first_chain_violation) + ", second chain fails at i=" +
                std::to_string(*verdict.second_chain_violation) + ")");
    return 1;
}

int cmd_decompose(const std::string& path, const FormOptions& opts, Output& output) {
    auto module = module_from_ideal<Rational>(parse_ideal_file(path), kQQ);
    FormChoice choice = resolve_form(module, opts);
    if (!choice.found) {
        describe_missing_witness(output, choice, opts);
        return 1;
    }
    describe_form(output, choice);
    CyclicDecomposition d =
        cyclic_decomposition(module, form_from_ints<Rational>(kQQ, choice.coefficients));
    TotalOrderVerdict order = is_totally_ordered(d);
    output.report["decomposition"] = decomposition_json(d);
    output.report["hilbert"] = hilbert_json(hilbert_series(module));
    output.report["verdicts"]["totally_ordered"] = order.totally_ordered;
    if (order.witness) {
        output.report["witnesses"]["incomparable_pair"] =
            Json::array({summand_json(order.witness->first), summand_json(order.witness->second)});
    }
    output.line("decomposition: " + d.str());
    output.line(std::string("totally ordered: ") + (order.totally_ordered ? "yes" : "no"));
    if (order.witness)
        output.line("incomparable pair: " + order.witness->first.str() + " vs " +
                    order.witness->second.str());
    return 0;
}

int cmd_slp(const std::string& path, const FormOptions& opts, bool weak, Output& output) {
    auto module = module_from_ideal<Rational>(parse_ideal_file(path), kQQ);
    FormChoice choice = resolve_form(module, opts);
    if (!choice.found) {
        describe_missing_witness(output, choice, opts);
        return 1;
    }
    describe_form(output, choice);
    LinearForm<Rational> form = form_from_ints<Rational>(kQQ, choice.coefficients);
    if (weak) {
        bool holds = wlp_check(module, form);
        output.report["verdicts"]["wlp"] = holds;
        output.line(std::string("wlp: ") + (holds ? "holds" : "fails"));
        return holds ? 0 : 1;
    }
    SlpVerdict verdict = slp_check(module, form);
    output.report["verdicts"]["slp"] = slp_verdict_json(verdict);
    output.line(verdict_line(verdict, "slp"));
    return verdict.holds ? 0 : 1;
}

int cmd_almost_centered(const std::string& path, const FormOptions& opts, Output& output) {
    auto module = module_from_ideal<Rational>(parse_ideal_file(path), kQQ);
    FormChoice choice = resolve_form(module, opts);
    if (!choice.found) {
        describe_missing_witness(output, choice, opts);
        return 1;
    }
    describe_form(output, choice);
    CyclicDecomposition d =
        cyclic_decomposition(module, form_from_ints<Rational>(kQQ, choice.coefficients));
    AlmostCenteredVerdict verdict = is_almost_centered(d);  // throws NotTotallyOrdered
    CenterProfile profile = center_profile(d);
    output.report["decomposition"] = decomposition_json(d);
    output.report["verdicts"]["almost_centered"] = verdict.almost_centered;
    output.report["centers"] = profile.centers;
    output.line("decomposition: " + d.str());
    std::string centers = "centers:";
    for (int c : profile.centers)
        centers += " " + std::to_string(c);
    output.line(centers);
    if (verdict.almost_centered) {
        output.line("almost-centered: yes");
        return 0;
    }
    output.report["witnesses"]["off_center_pair"] =
        Json::array({summand_json(verdict.witness->first), summand_json(verdict.witness->second)});
    output.line("almost-centered: no (" + verdict.witness->first.str() + " and " +
                verdict.witness->second.str() + " have centers " +
                std::to_string(verdict.witness->first.center()) + " and " +
                std::to_string(verdict.witness->second.center()) + ")");
    return 1;
}

int cmd_diagram(const std::string& path, const FormOptions& opts, Output& output) {
    auto module = module_from_ideal<Rational>(parse_ideal_file(path), kQQ);
    FormChoice choice = resolve_form(module, opts);
    if (!choice.found) {
        describe_missing_witness(output, choice, opts);
        return 1;
    }
    describe_form(output, choice);
    HilbertSeries h = hilbert_series(module);
    CyclicDecomposition d =
        cyclic_decomposition(module, form_from_ints<Rational>(kQQ, choice.coefficients));
    Diagram diagram = make_diagram(d, h);
    output.report["decomposition"] = decomposition_json(d);
    output.report["hilbert"] = hilbert_json(h);
    output.report["diagram"] = diagram_json(diagram);
    if (!output.json)
        output.out << diagram.text();
    return 0;
}

int cmd_tensor(const std::string& left_path, const std::string& right_path,
               const FormOptions& opts, Output& output) {
    auto left = module_from_ideal<Rational>(parse_ideal_file(left_path), kQQ);
    auto right = module_from_ideal<Rational>(parse_ideal_file(right_path), kQQ);

    std::vector<std::int64_t> left_coeffs, right_coeffs;
    bool from_auto = false;
    if (!opts.form_csv.empty()) {
        std::vector<std::int64_t> combined = parse_int_csv(opts.form_csv);
        require(static_cast<int>(combined.size()) == left.num_vars() + right.num_vars(),
                ErrorKind::ShapeMismatch,
                "--form needs " + std::to_string(left.num_vars() + right.num_vars()) +
                    " coefficients (left block then right block)");
        left_coeffs.assign(combined.begin(), combined.begin() + left.num_vars());
        right_coeffs.assign(combined.begin() + left.num_vars(), combined.end());
    } else {
        require(opts.auto_form, ErrorKind::ParseError, "pass --form c1,c2,... or --auto");
        from_auto = true;
        for (auto [module, coeffs] : {std::pair{&left, &left_coeffs}, {&right, &right_coeffs}}) {
            WitnessSearch<Rational> search =
                find_slp_element(*module, opts.trials, opts.seed, opts.bound);
            FormChoice miss;
            if (!search.witness) {
                miss.trials_used = search.trials_used;
                if (search.best_form)
                    miss.best = int_coefficients(*search.best_form);
                miss.best_failure = search.best_failure;
                describe_missing_witness(output, miss, opts);
                return 1;
            }
            *coeffs = int_coefficients(*search.witness);
        }
    }
    std::vector<std::int64_t> combined = left_coeffs;
    combined.insert(combined.end(), right_coeffs.begin(), right_coeffs.end());
    FormChoice choice;
    choice.coefficients = combined;
    choice.from_auto = from_auto;
    describe_form(output, choice);

    LinearForm<Rational> left_form = form_from_ints<Rational>(kQQ, left_coeffs);
    LinearForm<Rational> right_form = form_from_ints<Rational>(kQQ, right_coeffs);
    CyclicDecomposition left_dec = cyclic_decomposition(left, left_form);
    CyclicDecomposition right_dec = cyclic_decomposition(right, right_form);
    TensorPlan plan = decomposition_tensor(left_dec, right_dec);

    GradedModule<Rational> product = tensor_module(left, right);
    PowerRankEngine<Rational> engine(product,
                                     form_from_ints<Rational>(kQQ, combined));
    RankTable table = engine.table();
    CyclicDecomposition product_dec = decomposition_from_table(table);
    SlpVerdict verdict = slp_verdict_from_table(table);
    TotalOrderVerdict order = is_totally_ordered(product_dec);

    output.report["hilbert"] = hilbert_json(hilbert_series(product));
    output.report["left_decomposition"] = decomposition_json(left_dec);
    output.report["right_decomposition"] = decomposition_json(right_dec);
    output.report["decomposition"] = decomposition_json(product_dec);
    output.report["verdicts"]["plan_matches_module"] = plan.result == product_dec;
    output.report["verdicts"]["totally_ordered"] = order.totally_ordered;
    output.report["verdicts"]["slp"] = slp_verdict_json(verdict);
    if (order.witness)
        output.report["witnesses"]["incomparable_pair"] =
            Json::array({summand_json(order.witness->first), summand_json(order.witness->second)});

    output.line("left decomposition: " + left_dec.str());
    output.line("right decomposition: " + right_dec.str());
    output.line("product hilbert: " + hilbert_series(product).str());
    output.line("product decomposition: " + product_dec.str());
    output.line(std::string("plan matches module decomposition: ") +
                (plan.result == product_dec ? "yes" : "no"));
    output.line(std::string("totally ordered: ") + (order.totally_ordered ? "yes" : "no"));
    if (order.witness)
        output.line("incomparable pair: " + order.witness->first.str() + " vs " +
                    order.witness->second.str());
    output.line(verdict_line(verdict, "slp"));
    return verdict.holds ? 0 : 1;
}

int cmd_extend(const std::string& path, int m, const FormOptions& opts, Output& output) {
    auto module = module_from_ideal<Rational>(parse_ideal_file(path), kQQ);
    FormChoice choice = resolve_form(module, opts);
    if (!choice.found) {
        describe_missing_witness(output, choice, opts);
        return 1;
    }
    describe_form(output, choice);
    output.param("m", m);

    LinearForm<Rational> base_form = form_from_ints<Rational>(kQQ, choice.coefficients);
    CyclicDecomposition base_dec = cyclic_decomposition(module, base_form);
    GradedModule<Rational> extension = extend_module(module, m);
    PowerRankEngine<Rational> engine(extension, extended_form(module, base_form));
    RankTable table = engine.table();
    CyclicDecomposition extension_dec = decomposition_from_table(table);
    SlpVerdict verdict = slp_verdict_from_table(table);

    output.report["hilbert"] = hilbert_json(hilbert_series(extension));
    output.report["decomposition"] = decomposition_json(extension_dec);
    output.report["verdicts"]["formula_matches_module"] =
        extension_decomposition(base_dec, m) == extension_dec;
    output.report["verdicts"]["slp"] = slp_verdict_json(verdict);

    output.line("extension hilbert: " + hilbert_series(extension).str());
    output.line("extension decomposition: " + extension_dec.str());
    output.line(std::string("formula matches module decomposition: ") +
                (extension_decomposition(base_dec, m) == extension_dec ? "yes" : "no"));
    output.line(verdict_line(verdict, "slp"));
    return verdict.holds ? 0 : 1;
}

int cmd_minimal_failing_m(const std::string& path, int m_max_arg, const FormOptions& opts,
                          Output& output) {
    auto module = module_from_ideal<Rational>(parse_ideal_file(path), kQQ);
    FormChoice choice = resolve_form(module, opts);
    if (!choice.found) {
        describe_missing_witness(output, choice, opts);
        return 1;
    }
    describe_form(output, choice);
    std::optional<int> m_max = m_max_arg > 0 ? std::optional<int>(m_max_arg) : std::nullopt;
    int bound = m_max.value_or(module.socle_degree() + 2);
    output.param("m_max", bound);
    std::optional<int> failing =
        minimal_failing_m(module, form_from_ints<Rational>(kQQ, choice.coefficients), m_max);
    output.report["verdicts"]["failing_m_found"] = failing.has_value();
    if (failing) {
        output.report["witnesses"]["failing_m"] = *failing;
        output.line("minimal failing m: " + std::to_string(*failing));
        return 1;
    }
    output.line("no failing m up to " + std::to_string(bound));
    return 0;
}

int cmd_theorem_310(const std::string& path, int m_max_arg, const FormOptions& opts,
                    Output& output) {
    auto module = module_from_ideal<Rational>(parse_ideal_file(path), kQQ);
    FormChoice choice = resolve_form(module, opts);
    if (!choice.found) {
        describe_missing_witness(output, choice, opts);
        return 1;
    }
    describe_form(output, choice);
    std::optional<int> m_max = m_max_arg > 0 ? std::optional<int>(m_max_arg) : std::nullopt;
    EquivalenceReport report = theorem_equivalence_report(
        module, form_from_ints<Rational>(kQQ, choice.coefficients), m_max);
    output.param("m_max", report.m_max);

    output.report["hilbert"] = hilbert_json(hilbert_series(module));
    output.report["verdicts"]["in_class_h"] = report.in_class_h;
    output.report["verdicts"]["almost_centered"] = report.almost_centered;
    output.report["verdicts"]["extensions_all_pass"] = report.extensions_all_pass;
    output.report["verdicts"]["consistent"] = report.consistent;
    output.report["verdicts"]["class_h"] = class_h_json(report.class_h);
    if (report.failing_m) {
        output.report["witnesses"]["failing_m"] = *report.failing_m;
        output.report["witnesses"]["failing_cell"] = slp_verdict_json(report.failing_cell);
    }
    if (report.centered.witness)
        output.report["witnesses"]["off_center_pair"] =
            Json::array({summand_json(report.centered.witness->first),
                         summand_json(report.centered.witness->second)});

    output.line("hilbert: " + hilbert_series(module).str());
    output.line(std::string("in class H: ") + (report.in_class_h ? "yes" : "no"));
    output.line(std::string("almost centered: ") + (report.almost_centered ? "yes" : "no"));
    std::string extensions = "extensions pass (m=1.." + std::to_string(report.m_max) + "): ";
    extensions += report.extensions_all_pass ? "yes" : "no";
    if (report.failing_m)
        extensions += " (first failing m=" + std::to_string(*report.failing_m) + ", cell a=" +
                      std::to_string(report.failing_cell.a) + ", d=" +
                      std::to_string(report.failing_cell.d) + ")";
    output.line(extensions);
    output.line(std::string("consistent: ") + (report.consistent ? "yes" : "no"));
    bool all_true = report.in_class_h && report.almost_centered && report.extensions_all_pass;
    return all_true && report.consistent ? 0 : 1;
}

int cmd_char_p(const std::string& path, std::uint64_t p, const FormOptions& opts, Output& output) {
    MonomialIdeal ideal = parse_ideal_file(path);
    FieldSpec field = FieldSpec::prime_field(p);
    auto module = module_from_ideal<Zp>(ideal, field);
    output.param("p", p);

    FormChoice choice;
    if (!opts.form_csv.empty()) {
        choice.coefficients = parse_int_csv(opts.form_csv);
        require(static_cast<int>(choice.coefficients.size()) == module.num_vars(),
                ErrorKind::ShapeMismatch,
                "--form needs " + std::to_string(module.num_vars()) + " coefficients");
    } else {
        require(opts.auto_form, ErrorKind::ParseError, "pass --form c1,c2,... or --auto");
        WitnessSearch<Zp> search = find_slp_element(module, opts.trials, opts.seed, opts.bound);
        choice.from_auto = true;
        choice.trials_used = search.trials_used;
        if (!search.witness) {
            if (search.best_form)
                choice.best = int_coefficients(*search.best_form);
            choice.best_failure = search.best_failure;
            choice.found = false;
            describe_missing_witness(output, choice, opts);
            return 1;
        }
        choice.coefficients = int_coefficients(*search.witness);
    }
    describe_form(output, choice);
    CharPVerdict verdict = char_p_slp(ideal, p, choice.coefficients);
    output.report["verdicts"]["slp"] = slp_verdict_json(verdict.verdict);
    output.line("field: F" + std::to_string(p));
    output.line(verdict_line(verdict.verdict, "slp"));
    return verdict.verdict.holds ? 0 : 1;
}

int cmd_monomial_ci(const std::string& exps_csv, bool emit_ideal, Output& output) {
    std::vector<std::int64_t> exps64 = parse_int_csv(exps_csv);
    std::vector<int> exps(exps64.begin(), exps64.end());
    MonomialIdeal ideal = monomial_ci(exps);
    if (emit_ideal && !output.json) {
        output.out << format_ideal_file(ideal);
        return 0;
    }
    auto module = module_from_ideal<Rational>(ideal, kQQ);
    HilbertSeries h = hilbert_series(module);
    SlpVerdict verdict =
        slp_check(module, all_ones_form<Rational>(kQQ, module.num_vars()));

    output.param("exps", exps);
    Json gens = Json::array();
    for (const Monomial& g : ideal.generators())
        gens.push_back(g.exponents);
    output.report["generators"] = std::move(gens);
    output.report["hilbert"] = hilbert_json(h);
    output.report["verdicts"]["slp_with_all_ones"] = slp_verdict_json(verdict);

    output.line("ideal: " + ideal.str());
    output.line("hilbert: " + h.str());
    output.line(verdict_line(verdict, "slp with all-ones form"));
    return verdict.holds ? 0 : 1;
}

int cmd_harness(std::uint64_t seed, int trials, int max_vars, int max_socle, int witness_trials,
                Output& output) {
    HarnessReport report = run_harness(seed, trials, max_vars, max_socle, witness_trials);
    output.param("seed", seed);
    output.param("trials", trials);
    output.param("max_vars", max_vars);
    output.param("max_socle", max_socle);
    output.report["harness"] = harness_json(report);
    if (!output.json)
        output.out << report.summary();
    output.line(report.all_pass() ? "all properties pass" : "violations found");
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact strong Lefschetz property toolkit"};
    app.require_subcommand(1);

    int exit_code = 0;
    bool json = false;

    auto make = [&](const std::string& name, const std::string& description) {
        CLI::App* cmd = app.add_subcommand(name, description);
        cmd->add_flag("--json", json, "emit a structured report");
        return cmd;
    };

    // shared option storage; only the chosen subcommand's callback reads it
    std::string path, right_path;
    FormOptions form_opts;
    int m = 1, m_max = 0;
    std::uint64_t prime = 2, seed = 1;
    int trials = 200, max_vars = 3, max_socle = 8, witness_trials = 6;
    std::string exps;
    bool emit_ideal = false;

    auto with_ideal = [&](CLI::App* cmd) {
        cmd->add_option("ideal", path, "ideal file")->required();
    };

    CLI::App* hilbert = make("hilbert", "Hilbert series of the quotient");
    with_ideal(hilbert);
    hilbert->callback([&] {
        Output output(out, json, "hilbert");
        output.add_input(path);
        exit_code = cmd_hilbert(path, output);
        output.finish();
    });

    CLI::App* class_h = make("class-h", "membership of the Hilbert series in the extension-stable class");
    with_ideal(class_h);
    class_h->callback([&] {
        Output output(out, json, "class-h");
        output.add_input(path);
        exit_code = cmd_class_h(path, output);
        output.finish();
    });

    CLI::App* decompose = make("decompose", "cyclic decomposition under a linear form");
    with_ideal(decompose);
    form_opts.attach(decompose);
    decompose->callback([&] {
        Output output(out, json, "decompose");
        output.add_input(path);
        exit_code = cmd_decompose(path, form_opts, output);
        output.finish();
    });

    CLI::App* slp = make("slp", "strong Lefschetz property check");
    with_ideal(slp);
    form_opts.attach(slp);
    slp->callback([&] {
        Output output(out, json, "slp");
        output.add_input(path);
        exit_code = cmd_slp(path, form_opts, false, output);
        output.finish();
    });

    CLI::App* wlp = make("wlp", "weak Lefschetz property check");
    with_ideal(wlp);
    form_opts.attach(wlp);
    wlp->callback([&] {
        Output output(out, json, "wlp");
        output.add_input(path);
        exit_code = cmd_slp(path, form_opts, true, output);
        output.finish();
    });

    CLI::App* almost_centered = make("almost-centered", "almost centered check of the decomposition");
    with_ideal(almost_centered);
    form_opts.attach(almost_centered);
    almost_centered->callback([&] {
        Output output(out, json, "almost-centered");
        output.add_input(path);
        exit_code = cmd_almost_centered(path, form_opts, output);
        output.finish();
    });

    CLI::App* diagram = make("diagram", "decomposition diagram");
    with_ideal(diagram);
    form_opts.attach(diagram);
    diagram->callback([&] {
        Output output(out, json, "diagram");
        output.add_input(path);
        exit_code = cmd_diagram(path, form_opts, output);
        output.finish();
    });

    CLI::App* tensor = make("tensor", "tensor product of two quotients");
    tensor->add_option("left", path, "left ideal file")->required();
    tensor->add_option("right", right_path, "right ideal file")->required();
    form_opts.attach(tensor);
    tensor->callback([&] {
        Output output(out, json, "tensor");
        output.add_input(path);
        output.add_input(right_path);
        exit_code = cmd_tensor(path, right_path, form_opts, output);
        output.finish();
    });

    CLI::App* extend = make("extend", "truncated polynomial extension");
    with_ideal(extend);
    extend->add_option("--m", m, "extension order")->required();
    form_opts.attach(extend);
    extend->callback([&] {
        Output output(out, json, "extend");
        output.add_input(path);
        exit_code = cmd_extend(path, m, form_opts, output);
        output.finish();
    });

    CLI::App* minimal = make("minimal-failing-m", "smallest extension order losing the property");
    with_ideal(minimal);
    minimal->add_option("--m-max", m_max, "search bound (default socle degree + 2)");
    form_opts.attach(minimal);
    minimal->callback([&] {
        Output output(out, json, "minimal-failing-m");
        output.add_input(path);
        exit_code = cmd_minimal_failing_m(path, m_max, form_opts, output);
        output.finish();
    });

    CLI::App* theorem = make("theorem-310", "three-way equivalence report");
    with_ideal(theorem);
    theorem->add_option("--m-max", m_max, "extension sweep bound (default socle degree + 2)");
    form_opts.attach(theorem);
    theorem->callback([&] {
        Output output(out, json, "theorem-310");
        output.add_input(path);
        exit_code = cmd_theorem_310(path, m_max, form_opts, output);
        output.finish();
    });

    CLI::App* char_p = make("char-p", "strong Lefschetz check over a prime field");
    with_ideal(char_p);
    char_p->add_option("--p", prime, "field characteristic (prime)")->required();
    form_opts.attach(char_p);
    char_p->callback([&] {
        Output output(out, json, "char-p");
        output.add_input(path);
        exit_code = cmd_char_p(path, prime, form_opts, output);
        output.finish();
    });

    CLI::App* ci = make("monomial-ci", "monomial complete intersection");
    ci->add_option("--exps", exps, "exponents a1,a2,...")->required();
    ci->add_flag("--emit-ideal", emit_ideal, "print only the ideal file");
    ci->callback([&] {
        Output output(out, json, "monomial-ci");
        exit_code = cmd_monomial_ci(exps, emit_ideal, output);
        if (!emit_ideal || json)
            output.finish();
    });

    CLI::App* harness = make("harness", "randomized property battery");
    harness->add_option("--seed", seed, "random seed");
    harness->add_option("--trials", trials, "number of random instances");
    harness->add_option("--max-vars", max_vars, "variable bound");
    harness->add_option("--max-socle", max_socle, "socle degree bound");
    harness->add_option("--witness-trials", witness_trials, "witness search trials per instance");
    harness->callback([&] {
        Output output(out, json, "harness");
        exit_code = cmd_harness(seed, trials, max_vars, max_socle, witness_trials, output);
        output.finish();
    });

    std::vector<const char*> argv;
    argv.push_back("slpcheck");
    for (const std::string& arg : args)
        argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace slp
