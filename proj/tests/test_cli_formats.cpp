#include <doctest.h>

#include <fstream>

#include "slp/diagram.hpp"
#include "slp/ideal_io.hpp"
#include "slp/module.hpp"
#include "slp/rank_table.hpp"

using namespace slp;

namespace {

const FieldSpec kQQ = FieldSpec::rationals();

MonomialIdeal ideal2(std::vector<std::vector<int>> gens) {
    std::vector<Monomial> monomials;
    for (auto& g : gens)
        monomials.push_back(Monomial{std::move(g)});
    return MonomialIdeal(2, std::move(monomials));
}

CyclicDecomposition decomp(std::vector<std::pair<int, int>> parts) {
    std::vector<CyclicSummand> summands;
    for (auto [i, d] : parts)
        summands.push_back({i, d});
    return CyclicDecomposition(std::move(summands));
}

}  // namespace

TEST_CASE("diagram of the running example") {
    auto m = module_from_ideal<Rational>(ideal2({{2, 0}, {1, 1}, {0, 5}}), kQQ);
    LinearForm<Rational> y = form_from_ints<Rational>(kQQ, {0, 1});
    CyclicDecomposition d = cyclic_decomposition(m, y);
    Diagram diagram = make_diagram(d, hilbert_series(m));

    CHECK(diagram.header == std::vector<int>{1, 2, 1, 1, 1});
    REQUIRE(diagram.rows.size() == 2);
    CHECK(diagram.rows[0].label == "S/(l^5)");
    CHECK(diagram.rows[0].support == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(diagram.rows[1].label == "S(-1)/(l)");
    CHECK(diagram.rows[1].support == std::vector<int>{0, 1, 0, 0, 0});

    CHECK(diagram.text() ==
          "          | 1 2 1 1 1\n"
          "S/(l^5)   | 1 1 1 1 1\n"
          "S(-1)/(l) | 0 1 0 0 0\n");
}

TEST_CASE("diagram of the order-3 extension") {
    auto ext = extend_module(module_from_ideal<Rational>(ideal2({{2, 0}, {1, 1}, {0, 5}}), kQQ), 3);
    LinearForm<Rational> yz = form_from_ints<Rational>(kQQ, {0, 1, 1});
    Diagram diagram = make_diagram(cyclic_decomposition(ext, yz), hilbert_series(ext));

    CHECK(diagram.header == std::vector<int>{1, 3, 4, 4, 3, 2, 1});
    REQUIRE(diagram.rows.size() == 4);
    CHECK(diagram.rows[0].support == std::vector<int>{1, 1, 1, 1, 1, 1, 1});
    CHECK(diagram.rows[1].support == std::vector<int>{0, 1, 1, 1, 1, 1, 0});
    CHECK(diagram.rows[2].support == std::vector<int>{0, 1, 1, 1, 0, 0, 0});
    CHECK(diagram.rows[3].support == std::vector<int>{0, 0, 1, 1, 1, 0, 0});
    CHECK(diagram.rows[1].label == "S(-1)/(l^5)");
    CHECK(diagram.rows[2].label == "S(-1)/(l^3)");
    CHECK(diagram.rows[3].label == "S(-2)/(l^3)");

    // rows are in strictly descending lexicographic order
    for (std::size_t i = 0; i + 1 < diagram.rows.size(); ++i)
        CHECK(diagram.rows[i].support > diagram.rows[i + 1].support);
}

TEST_CASE("diagram validation and degenerate cases") {
    Diagram tiny = make_diagram(decomp({{0, 1}}), HilbertSeries({1}));
    CHECK(tiny.text() == "      | 1\n"
                         "S/(l) | 1\n");

    // column sums must reproduce the header
    CHECK_THROWS_AS(make_diagram(decomp({{0, 2}}), HilbertSeries({1, 2})), Error);
    CHECK_THROWS_AS(make_diagram(decomp({{0, 3}}), HilbertSeries({1, 1})), Error);
}

TEST_CASE("ideal files parse and round-trip") {
    std::string text =
        "# running example\n"
        "vars: 2\n"
        "gens:\n"
        "2 0\n"
        "1 1\n"
        "0 5\n";
    MonomialIdeal parsed = parse_ideal_text(text);
    CHECK(parsed == ideal2({{2, 0}, {1, 1}, {0, 5}}));

    MonomialIdeal single = parse_ideal_text("vars: 1\ngens:\n1\n");
    CHECK(single.num_vars() == 1);
    CHECK(single.generators().size() == 1);

    // canonical form round-trips
    std::string canonical = format_ideal_file(parsed);
    CHECK(parse_ideal_text(canonical) == parsed);

    // the formatter emits generators in the fixed monomial order
    CHECK(canonical == "vars: 2\ngens:\n2 0\n1 1\n0 5\n");
}

TEST_CASE("parse errors carry positions") {
    auto fails_with = [](const std::string& text, const std::string& needle) {
        try {
            parse_ideal_text(text);
            return false;
        } catch (const Error& e) {
            return e.kind() == ErrorKind::ParseError &&
                   std::string(e.what()).find(needle) != std::string::npos;
        }
    };

    CHECK(fails_with("vars: 2\ngens:\n1 -1\n", "3:3"));        // negative exponent
    CHECK(fails_with("vars: 2\ngens:\n1\n", "expected"));      // too few exponents
    CHECK(fails_with("vars: 2\ngens:\n1 2 3\n", "trailing"));  // too many
    CHECK(fails_with("gens:\n1 1\n", "vars"));                 // missing header
    CHECK(fails_with("vars: 2\n", "gens"));                    // missing section
    CHECK(fails_with("vars: x\ngens:\n", "integer"));
    CHECK_THROWS_AS(parse_ideal_file("/nonexistent/path.ideal"), Error);
}

TEST_CASE("digests are stable and content-sensitive") {
    CHECK(text_digest("abc") == text_digest("abc"));
    CHECK(text_digest("abc") != text_digest("abd"));
    CHECK(text_digest("") == "fnv1a:cbf29ce484222325");
}
