#include <doctest.h>

#include <algorithm>
#include <random>

#include "slp/module.hpp"
#include "slp/random_ideals.hpp"

using namespace slp;

namespace {

MonomialIdeal ideal2(std::vector<std::vector<int>> gens) {
    std::vector<Monomial> monomials;
    for (auto& g : gens)
        monomials.push_back(Monomial{std::move(g)});
    return MonomialIdeal(2, std::move(monomials));
}

MonomialIdeal ideal1(std::vector<int> exponents) {
    std::vector<Monomial> monomials;
    for (int e : exponents)
        monomials.push_back(Monomial{{e}});
    return MonomialIdeal(1, std::move(monomials));
}

// Independent oracle: count monomials x^a y^b with a < bound_a, b < bound_b
// of each total degree, without going through the ideal machinery.
std::vector<int> box_degree_counts(int bound_a, int bound_b) {
    std::vector<int> counts(bound_a + bound_b - 1, 0);
    for (int a = 0; a < bound_a; ++a)
        for (int b = 0; b < bound_b; ++b)
            ++counts[a + b];
    return counts;
}

std::vector<int> dims_of(const std::vector<std::vector<Monomial>>& basis) {
    std::vector<int> dims;
    for (const auto& block : basis)
        dims.push_back(static_cast<int>(block.size()));
    return dims;
}

template <typename K>
std::vector<int> module_dims(const GradedModule<K>& m) {
    std::vector<int> dims;
    for (int d = 0; d <= m.socle_degree(); ++d)
        dims.push_back(m.dim(d));
    return dims;
}

}  // namespace

TEST_CASE("monomial ideal minimalization and artinian predicate") {
    MonomialIdeal ex41 = ideal2({{2, 0}, {1, 1}, {0, 5}});
    CHECK(ex41.generators().size() == 3);
    CHECK(is_artinian(ex41));

    // redundant generator x^2*y is divisible by x^2
    MonomialIdeal redundant = ideal2({{2, 0}, {2, 1}, {0, 5}});
    CHECK(redundant.generators().size() == 2);

    CHECK_FALSE(is_artinian(ideal2({{1, 1}})));
    CHECK(is_artinian(ideal1({1})));

    CHECK_THROWS_AS(MonomialIdeal(2, {Monomial{{0, 0}}}), Error);
    CHECK_THROWS_AS(MonomialIdeal(2, {Monomial{{1, -1}}}), Error);
}

TEST_CASE("quotient basis of the running two-variable examples") {
    auto basis = quotient_basis(ideal2({{2, 0}, {1, 1}, {0, 5}}));
    CHECK(dims_of(basis) == std::vector<int>{1, 2, 1, 1, 1});
    // degree 1 block is (x, y) in the fixed order, higher degrees pure powers of y
    CHECK(basis[1][0] == Monomial{{1, 0}});
    CHECK(basis[1][1] == Monomial{{0, 1}});
    CHECK(basis[2][0] == Monomial{{0, 2}});
    CHECK(basis[4][0] == Monomial{{0, 4}});

    auto point = quotient_basis(ideal1({1}));
    CHECK(dims_of(point) == std::vector<int>{1});
    CHECK(point[0][0] == Monomial{{0}});

    auto ci = quotient_basis(ideal2({{3, 0}, {0, 5}}));
    CHECK(dims_of(ci) == box_degree_counts(3, 5));
    CHECK(dims_of(ci) == std::vector<int>{1, 2, 3, 3, 3, 2, 1});

    CHECK_THROWS_AS(quotient_basis(ideal2({{1, 1}})), Error);
}

TEST_CASE("module_from_ideal over the rationals and prime fields") {
    FieldSpec qq = FieldSpec::rationals();
    auto m41 = module_from_ideal<Rational>(ideal2({{2, 0}, {1, 1}, {0, 5}}), qq);
    CHECK(module_dims(m41) == std::vector<int>{1, 2, 1, 1, 1});
    CHECK(m41.total_dim() == 6);

    auto point = module_from_ideal<Rational>(ideal1({1}), qq);
    CHECK(module_dims(point) == std::vector<int>{1});
    CHECK(point.socle_degree() == 0);

    // dimensions of a monomial quotient do not depend on the field
    auto f7 = module_from_ideal<Zp>(ideal2({{3, 0}, {0, 5}}), FieldSpec::prime_field(7));
    CHECK(module_dims(f7) == std::vector<int>{1, 2, 3, 3, 3, 2, 1});

    CHECK_THROWS_AS(module_from_ideal<Rational>(ideal2({{1, 1}}), qq), Error);
}

TEST_CASE("module_from_maps validates shapes and commutation") {
    FieldSpec qq = FieldSpec::rationals();

    auto rank1 = module_from_maps<Rational>(qq, 1, {1}, {});
    CHECK(rank1.socle_degree() == 0);
    CHECK(rank1.total_dim() == 1);

    Matrix<Rational> one(1, 1), zero(1, 1);
    one.at(0, 0) = 1;
    auto two_step = module_from_maps<Rational>(qq, 2, {1, 1}, {{one}, {zero}});
    CHECK(two_step.socle_degree() == 1);

    // x then y lands on a different basis vector than y then x
    Matrix<Rational> x0(2, 1), y0(2, 1), x1(1, 2), y1(1, 2);
    x0.at(0, 0) = 1;
    y0.at(1, 0) = 1;
    x1.at(0, 0) = 1;
    y1.at(0, 0) = 1;
    CHECK_THROWS_AS(module_from_maps<Rational>(qq, 2, {1, 2, 1}, {{x0, x1}, {y0, y1}}), Error);

    CHECK_THROWS_AS(module_from_maps<Rational>(qq, 1, {0}, {}), Error);  // zero module
    CHECK_THROWS_AS(module_from_maps<Rational>(qq, 1, {1, 2}, {{zero}}), Error);  // needs 2x1 map
}

TEST_CASE("hilbert series of the worked quotients") {
    FieldSpec qq = FieldSpec::rationals();
    auto h41 = hilbert_series(module_from_ideal<Rational>(ideal2({{2, 0}, {1, 1}, {0, 5}}), qq));
    CHECK(h41.coeffs == std::vector<int>{1, 2, 1, 1, 1});
    CHECK(h41.socle_degree() == 4);

    // the two tensor-example quotients
    auto hm = hilbert_series(
        module_from_ideal<Rational>(ideal2({{3, 0}, {2, 1}, {1, 2}, {0, 4}}), qq));
    CHECK(hm.coeffs == std::vector<int>{1, 2, 3, 1});
    auto hn = hilbert_series(module_from_ideal<Rational>(ideal2({{2, 0}, {1, 1}, {0, 4}}), qq));
    CHECK(hn.coeffs == std::vector<int>{1, 2, 1, 1});
    // same generators with x^3 instead of x^2 keep x^2 as a standard monomial
    auto hn3 = hilbert_series(module_from_ideal<Rational>(ideal2({{3, 0}, {1, 1}, {0, 4}}), qq));
    CHECK(hn3.coeffs == std::vector<int>{1, 2, 2, 1});
}

TEST_CASE("multiplication matrices") {
    FieldSpec qq = FieldSpec::rationals();
    auto square = module_from_ideal<Rational>(ideal2({{2, 0}, {0, 2}}), qq);
    LinearForm<Rational> xy = all_ones_form<Rational>(qq, 2);
    Matrix<Rational> step0 = mult_matrix(square, xy, 0);
    REQUIRE(step0.rows() == 2);
    REQUIRE(step0.cols() == 1);
    CHECK(step0.at(0, 0) == 1);  // x
    CHECK(step0.at(1, 0) == 1);  // y

    auto x_only = module_from_ideal<Rational>(ideal1({2}), qq);
    Matrix<Rational> unit = mult_matrix(x_only, all_ones_form<Rational>(qq, 1), 0);
    REQUIRE(unit.rows() == 1);
    CHECK(unit.at(0, 0) == 1);

    auto m41 = module_from_ideal<Rational>(ideal2({{2, 0}, {1, 1}, {0, 5}}), qq);
    LinearForm<Rational> y = form_from_ints<Rational>(qq, {0, 1});
    Matrix<Rational> step1 = mult_matrix(m41, y, 1);
    REQUIRE(step1.rows() == 1);
    REQUIRE(step1.cols() == 2);
    CHECK(step1.at(0, 0) == 0);  // x*y lies in the ideal
    CHECK(step1.at(0, 1) == 1);  // y*y = y^2

    CHECK_THROWS_AS(mult_matrix(m41, y, 5), Error);
    CHECK_THROWS_AS(mult_matrix(m41, y, -1), Error);
}

TEST_CASE("exact rank basics") {
    Matrix<Rational> zero(3, 2);
    CHECK(exact_rank(zero) == 0);

    Matrix<Rational> id(4, 4);
    for (int i = 0; i < 4; ++i)
        id.at(i, i) = 1;
    CHECK(exact_rank(id) == 4);

    // l^2 = 2xy vanishes over F_2 on k[x,y]/(x^2,y^2)
    FieldSpec f2 = FieldSpec::prime_field(2);
    auto square = module_from_ideal<Zp>(ideal2({{2, 0}, {0, 2}}), f2);
    LinearForm<Zp> l = all_ones_form<Zp>(f2, 2);
    Matrix<Zp> power = mult_matrix(square, l, 1) * mult_matrix(square, l, 0);
    CHECK(exact_rank(power) == 0);

    // fractions participate exactly
    Matrix<Rational> frac(2, 2);
    frac.at(0, 0) = Rational(1, 2);
    frac.at(0, 1) = Rational(1, 3);
    frac.at(1, 0) = Rational(3, 2);
    frac.at(1, 1) = 1;
    CHECK(exact_rank(frac) == 1);
}

namespace {

// independent oracle: plain rational Gaussian elimination, no fraction-free
// tricks shared with the implementation under test
int naive_rank(Matrix<Rational> m) {
    int rank = 0, row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!is_zero(m.at(i, col))) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        for (int j = col; j < m.cols(); ++j)
            std::swap(m.at(pivot, j), m.at(row, j));
        for (int i = row + 1; i < m.rows(); ++i) {
            if (is_zero(m.at(i, col)))
                continue;
            Rational factor = m.at(i, col) / m.at(row, col);
            for (int j = col; j < m.cols(); ++j)
                m.at(i, j) -= factor * m.at(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("fraction-free rank agrees with naive rational elimination") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 60; ++round) {
        int rows = 1 + static_cast<int>(rng() % 7);
        int cols = 1 + static_cast<int>(rng() % 7);
        Matrix<Rational> m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                long num = static_cast<long>(rng() % 9) - 4;
                long den = 1 + static_cast<long>(rng() % 4);
                m.at(i, j) = Rational(num, den);
                m.at(i, j).canonicalize();
            }
        // plant some rank deficiency: duplicate a row now and then
        if (rows >= 2 && rng() % 2 == 0)
            for (int j = 0; j < cols; ++j)
                m.at(rows - 1, j) = m.at(0, j);
        CHECK(exact_rank(m) == naive_rank(m));
    }
}

TEST_CASE("exact rank is invariant under row permutation") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 25; ++round) {
        int rows = 1 + static_cast<int>(rng() % 6);
        int cols = 1 + static_cast<int>(rng() % 6);
        Matrix<Rational> m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m.at(i, j) = static_cast<long>(rng() % 7) - 3;
        std::vector<int> perm(rows);
        for (int i = 0; i < rows; ++i)
            perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Matrix<Rational> shuffled(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                shuffled.at(i, j) = m.at(perm[i], j);
        CHECK(exact_rank(m) == exact_rank(shuffled));
    }
}

TEST_CASE("tensor products") {
    FieldSpec qq = FieldSpec::rationals();
    auto m41 = module_from_ideal<Rational>(ideal2({{2, 0}, {1, 1}, {0, 5}}), qq);
    auto point = module_from_ideal<Rational>(ideal1({1}), qq);
    CHECK(module_dims(tensor_module(m41, point)) == module_dims(m41));

    auto x3 = module_from_ideal<Rational>(ideal1({3}), qq);
    auto y5 = module_from_ideal<Rational>(ideal1({5}), qq);
    auto product = tensor_module(x3, y5);
    CHECK(module_dims(product) == std::vector<int>{1, 2, 3, 3, 3, 2, 1});
    CHECK(product.num_vars() == 2);
    product.check_commutation();

    auto f7 = module_from_ideal<Zp>(ideal1({3}), FieldSpec::prime_field(7));
    CHECK_THROWS_AS(tensor_module(f7, module_from_ideal<Zp>(ideal1({2}), FieldSpec::prime_field(5))),
                    Error);
}

TEST_CASE("tensor dimensions are the convolution of factor dimensions") {
    std::mt19937_64 rng(11);
    RandomIdealParams params{2, 5, 2};
    FieldSpec qq = FieldSpec::rationals();
    for (int round = 0; round < 10; ++round) {
        auto a = module_from_ideal<Rational>(random_artinian_ideal(rng, params), qq);
        auto b = module_from_ideal<Rational>(random_artinian_ideal(rng, params), qq);
        auto product = tensor_module(a, b);
        CHECK(hilbert_series(product) == convolve(hilbert_series(a), hilbert_series(b)));
        product.check_commutation();
    }
}

TEST_CASE("extensions by truncated polynomial rings") {
    FieldSpec qq = FieldSpec::rationals();
    auto m41 = module_from_ideal<Rational>(ideal2({{2, 0}, {1, 1}, {0, 5}}), qq);

    CHECK(module_dims(extend_module(m41, 1)) == module_dims(m41));

    auto ext3 = extend_module(m41, 3);
    CHECK(module_dims(ext3) == std::vector<int>{1, 3, 4, 4, 3, 2, 1});
    CHECK(ext3.total_dim() == 18);
    CHECK(ext3.num_vars() == 3);
    ext3.check_commutation();

    CHECK(extend_module(m41, 2).total_dim() == 2 * m41.total_dim());
    CHECK_THROWS_AS(extend_module(m41, 0), Error);
}

TEST_CASE("extension dimension is multiplicative for m up to 10") {
    std::mt19937_64 rng(13);
    RandomIdealParams params{3, 5, 2};
    FieldSpec qq = FieldSpec::rationals();
    for (int round = 0; round < 5; ++round) {
        auto m = module_from_ideal<Rational>(random_artinian_ideal(rng, params), qq);
        for (int order = 1; order <= 10; ++order)
            CHECK(extend_module(m, order).total_dim() == order * m.total_dim());
    }
}

TEST_CASE("shift bookkeeping") {
    FieldSpec qq = FieldSpec::rationals();
    auto m = module_from_ideal<Rational>(ideal1({2}), qq);
    CHECK(module_dims(shift_module(m, 0)) == module_dims(m));
    CHECK(shift_module(m, 0).shift() == 0);

    auto shifted = shift_module(m, 2);
    CHECK(shifted.presented_dims() == std::vector<int>{0, 0, 1, 1});
    CHECK(module_dims(shifted) == std::vector<int>{1, 1});  // normalized view

    // presented dimensions are the coefficient-shifted Hilbert series
    auto h = hilbert_series(m);
    auto presented = shifted.presented_dims();
    for (int d = 0; d < static_cast<int>(presented.size()); ++d)
        CHECK(presented[d] == h.at(d - 2));

    // leading zero dims normalize into the shift
    Matrix<Rational> one(1, 1);
    one.at(0, 0) = 1;
    auto from_zeros = module_from_maps<Rational>(qq, 1, {0, 0, 1, 1}, {{Matrix<Rational>(0, 0), Matrix<Rational>(1, 0), one}});
    CHECK(from_zeros.shift() == 2);
    CHECK(module_dims(from_zeros) == std::vector<int>{1, 1});
}

TEST_CASE("quotient basis sizes match the Hilbert series") {
    std::mt19937_64 rng(17);
    RandomIdealParams params{3, 6, 3};
    FieldSpec qq = FieldSpec::rationals();
    for (int round = 0; round < 15; ++round) {
        MonomialIdeal ideal = random_artinian_ideal(rng, params);
        auto basis = quotient_basis(ideal);
        auto h = hilbert_series(module_from_ideal<Rational>(ideal, qq));
        REQUIRE(basis.size() == h.coeffs.size());
        for (std::size_t d = 0; d < basis.size(); ++d)
            CHECK(static_cast<int>(basis[d].size()) == h.coeffs[d]);
    }
}

TEST_CASE("variable maps commute on random instances including products") {
    std::mt19937_64 rng(19);
    RandomIdealParams params{3, 5, 3};
    FieldSpec qq = FieldSpec::rationals();
    for (int round = 0; round < 8; ++round) {
        auto m = module_from_ideal<Rational>(random_artinian_ideal(rng, params), qq);
        m.check_commutation();
        extend_module(m, 2 + static_cast<int>(rng() % 3)).check_commutation();
    }
}
