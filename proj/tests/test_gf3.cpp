#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "golay486/gf3.hpp"

using namespace golay486;
using namespace golay486::gf3;

namespace {

Vector random_vector(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(0, 2);
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, static_cast<Element>(d(rng)));
    return v;
}

Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(random_vector(c, rng));
    return Matrix(std::move(rows), c);
}

}  // namespace

TEST_CASE("field tables") {
    CHECK(add(2, 2) == 1);
    CHECK(add(1, 2) == 0);
    CHECK(mul(2, 2) == 1);
    CHECK(neg(1) == 2);
    CHECK(neg(0) == 0);
    for (Element a = 1; a < 3; ++a) CHECK(mul(a, inv(a)) == 1);
}

TEST_CASE("vector construction and text") {
    CHECK_THROWS_AS(Vector(std::vector<Element>{0, 3}), InputError);
    const Vector v{2, 1, 0};
    CHECK(to_string(v) == "210");
    CHECK(vector_from_string("210") == v);
    CHECK_THROWS_AS(vector_from_string("2a0"), ParseError);
    CHECK(hamming_weight(v) == 2);
    CHECK(canonical_scaling(v) == Vector{1, 2, 0});
    CHECK(canonical_scaling(Vector(3)) == Vector(3));
    CHECK(Vector::unit(4, 2, 2) == Vector{0, 0, 2, 0});
}

TEST_CASE("vector operations on mismatched lengths") {
    CHECK_THROWS_AS(vec_add(Vector(2), Vector(3)), DimensionError);
    CHECK_THROWS_AS(dot(Vector(2), Vector(3)), DimensionError);
}

TEST_CASE("vector arithmetic properties") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto u = random_vector(9, rng);
        const auto v = random_vector(9, rng);
        const auto w = random_vector(9, rng);
        CHECK(vec_add(u, v) == vec_add(v, u));
        CHECK(vec_add(vec_add(u, v), w) == vec_add(u, vec_add(v, w)));
        CHECK(vec_add(u, vec_neg(u)).is_zero());
        CHECK(vec_sub(u, v) == vec_add(u, vec_neg(v)));
        CHECK(vec_scale(2, vec_scale(2, u)) == u);
        CHECK(dot(vec_add(u, v), w) == add(dot(u, w), dot(v, w)));
        CHECK(hamming_weight(vec_scale(2, u)) == hamming_weight(u));
    }
}

TEST_CASE("packed addition agrees with the byte path on all element pairs") {
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            const Vector x{a};
            const Vector y{b};
            CHECK(unpack(packed_add(pack(x), pack(y)), 1) == vec_add(x, y));
            CHECK(unpack(packed_neg(pack(x)), 1) == vec_neg(x));
        }
    }
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto u = random_vector(64, rng);
        const auto v = random_vector(64, rng);
        CHECK(unpack(packed_add(pack(u), pack(v)), 64) == vec_add(u, v));
        CHECK(packed_weight(pack(u)) == hamming_weight(u));
    }
    CHECK_THROWS_AS(pack(Vector(65)), DimensionError);
}

TEST_CASE("rref examples") {
    const Matrix m({Vector{1, 2, 0}, Vector{2, 1, 0}, Vector{0, 0, 1}});
    const auto r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivot_columns == std::vector<std::size_t>{0, 2});
    CHECK(r.matrix.row(0) == Vector{1, 2, 0});
    CHECK(r.matrix.row(1) == Vector{0, 0, 1});
    CHECK(r.matrix.row(2).is_zero());
    CHECK(row_space_basis(m).row_count() == 2);
}

TEST_CASE("rref properties") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = random_matrix(1 + trial % 7, 2 + trial % 9, rng);
        const auto r = rref(m);
        CHECK(rref(r.matrix).matrix == r.matrix);
        CHECK(same_row_space(m, r.matrix));
        CHECK(rank(transpose(m)) == r.rank);
        // Rank-nullity, and the null space really is annihilated.
        const auto ns = null_space(m);
        CHECK(ns.row_count() + r.rank == m.col_count());
        for (const auto& x : ns.rows()) CHECK(apply(m, x).is_zero());
    }
}

TEST_CASE("solve_combination") {
    const Matrix basis({Vector{1, 0, 1}, Vector{0, 1, 1}});
    const auto x = solve_combination(basis, Vector{2, 1, 0});
    REQUIRE(x);
    CHECK(*x == Vector{2, 1});
    CHECK_FALSE(solve_combination(basis, Vector{1, 0, 0}));
    CHECK_THROWS_AS(solve_combination(Matrix({Vector{1, 1}, Vector{2, 2}}), Vector{1, 1}), InputError);
    CHECK(in_row_space(basis, Vector{1, 1, 2}));
}

TEST_CASE("matrix text round trip and errors") {
    const Matrix m({Vector{1, 2, 0}, Vector{0, 0, 1}});
    CHECK(matrix_from_text(to_text(m)) == m);
    CHECK(matrix_from_text("", 4).col_count() == 4);
    CHECK_THROWS_AS(matrix_from_text("120\n01\n"), ParseError);
    try {
        matrix_from_text("120\n0x1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("delete_column") {
    const Matrix m({Vector{1, 2, 0}, Vector{0, 0, 1}});
    CHECK(delete_column(m, 1) == Matrix({Vector{1, 0}, Vector{0, 1}}));
    CHECK_THROWS_AS(delete_column(m, 3), InputError);
}

TEST_CASE("enumerate_subspace") {
    const Matrix basis({Vector{1, 0, 1}, Vector{0, 1, 1}});
    const auto all = enumerate_subspace(basis);
    CHECK(all.size() == 9);
    CHECK(all.front().is_zero());
    CHECK(all[1] == Vector{0, 1, 1});
    CHECK(std::set<Vector>(all.begin(), all.end()).size() == 9);
    CHECK_THROWS_AS(enumerate_subspace(Matrix({Vector{1, 1}, Vector{2, 2}})), InputError);
}

TEST_CASE("canonical functionals count (3^d - 1) / 2") {
    for (std::size_t d = 1; d <= 6; ++d) {
        const auto fs = canonical_functionals(d);
        std::size_t expected = 1;
        for (std::size_t i = 0; i < d; ++i) expected *= 3;
        CHECK(fs.size() == (expected - 1) / 2);
        CHECK(std::is_sorted(fs.begin(), fs.end()));
        for (const auto& f : fs) CHECK(canonical_scaling(f) == f);
    }
}

TEST_CASE("intermediate hyperplanes of a small subspace") {
    // In GF(3)^4, hyperplanes containing span(e_3) number 13; 4 of them contain e_0.
    const Matrix sub({Vector::unit(4, 3)});
    const auto h = intermediate_hyperplanes(sub, Vector::unit(4, 0));
    CHECK(h.total_classes == 13);
    CHECK(h.excluded_count == 4);
    CHECK(h.kept.size() == 9);
    for (const auto& u : h.kept) {
        CHECK(u.basis.row_count() == 3);
        CHECK(dot(u.functional, Vector::unit(4, 3)) == 0);
        CHECK(dot(u.functional, Vector::unit(4, 0)) != 0);
        for (const auto& r : u.basis.rows()) CHECK(dot(u.functional, r) == 0);
    }
}
