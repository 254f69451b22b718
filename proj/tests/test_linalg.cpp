#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqfm/linalg.hpp"
#include "uqfm/parallel.hpp"
#include "uqfm/rand.hpp"

using namespace uqfm;

namespace {

// Entries stay monomial-like: elimination systems in the library come
// from ladder matrices, not from dense random rational functions.
Matrix random_matrix(RandomSource& rng, int rows, int cols) {
    Matrix m(rows, Vec(cols));
    for (auto& row : m)
        for (auto& x : row)
            if (rng.int_in(0, 2) == 0)
                x = FieldElem::q_pow(rng.int_in(-2, 2)) * FieldElem(rng.int_in(1, 3));
    return m;
}

} // namespace

TEST_CASE("rref on a known system") {
    // x + y = 0, q x - q y = 0 has only the trivial solution
    Matrix rows = {{FieldElem(1), FieldElem(1)}, {FieldElem::q(), -FieldElem::q()}};
    RrefResult r = rref(rows);
    CHECK(r.rank == 2);
    CHECK(kernel_basis(rows, 2).empty());

    // x + q y = 0 has a one-dimensional kernel
    Matrix single = {{FieldElem(1), FieldElem::q()}};
    auto kb = kernel_basis(single, 2);
    REQUIRE(kb.size() == 1);
    CHECK(kb[0][0] == -FieldElem::q());
    CHECK(kb[0][1] == FieldElem(1));
}

TEST_CASE("kernel vectors satisfy the system") {
    RandomSource rng(2718);
    for (int t = 0; t < 20; ++t) {
        int rows_n = static_cast<int>(rng.int_in(2, 6));
        int cols_n = static_cast<int>(rng.int_in(2, 6));
        Matrix a = random_matrix(rng, rows_n, cols_n);
        auto kb = kernel_basis(a, cols_n);
        CHECK(static_cast<int>(kb.size()) == cols_n - rank(a));
        for (const Vec& v : kb) {
            for (const Vec& row : a) {
                FieldElem dot;
                for (int c = 0; c < cols_n; ++c) dot = dot + row[c] * v[c];
                CHECK(dot.is_zero());
            }
        }
    }
}

TEST_CASE("serial and OpenMP elimination agree bit for bit") {
    RandomSource rng(161803);
    Matrix a = random_matrix(rng, 16, 12);
    par::set_mode(par::Mode::Serial);
    RrefResult serial = rref(a);
    par::set_mode(par::Mode::OpenMP);
    RrefResult parallel = rref(a);
    par::set_mode(par::Mode::OpenMP);
    CHECK(serial.rank == parallel.rank);
    CHECK(serial.pivot_cols == parallel.pivot_cols);
    CHECK(serial.mat == parallel.mat);
}

TEST_CASE("span basis tracks rank and membership") {
    SpanBasis span(3);
    Vec v1 = {FieldElem(1), FieldElem::q(), FieldElem()};
    Vec v2 = {FieldElem(), FieldElem(1), FieldElem(1)};
    CHECK(span.insert(v1));
    CHECK(span.insert(v2));
    CHECK_FALSE(span.insert(v1));
    CHECK(span.rank() == 2);

    Vec combo(3);
    for (int i = 0; i < 3; ++i) combo[i] = v1[i] * FieldElem(2) - v2[i] * FieldElem::q_pow(3);
    CHECK(span.contains(combo));
    Vec outside = {FieldElem(), FieldElem(), FieldElem(1)};
    Vec mix(3);
    for (int i = 0; i < 3; ++i) mix[i] = combo[i] + outside[i];
    CHECK(span.contains(mix) == span.contains(outside));
}

TEST_CASE("sparse matrix product against dense expansion") {
    RandomSource rng(55);
    SparseMat a(4, 5), b(5, 3);
    for (int t = 0; t < 8; ++t)
        a.set(static_cast<int>(rng.int_in(0, 3)), static_cast<int>(rng.int_in(0, 4)),
              rng.field_elem(1, 2, true));
    for (int t = 0; t < 8; ++t)
        b.set(static_cast<int>(rng.int_in(0, 4)), static_cast<int>(rng.int_in(0, 2)),
              rng.field_elem(1, 2, true));
    SparseMat ab = a * b;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 3; ++c) {
            FieldElem dot;
            for (int k = 0; k < 5; ++k) dot = dot + a.at(r, k) * b.at(k, c);
            CHECK(ab.at(r, c) == dot);
        }
    }
}
