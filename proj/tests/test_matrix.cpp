#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pirlrc/constructions.hpp"
#include "pirlrc/matrix.hpp"

using namespace pirlrc;

namespace {
Matrix mat(const Field& f, std::size_t r, std::size_t c, Vec entries) {
    return Matrix(f, r, c, std::move(entries));
}
}  // namespace

TEST_CASE("rref and rank") {
    Field f2 = Field::make(2, 1);
    CHECK(mat(f2, 2, 2, {1, 1, 1, 1}).rank() == 1);

    Matrix id3(f2, 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
    auto res = id3.rref();
    CHECK(res.rank == 3);
    CHECK(res.pivot_columns == std::vector<std::size_t>{0, 1, 2});
    CHECK(res.rref == id3);

    Field f5 = Field::make(5, 1);
    CHECK(mat(f5, 2, 4, {1, 1, 1, 1, 0, 1, 2, 3}).rank() == 2);
}

TEST_CASE("rref transform reproduces the rref") {
    Field f5 = Field::make(5, 1);
    Matrix a = mat(f5, 3, 4, {1, 2, 3, 4, 2, 4, 1, 3, 0, 0, 4, 4});
    auto res = a.rref();
    for (std::size_t i = 0; i < a.rows(); ++i)
        CHECK(a.vec_mul(res.transform.row(i)) == res.rref.row(i));
    CHECK(res.rank <= 3);
}

TEST_CASE("row space membership with certificate") {
    Field f2 = Field::make(2, 1);
    Matrix a = mat(f2, 2, 3, {1, 1, 0, 0, 1, 0});

    auto zero = a.row_space_membership({0, 0, 0});
    CHECK(zero.member);
    CHECK(zero.coefficients == Vec{0, 0});

    auto e1 = a.row_space_membership({1, 0, 0});
    CHECK(e1.member);
    CHECK(e1.coefficients == Vec{1, 1});
    CHECK(a.vec_mul(e1.coefficients) == Vec{1, 0, 0});

    CHECK_FALSE(a.row_space_membership({0, 0, 1}).member);
    CHECK_THROWS(a.row_space_membership({1, 0}));
}

TEST_CASE("certificates verify on random-ish GF(5) rows") {
    Field f5 = Field::make(5, 1);
    Matrix a = mat(f5, 2, 4, {1, 1, 1, 1, 0, 1, 2, 3});
    for (Elem u0 : f5.elements())
        for (Elem u1 : f5.elements()) {
            Vec v = a.vec_mul({u0, u1});
            auto cert = a.row_space_membership(v);
            CHECK(cert.member);
            CHECK(a.vec_mul(cert.coefficients) == v);
        }
}

TEST_CASE("null space basis") {
    Field f2 = Field::make(2, 1);
    Matrix id4(f2, 4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
    CHECK(id4.null_space_basis().rows() == 0);

    Matrix parity = mat(f2, 1, 3, {1, 1, 1});
    Matrix ns = parity.null_space_basis();
    CHECK(ns.rows() == 2);
    CHECK(ns.rank() == 2);
    for (std::size_t i = 0; i < ns.rows(); ++i)
        CHECK(parity.mul_vec(ns.row(i)) == Vec{0});

    Matrix pac = partition_and_code(6, 2, f2);
    CHECK(pac.null_space_basis().rows() == 4);
}

TEST_CASE("column permutation uses the pull convention") {
    Field f5 = Field::make(5, 1);
    Matrix a = mat(f5, 1, 3, {1, 2, 3});

    CHECK(a.permute_columns({0, 1, 2}) == a);
    // output column i = input column pi[i]
    CHECK(a.permute_columns({2, 0, 1}) == mat(f5, 1, 3, {3, 1, 2}));

    std::vector<std::size_t> pi = {2, 0, 1}, inv(3);
    for (std::size_t i = 0; i < 3; ++i) inv[pi[i]] = i;
    CHECK(a.permute_columns(pi).permute_columns(inv) == a);

    CHECK_THROWS(a.permute_columns({0, 0, 1}));
    CHECK_THROWS(a.permute_columns({0, 1}));
}

TEST_CASE("permutation preserves rank and column multiset") {
    Field f2 = Field::make(2, 1);
    Matrix a = partition_and_code(6, 2, f2);
    Matrix b = a.permute_columns({3, 4, 5, 0, 1, 2});
    CHECK(b.rank() == a.rank());
    std::vector<Vec> ca, cb;
    for (std::size_t j = 0; j < 6; ++j) {
        ca.push_back(a.col(j));
        cb.push_back(b.col(j));
    }
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    CHECK(ca == cb);
}

TEST_CASE("unit selector") {
    Field f2 = Field::make(2, 1);
    CHECK(unit_selector(f2, {1}, 3) == mat(f2, 1, 3, {0, 1, 0}));
    CHECK(unit_selector(f2, {0, 2}, 3) == mat(f2, 2, 3, {1, 0, 0, 0, 0, 1}));
    CHECK_THROWS(unit_selector(f2, {3}, 3));
    CHECK_THROWS(unit_selector(f2, {1, 1}, 3));
}

TEST_CASE("vstack and column submatrix") {
    Field f3 = Field::make(3, 1);
    Matrix a = mat(f3, 1, 3, {1, 2, 0});
    Matrix b = mat(f3, 1, 3, {0, 1, 1});
    Matrix s = a.vstack(b);
    CHECK(s.rows() == 2);
    CHECK(s.row(0) == Vec{1, 2, 0});
    CHECK(s.row(1) == Vec{0, 1, 1});
    CHECK(s.submatrix_cols({2, 0}) == mat(f3, 2, 2, {0, 1, 1, 0}));
}
