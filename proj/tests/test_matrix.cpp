#include <doctest.h>

#include "bertini/matrix.hpp"
#include "bertini/linear_system.hpp"
#include "oracles.hpp"

using namespace bertini;

namespace {

Matrix from_ints(FieldTag tag, const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<Scalar>> s;
    for (const auto& r : rows) {
        std::vector<Scalar> row;
        for (long long v : r) row.push_back(Scalar::from_int(tag, v));
        s.push_back(std::move(row));
    }
    return Matrix::from_rows(tag, s);
}

const FieldTag Q = FieldTag::rationals();

}  // namespace

TEST_CASE("rank of the identity") {
    CHECK(Matrix::identity(Q, 3).rank() == 3);
}

TEST_CASE("rank of simplex point coordinates with the first column dropped") {
    // q-1 = 3 points e_1, e_2, e_3 of P^3 written in the affine chart
    Matrix b = from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(b.rank() == 3);
}

TEST_CASE("vanishing-condition matrix for q = 3 points in P^3 has rank q-1") {
    // Points P_0 = (1,0,0,0), P_1, P_2 random with first coordinate 1 (so
    // none sits on the hyperplane at infinity).  Conditions on the degree-2
    // coefficients a_{0j}, a_{ij} of a form through P_0 are rows
    // (b_1..b_n, b_1^2, b_1 b_2, ..., b_n^2), one per further point.
    SplitMix64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::vector<long long>> affine(2, std::vector<long long>(3));
        for (auto& pt : affine)
            for (auto& v : pt) v = rng.signed_bounded(20);
        std::vector<std::vector<Scalar>> rows;
        for (const auto& b : affine) {
            std::vector<Scalar> row;
            for (long long v : b) row.push_back(Scalar::from_int(Q, v));
            for (int i = 0; i < 3; ++i)
                for (int j = i; j < 3; ++j)
                    row.push_back(Scalar::from_int(Q, b[i] * b[j]));
            rows.push_back(std::move(row));
        }
        Matrix a = Matrix::from_rows(Q, rows);
        REQUIRE(a.cols() == 9);
        // independence can only fail if the affine points coincide or one
        // is zero with the other zero too; regenerate in that case
        if (oracles::rank(oracles::to_qmat(a)) != 2) continue;
        CHECK(a.rank() == 2);
    }
}

TEST_CASE("kernel of the zero matrix is everything") {
    Matrix z(Q, 2, 3);
    auto basis = z.kernel_basis();
    CHECK(basis.size() == 3);
}

TEST_CASE("kernel of one vanishing condition at a coordinate point") {
    // degree-2 monomials in P^3 evaluated at (1,0,0,0): only x0^2 survives
    auto mons = monomial_basis(3, 2);
    REQUIRE(mons.size() == 10);
    Matrix row(Q, 1, 10);
    std::vector<Scalar> pt = {Scalar::from_int(Q, 1), Scalar::from_int(Q, 0),
                              Scalar::from_int(Q, 0), Scalar::from_int(Q, 0)};
    for (std::size_t k = 0; k < mons.size(); ++k) {
        Scalar v = Scalar::one(Q);
        for (unsigned j = 0; j < 4; ++j)
            if (mons[k][j]) v = v * pt[j].pow(mons[k][j]);
        row.set(0, k, v);
    }
    CHECK(row.kernel_basis().size() == 9);
}

TEST_CASE("kernel of three general-position conditions has dimension 7") {
    auto mons = monomial_basis(3, 2);
    std::vector<std::vector<long long>> pts = {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 2, 3, 5}};
    Matrix m(Q, 3, 10);
    for (std::size_t s = 0; s < pts.size(); ++s)
        for (std::size_t k = 0; k < mons.size(); ++k) {
            long long v = 1;
            for (unsigned j = 0; j < 4; ++j)
                for (unsigned e = 0; e < mons[k][j]; ++e) v *= pts[s][j];
            m.set(s, k, Scalar::from_int(Q, v));
        }
    CHECK(oracles::rank(oracles::to_qmat(m)) == 3);  // independent oracle
    auto basis = m.kernel_basis();
    CHECK(basis.size() == 7);
    for (const auto& v : basis) {
        auto img = m.apply(v);
        for (const auto& c : img) CHECK(c.is_zero());
    }
}

TEST_CASE("determinant examples") {
    Matrix two_i = from_ints(Q, {{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}});
    CHECK(two_i.det().str() == "16");

    // discriminant matrix of x1*x2 in P^2
    Matrix a = from_ints(Q, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}});
    CHECK(a.det().is_zero());
    CHECK(oracles::det_cofactor(oracles::to_qmat(a)) == 0);

    // discriminant matrix of x0*x1 + x2*x3 in P^3
    Matrix b = from_ints(Q, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    CHECK(b.det().str() == "1");
    CHECK(oracles::det_cofactor(oracles::to_qmat(b)) == 1);

    CHECK_THROWS_AS(Matrix(Q, 2, 3).det(), ShapeError);
}

TEST_CASE("rational determinants with fractional entries") {
    std::vector<std::vector<Scalar>> rows = {
        {Scalar::rational(1, 2), Scalar::rational(1, 3)},
        {Scalar::rational(1, 5), Scalar::rational(2, 7)},
    };
    Matrix m = Matrix::from_rows(Q, rows);
    // 1/2*2/7 - 1/3*1/5 = 1/7 - 1/15 = 8/105
    CHECK(m.det().str() == "8/105");
}

TEST_CASE("rank-nullity over both domains, 500 random matrices each") {
    for (FieldTag tag : {FieldTag::rationals(), FieldTag::prime_field(101)}) {
        SplitMix64 rng(tag.is_rational() ? 11 : 13);
        for (int iter = 0; iter < 500; ++iter) {
            std::size_t rows = 1 + rng.below(5);
            std::size_t cols = 1 + rng.below(6);
            Matrix m = oracles::random_matrix(rng, tag, rows, cols);
            auto basis = m.kernel_basis();
            CHECK(m.rank() + basis.size() == cols);
            for (const auto& v : basis)
                for (const auto& c : m.apply(v)) CHECK(c.is_zero());
        }
    }
}

TEST_CASE("determinant vanishing agrees with rank deficiency") {
    for (FieldTag tag : {FieldTag::rationals(), FieldTag::prime_field(31)}) {
        SplitMix64 rng(tag.is_rational() ? 17 : 19);
        for (int iter = 0; iter < 100; ++iter) {
            std::size_t n = 1 + rng.below(5);
            Matrix m = oracles::random_matrix(rng, tag, n, n);
            CHECK(m.det().is_zero() == (m.rank() < n));
        }
    }
}

TEST_CASE("fraction-free determinant matches cofactor expansion") {
    SplitMix64 rng(23);
    for (int iter = 0; iter < 50; ++iter) {
        std::size_t n = 1 + rng.below(4);
        Matrix m = oracles::random_matrix(rng, FieldTag::rationals(), n, n);
        CHECK(m.det().rat() == oracles::det_cofactor(oracles::to_qmat(m)));
    }
}

TEST_CASE("inverse round-trips and rejects singular input") {
    SplitMix64 rng(29);
    for (FieldTag tag : {FieldTag::rationals(), FieldTag::prime_field(13)}) {
        Matrix m = oracles::random_invertible(rng, tag, 4);
        CHECK(m * m.inverse() == Matrix::identity(tag, 4));
    }
    Matrix sing = from_ints(Q, {{1, 2}, {2, 4}});
    CHECK_THROWS_AS(sing.inverse(), InvalidTransformError);
}

TEST_CASE("mixed-domain entries are rejected") {
    Matrix m(Q, 2, 2);
    CHECK_THROWS_AS(m.set(0, 0, Scalar::from_int(FieldTag::prime_field(5), 1)),
                    FieldMismatchError);
}
