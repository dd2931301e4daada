#include <doctest.h>

#include <set>

#include "bertini/linear_system.hpp"
#include "oracles.hpp"

using namespace bertini;

namespace {
const FieldTag Q = FieldTag::rationals();

PointConfig random_general_position(SplitMix64& rng, unsigned n, std::size_t q, FieldTag tag) {
    while (true) {
        std::vector<ProjPoint> pts;
        while (pts.size() < q) {
            std::vector<Scalar> c;
            bool nz = false;
            for (unsigned j = 0; j <= n; ++j) {
                Scalar v = oracles::random_scalar(rng, tag, 20);
                nz |= !v.is_zero();
                c.push_back(v);
            }
            if (!nz) continue;
            ProjPoint p(std::move(c));
            bool dup = false;
            for (const auto& o : pts) dup |= o == p;
            if (!dup) pts.push_back(p);
        }
        PointConfig cfg(tag, n, std::move(pts));
        if (general_position(cfg)) return cfg;
    }
}

PointConfig single_point_cfg() {
    return PointConfig(Q, 3, {ProjPoint::from_ints(Q, {1, 0, 0, 0})});
}
}  // namespace

TEST_CASE("monomial bases have the right size and order") {
    auto m12 = monomial_basis(1, 2);
    REQUIRE(m12.size() == 3);
    CHECK(m12[0] == Monomial{2, 0});
    CHECK(m12[1] == Monomial{1, 1});
    CHECK(m12[2] == Monomial{0, 2});
    CHECK(monomial_basis(3, 2).size() == 10);
    CHECK(monomial_basis(4, 3).size() == 35);
    CHECK(monomial_basis(4, 3).size() == oracles::binomial(7, 3));
    CHECK(binomial(7, 3) == oracles::binomial(7, 3));
    CHECK_THROWS_AS(monomial_basis(3, 0), ConfigError);
}

TEST_CASE("quadrics through one point of P^3 form a 9-dimensional space") {
    LinearSystem L = vanishing_system(single_point_cfg(), 2);
    CHECK(L.dim() == 9);
    CHECK(system_dimension(L).projective_dim == 8);
}

TEST_CASE("quadrics through three general-position points have dimension 7") {
    SplitMix64 rng(41);
    PointConfig cfg = random_general_position(rng, 3, 3, Q);
    LinearSystem L = vanishing_system(cfg, 2);
    CHECK(L.dim() == 7);
}

TEST_CASE("no points means the full space of forms") {
    LinearSystem L = vanishing_system(PointConfig(Q, 3, {}), 2);
    CHECK(L.dim() == 10);
    LinearSystem cubics = vanishing_system(PointConfig(Q, 2, {}), 3);
    CHECK(cubics.dim() == 10);  // C(5,3)
}

TEST_CASE("system dimensions match the projective count") {
    SplitMix64 rng(43);
    LinearSystem L = vanishing_system(random_general_position(rng, 3, 2, Q), 2);
    CHECK(system_dimension(L).projective_dim == 7);
    LinearSystem M = vanishing_system(random_general_position(rng, 2, 1, Q), 2);
    CHECK(system_dimension(M).vector_dim == 5);
}

TEST_CASE("general-position conditions are independent for every n <= 4, a <= 3") {
    SplitMix64 rng(47);
    for (unsigned n = 2; n <= 4; ++n)
        for (unsigned a = 2; a <= 3; ++a)
            for (std::size_t q = 1; q <= n + 1; ++q) {
                PointConfig cfg = random_general_position(rng, n, q, Q);
                LinearSystem L = vanishing_system(cfg, a);
                CHECK(L.dim() == binomial(n + a, n) - q);
            }
}

TEST_CASE("basis members are homogeneous, Euler-clean, and vanish at base points") {
    SplitMix64 rng(53);
    PointConfig cfg = random_general_position(rng, 3, 3, Q);
    LinearSystem L = vanishing_system(cfg, 2);
    for (const auto& h : L.basis()) {
        CHECK(*h.homogeneous_degree() == 2);
        CHECK(h.euler_check() == MultiPoly::EulerVerdict::holds);
        for (const auto& p : cfg.points()) CHECK(h.eval(p.coords()).is_zero());
    }
}

TEST_CASE("random members vanish at every base point") {
    SplitMix64 rng(59);
    FieldTag f101 = FieldTag::prime_field(101);
    PointConfig cfg = random_general_position(rng, 3, 2, f101);
    LinearSystem L = vanishing_system(cfg, 2);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        MultiPoly h = random_member(L, seed);
        CHECK(!h.is_zero());
        for (const auto& p : cfg.points()) CHECK(h.eval(p.coords()).is_zero());
    }
}

TEST_CASE("a singleton basis yields scalar multiples") {
    // two points on P^1 leave exactly one conic through them
    PointConfig cfg(Q, 1,
                    {ProjPoint::from_ints(Q, {1, 0}), ProjPoint::from_ints(Q, {0, 1})});
    LinearSystem L = vanishing_system(cfg, 2);
    REQUIRE(L.dim() == 1);
    MultiPoly h = random_member(L, 4);
    MultiPoly b = L.basis()[0];
    // h = c * b for a nonzero scalar c
    Scalar c = h.terms().begin()->second / b.terms().begin()->second;
    CHECK(!c.is_zero());
    CHECK(h == b.scaled(c));
}

TEST_CASE("distinct seeds give distinct members with overwhelming frequency") {
    SplitMix64 rng(61);
    FieldTag f101 = FieldTag::prime_field(101);
    PointConfig cfg = random_general_position(rng, 3, 2, f101);
    LinearSystem L = vanishing_system(cfg, 2);
    std::set<std::string> seen;
    const int draws = 200;
    for (std::uint64_t seed = 0; seed < draws; ++seed) seen.insert(random_member(L, seed).str());
    CHECK(seen.size() >= draws - draws / 100);  // collision fraction < 1%
}

TEST_CASE("sampling an empty system is an error") {
    // three distinct points kill all three conic monomials on P^1
    PointConfig cfg(Q, 1,
                    {ProjPoint::from_ints(Q, {1, 0}), ProjPoint::from_ints(Q, {0, 1}),
                     ProjPoint::from_ints(Q, {1, 1})});
    LinearSystem L = vanishing_system(cfg, 2);
    REQUIRE(L.dim() == 0);
    CHECK(system_dimension(L).projective_dim == -1);
    CHECK_THROWS_AS(random_member(L, 1), EmptySystemError);
}

TEST_CASE("degree lifting verifies the shift containment") {
    LinearSystem L = vanishing_system(single_point_cfg(), 2);
    LinearSystem cubics = lift_degree(L, 3);
    CHECK(cubics.dim() == 19);  // C(6,3) - 1
    // spot-check the containment from outside as well
    Monomial x2(4, 0);
    x2[2] = 1;
    for (const auto& h : L.basis()) CHECK(cubics.contains(h.times_monomial(x2)));

    SplitMix64 rng(67);
    PointConfig two = random_general_position(rng, 3, 2, Q);
    LinearSystem L2 = vanishing_system(two, 2);
    LinearSystem quartics = lift_degree(L2, 4);
    CHECK(quartics.dim() == binomial(7, 3) - 2);
    Monomial x0sq(4, 0);
    x0sq[0] = 2;
    for (const auto& h : L2.basis()) CHECK(quartics.contains(h.times_monomial(x0sq)));

    CHECK_THROWS_AS(lift_degree(L, 2), ConfigError);
    CHECK_THROWS_AS(lift_degree(L, 1), ConfigError);
}

TEST_CASE("membership testing distinguishes inside from outside") {
    LinearSystem L = vanishing_system(single_point_cfg(), 2);
    CHECK(L.contains(L.basis()[0] + L.basis()[1].scaled(Scalar::from_int(Q, -3))));
    // x0^2 does not vanish at (1,0,0,0)
    MultiPoly x0sq(Q, 4);
    x0sq.add_term({2, 0, 0, 0}, Scalar::one(Q));
    CHECK(!L.contains(x0sq));
}

TEST_CASE("vanishing systems are coordinate-equivariant") {
    SplitMix64 rng(71);
    for (FieldTag tag : {FieldTag::rationals(), FieldTag::prime_field(31)}) {
        PointConfig cfg = random_general_position(rng, 3, 2, tag);
        LinearSystem L = vanishing_system(cfg, 2);
        for (int iter = 0; iter < 10; ++iter) {
            Matrix t = oracles::random_invertible(rng, tag, 4);
            LinearSystem moved = vanishing_system(cfg.transformed(t), 2);
            // members of the moved system are exactly {h o t^{-1} : h in L}
            Matrix t_inv = t.inverse();
            std::vector<std::vector<Scalar>> rows;
            for (const auto& h : L.basis())
                rows.push_back(moved.coefficients_of(h.linear_change(t_inv)));
            Matrix image = Matrix::from_rows(tag, rows).rref();
            CHECK(image == moved.canonical_span());
        }
    }
}
