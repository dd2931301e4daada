/*
 * Acceptance suite: one check per shipping criterion, each printing a
 * single pass/fail line with its runtime.  Run with no arguments for the
 * whole suite or with criterion numbers (1..8) for a subset; the exit
 * code is the number of failures.
 */

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "bertini/experiments.hpp"
#include "oracles.hpp"

using namespace bertini;

namespace {

const FieldTag Q = FieldTag::rationals();

struct Checker {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

VarietySpec quadric_surface() {
    return VarietySpec(Q, 3, 2, "quadric-surface", {parse_poly("x0*x3 - x1*x2", 4, Q)});
}

PointConfig two_base_points() {
    return PointConfig(
        Q, 3, {ProjPoint::from_ints(Q, {1, 0, 0, 0}), ProjPoint::from_ints(Q, {0, 0, 0, 1})});
}

PointConfig random_general_position(SplitMix64& rng, unsigned n, std::size_t q) {
    while (true) {
        std::vector<ProjPoint> pts;
        while (pts.size() < q) {
            std::vector<Scalar> c;
            bool nz = false;
            for (unsigned j = 0; j <= n; ++j) {
                Scalar v = Scalar::from_int(Q, rng.signed_bounded(20));
                nz |= !v.is_zero();
                c.push_back(v);
            }
            if (!nz) continue;
            ProjPoint p(std::move(c));
            bool dup = false;
            for (const auto& o : pts) dup |= o == p;
            if (!dup) pts.push_back(p);
        }
        PointConfig cfg(Q, n, std::move(pts));
        if (general_position(cfg)) return cfg;
    }
}

// ---------------------------------------------------------------------------

void criterion_1(Checker& c) {
    SplitMix64 rng(1001);
    for (unsigned n = 2; n <= 4; ++n)
        for (unsigned a = 2; a <= 3; ++a)
            for (std::size_t q = 1; q <= n + 1; ++q) {
                PointConfig cfg = random_general_position(rng, n, q);
                LinearSystem L = vanishing_system(cfg, a);
                std::size_t expected = binomial(n + a, n) - q;
                std::ostringstream what;
                what << "dim mismatch at n=" << n << " a=" << a << " q=" << q << ": got "
                     << L.dim() << ", want " << expected;
                c.expect(L.dim() == expected, what.str());
            }
    // the flagship counts
    PointConfig one(Q, 3, {ProjPoint::from_ints(Q, {1, 0, 0, 0})});
    c.expect(vanishing_system(one, 2).dim() == 9, "q=1 quadric space should have dimension 9");
    SplitMix64 rng2(1002);
    for (std::size_t q = 1; q <= 4; ++q) {
        LinearSystem L = vanishing_system(random_general_position(rng2, 3, q), 2);
        c.expect(L.dim() == 9 - (q - 1), "(n^2+3n)/2 - (q-1) violated at q=" + std::to_string(q));
    }
}

void criterion_2(Checker& c) {
    for (std::uint64_t p : {3ull, 5ull}) {
        FieldTag tag = FieldTag::prime_field(p);
        auto mons = monomial_basis(2, 2);
        std::vector<std::uint64_t> coeff(mons.size(), 0);
        std::size_t checked = 0;
        for (std::size_t lead = 0; lead < mons.size(); ++lead) {
            std::fill(coeff.begin(), coeff.end(), 0);
            coeff[lead] = 1;
            while (true) {
                MultiPoly h(tag, 3);
                for (std::size_t k = 0; k < mons.size(); ++k)
                    if (coeff[k]) h.add_term(mons[k], Scalar::residue(p, coeff[k]));
                bool det_zero = quadric_is_singular(h);
                bool brute = !singular_points_bruteforce(h, p).empty();
                if (det_zero != brute) {
                    c.expect(false, "disagreement over F_" + std::to_string(p) + " on " + h.str());
                    return;
                }
                ++checked;
                std::size_t j = mons.size();
                bool done = true;
                for (j = mons.size(); j-- > lead + 1;) {
                    if (coeff[j] + 1 < p) {
                        ++coeff[j];
                        done = false;
                        break;
                    }
                    coeff[j] = 0;
                }
                if (done) break;
            }
        }
        std::size_t expected = 0;
        std::uint64_t power = 1;
        for (int k = 0; k < 6; ++k) {
            expected += power;
            power *= p;
        }
        c.expect(checked == expected, "class sweep incomplete over F_" + std::to_string(p));
    }
}

void criterion_3(Checker& c) {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::jet_survey;
    cfg.variety = quadric_surface();
    cfg.points = two_base_points();
    cfg.degree = 2;
    cfg.field = FieldTag::prime_field(101);
    cfg.samples = 100;
    cfg.seed = 1;
    ExperimentReport rep = run_jet_survey(cfg);
    const auto& agg = rep.aggregates;
    c.expect(agg.at("rank_histogram").at("3").get<std::size_t>() == 100,
             "expected 100 non-base points of jet rank 3");
    c.expect(agg.at("rank_histogram").at("2").get<std::size_t>() == 2,
             "expected both base points at jet rank 2");
    c.expect(agg.at("stratification_ok").get<bool>(),
             "rank stratification (incl. zero constant columns) violated");
    c.expect(agg.at("generic_fiber_dim").get<long>() == 4, "generic fiber dimension != 4");
    c.expect(agg.at("base_fiber_dim").get<long>() == 5, "base fiber dimension != 5");
    c.expect(agg.at("dim_S").get<long>() == 6, "dim S != 6");
    c.expect(agg.at("dim_V").get<long>() == 7, "dim V != 7");
    c.expect(agg.at("margin").get<long>() == 1, "margin != 1");
}

void criterion_4(Checker& c) {
    SplitMix64 rng(1004);
    for (std::size_t q : {1u, 2u}) {
        PointConfig cfg = random_general_position(rng, 3, q);
        LinearSystem quadrics = vanishing_system(cfg, 2);
        for (unsigned a : {3u, 4u}) {
            LinearSystem lifted = lift_degree(quadrics, a);  // verifies internally as well
            for (unsigned i = 0; i <= 3; ++i) {
                Monomial shift(4, 0);
                shift[i] = a - 2;
                for (const auto& h : quadrics.basis()) {
                    std::ostringstream what;
                    what << "x" << i << "^" << (a - 2) << " * (" << h.str()
                         << ") escapes the degree-" << a << " system at q=" << q;
                    c.expect(lifted.contains(h.times_monomial(shift)), what.str());
                }
            }
        }
    }
}

void criterion_5(Checker& c) {
    auto fraction = [&](std::uint64_t p, std::uint64_t seed) {
        ExperimentConfig cfg;
        cfg.kind = ExperimentKind::bertini_sample;
        cfg.variety = quadric_surface();
        cfg.points = two_base_points();
        cfg.degree = 2;
        cfg.field = FieldTag::prime_field(p);
        cfg.trials = 500;
        cfg.seed = seed;
        ExperimentReport rep = run_bertini_experiment(cfg);
        return rep.aggregates.at("singular_fraction").get<double>();
    };
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        double f101 = fraction(101, seed);
        double f31 = fraction(31, seed);
        double f311 = fraction(311, seed);
        std::ostringstream what;
        what << "seed " << seed << ": f(101)=" << f101 << " f(31)=" << f31 << " f(311)=" << f311;
        c.expect(f101 <= 0.10, "singular fraction above 0.10 at p=101 — " + what.str());
        c.expect(f311 <= f31 + 0.02, "no shrink from p=31 to p=311 — " + what.str());
    }
}

void criterion_6(Checker& c) {
    FieldTag f101 = FieldTag::prime_field(101);
    VarietySpec x = quadric_surface().reduced_mod_p(101);
    ProjPoint pt = ProjPoint::from_ints(f101, {1, 2, 3, 6});
    c.expect(x.contains(pt), "chosen point is not on the quadric");

    // tangent hyperplane: the gradient direction (x3, -x2, -x1, x0)
    std::vector<Scalar> grad = {Scalar::from_int(f101, 6), Scalar::from_int(f101, -3),
                                Scalar::from_int(f101, -2), Scalar::from_int(f101, 1)};
    c.expect(tangent_hyperplane_test(x, grad, pt), "gradient hyperplane not detected as tangent");
    MultiPoly tangent(f101, 4);
    for (unsigned j = 0; j < 4; ++j) {
        Monomial m(4, 0);
        m[j] = 1;
        tangent.add_term(m, grad[j]);
    }
    SingularityReport singular_rep = smooth_intersection_check(x, tangent, 101);
    c.expect(singular_rep.verdict == Verdict::singular, "tangent section not reported singular");
    bool witness = false;
    for (const auto& w : singular_rep.singular_points) witness |= w == pt;
    c.expect(witness, "tangency point missing from the witness list");

    // a non-tangent hyperplane through the same point: (2,-1,0,0) . pt = 0
    std::vector<Scalar> c2 = {Scalar::from_int(f101, 2), Scalar::from_int(f101, -1),
                              Scalar::zero(f101), Scalar::zero(f101)};
    c.expect(!tangent_hyperplane_test(x, c2, pt), "transverse hyperplane misread as tangent");
    MultiPoly transverse(f101, 4);
    transverse.add_term({1, 0, 0, 0}, Scalar::from_int(f101, 2));
    transverse.add_term({0, 1, 0, 0}, Scalar::from_int(f101, -1));
    SingularityReport trans_rep = smooth_intersection_check(x, transverse, 101);
    for (const auto& w : trans_rep.singular_points)
        c.expect(w != pt, "transverse section flagged singular at the chosen point");
}

void criterion_7(Checker& c) {
    // Euler identity on 1000 random forms
    SplitMix64 rng(1007);
    for (int iter = 0; iter < 1000; ++iter) {
        unsigned nv = 2 + static_cast<unsigned>(rng.below(3));
        unsigned deg = 2 + static_cast<unsigned>(rng.below(3));
        MultiPoly p = oracles::random_form(rng, Q, nv, deg);
        c.expect(p.euler_check() == MultiPoly::EulerVerdict::holds,
                 "Euler identity failed on " + p.str());
    }
    // rank-nullity on 500 random matrices per domain
    for (FieldTag tag : {FieldTag::rationals(), FieldTag::prime_field(101)}) {
        SplitMix64 mrng(tag.is_rational() ? 1013 : 1019);
        for (int iter = 0; iter < 500; ++iter) {
            std::size_t rows = 1 + mrng.below(5), cols = 1 + mrng.below(6);
            Matrix m = oracles::random_matrix(mrng, tag, rows, cols);
            c.expect(m.rank() + m.kernel_basis().size() == cols,
                     "rank-nullity violated over " + tag.str());
        }
    }
    // parser round-trip on 100 forms
    SplitMix64 prng(1021);
    for (int iter = 0; iter < 100; ++iter) {
        unsigned nv = 2 + static_cast<unsigned>(prng.below(3));
        MultiPoly p = oracles::random_form(prng, Q, nv, 1 + prng.below(4));
        c.expect(parse_poly(p.str(), nv, Q) == p, "parser round-trip failed on " + p.str());
    }
    // coordinate equivariance under 20 invertible changes
    SplitMix64 erng(1031);
    PointConfig cfg = two_base_points();
    VarietySpec x = quadric_surface();
    LinearSystem L = vanishing_system(cfg, 2);
    ProjPoint generic = ProjPoint::from_ints(Q, {3, 5, 6, 10});
    for (int iter = 0; iter < 20; ++iter) {
        Matrix s = oracles::random_invertible(erng, Q, 4);
        Matrix s_inv = s.inverse();
        c.expect(general_position(cfg.transformed(s)) == general_position(cfg),
                 "general position not equivariant");
        LinearSystem moved = vanishing_system(cfg.transformed(s), 2);
        std::vector<std::vector<Scalar>> rows;
        for (const auto& h : L.basis())
            rows.push_back(moved.coefficients_of(h.linear_change(s_inv)));
        c.expect(Matrix::from_rows(Q, rows).rref() == moved.canonical_span(),
                 "vanishing system not equivariant");
        VarietySpec moved_x(Q, 3, 2, "moved", {x.generators()[0].linear_change(s_inv)});
        c.expect(xi_rank(moved, moved_x, generic.transformed(s)) == xi_rank(L, x, generic),
                 "jet rank not equivariant");
    }
}

void criterion_8(Checker& c) {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::bertini_sample;
    cfg.variety = quadric_surface();
    cfg.points = two_base_points();
    cfg.degree = 2;
    cfg.field = FieldTag::prime_field(31);
    cfg.trials = 50;
    cfg.seed = 42;
    c.expect(run_bertini_experiment(cfg).to_json_text() ==
                 run_bertini_experiment(cfg).to_json_text(),
             "bertini-sample reports differ across reruns");
    c.expect(run_bertini_experiment(cfg).to_csv_text() ==
                 run_bertini_experiment(cfg).to_csv_text(),
             "bertini-sample CSV differs across reruns");

    ExperimentConfig js;
    js.kind = ExperimentKind::jet_survey;
    js.variety = quadric_surface();
    js.points = two_base_points();
    js.degree = 2;
    js.field = FieldTag::prime_field(31);
    js.samples = 40;
    js.seed = 7;
    c.expect(run_jet_survey(js).to_json_text() == run_jet_survey(js).to_json_text(),
             "jet-survey reports differ across reruns");

    ExperimentConfig dd;
    dd.kind = ExperimentKind::disc_density;
    dd.points = PointConfig(Q, 2, {});
    dd.degree = 2;
    dd.field = FieldTag::prime_field(5);
    dd.trials = 200;
    dd.seed = 3;
    c.expect(run_disc_density(dd).to_json_text() == run_disc_density(dd).to_json_text(),
             "disc-density reports differ across reruns");
}

struct Criterion {
    int number;
    const char* label;
    double budget_seconds;
    std::function<void(Checker&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria = {
        {1, "exact dimension formulas for vanishing systems", 5.0, criterion_1},
        {2, "discriminant vs brute force, exhaustive over F_3 and F_5", 30.0, criterion_2},
        {3, "jet-rank stratification on the quadric surface", 10.0, criterion_3},
        {4, "degree lifting containment", 30.0, criterion_4},
        {5, "Monte Carlo smoothness of random members", 120.0, criterion_5},
        {6, "tangent hyperplane witness", 30.0, criterion_6},
        {7, "property suites (Euler, rank-nullity, parser, equivariance)", 60.0, criterion_7},
        {8, "byte-identical reports for fixed config and seed", 30.0, criterion_8},
    };

    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

    int failures = 0;
    for (auto& crit : criteria) {
        if (!wanted.empty() && !wanted.count(crit.number)) continue;
        Checker checker;
        auto start = std::chrono::steady_clock::now();
        try {
            crit.run(checker);
        } catch (const std::exception& e) {
            checker.expect(false, std::string("exception: ") + e.what());
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = elapsed < crit.budget_seconds;
        bool pass = checker.ok && in_budget;
        std::printf("[%s] criterion %d: %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", crit.number,
                    crit.label, elapsed,
                    in_budget ? "" : ", over budget");
        if (!checker.ok) std::printf("       %s\n", checker.detail.c_str());
        if (!pass) ++failures;
    }
    return failures;
}
