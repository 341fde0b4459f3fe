#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bilmul/construct.hpp"
#include "slp_interpreter.hpp"

using namespace bilmul;

namespace {

BinaryPoly random_poly_below(std::mt19937_64& rng, int degree_bound) {
    BinaryPoly p;
    for (int i = 0; i <= degree_bound; ++i)
        if (rng() & 1) p.set_coeff(i, true);
    return p;
}

// Independent oracle for the minimum plan cost: walk every multiplicity
// assignment and track the cheapest capacity-feasible cost, nothing else.
int min_cost_by_exhaustion(int n) {
    const auto& inv = place_inventory();
    int best = -1;
    std::vector<int> u(inv.size(), 0);
    while (true) {
        int cap = 0, cost = 0;
        for (std::size_t i = 0; i < inv.size(); ++i) {
            cap += u[i] * inv[i].degree;
            if (u[i] > 0) cost += place_cost(inv[i].degree, u[i]);
        }
        if (cap >= 2 * n - 1 && (best < 0 || cost < best)) best = cost;
        std::size_t i = 0;
        while (i < inv.size() && ++u[i] == 3) u[i++] = 0;
        if (i == inv.size()) break;
    }
    return best;
}

}  // namespace

TEST_CASE("place inventory") {
    const auto& inv = place_inventory();
    REQUIRE(inv.size() == 7);
    int cap = 0;
    for (const auto& p : inv) {
        cap += 2 * p.degree;
        if (!p.is_infinity()) CHECK(is_irreducible(p.modulus));
    }
    CHECK(cap == 34);  // enough for 2n-1 up to n = 17
}

TEST_CASE("plans for the known small cases") {
    EvaluationPlan p2 = plan_places(2);
    CHECK(p2.rank == 3);
    REQUIRE(p2.assignments.size() == 3);
    for (const auto& as : p2.assignments) {
        CHECK(as.place.degree == 1);
        CHECK(as.u == 1);
    }

    EvaluationPlan p3 = plan_places(3);
    CHECK(p3.rank == 6);
    CHECK(p3.counts.N1 == 3);
    CHECK(p3.counts.N2 == 1);
    CHECK(p3.counts.l1 + p3.counts.l2 + p3.counts.l4 == 0);

    EvaluationPlan p4 = plan_places(4);
    CHECK(p4.rank == 10);
    CHECK(p4.counts.N1 == 3);
    CHECK(p4.counts.l1 == 2);
    CHECK(p4.counts.N2 == 1);
    // The tie-break puts the double evaluations on the finite rational
    // places x and x+1.
    CHECK(p4.assignments[0].u == 2);
    CHECK(p4.assignments[1].u == 2);
    CHECK(p4.assignments[2].u == 1);
    CHECK(p4.assignments[2].place.is_infinity());
}

TEST_CASE("plan cost matches the exhaustive oracle") {
    // Frozen from the oracle below; doubles as a regression table.
    const int expected_rank[18] = {0, 1, 3, 6, 10, 15, 19, 24, 28, 33, 37, 43, 55, 61, 73, 79, 91, 97};
    for (int n = 1; n <= 17; ++n) {
        EvaluationPlan plan = plan_places(n);
        CHECK(plan.rank == min_cost_by_exhaustion(n));
        CHECK(plan.rank == expected_rank[n]);
        CHECK(plan.capacity() >= 2 * n - 1);
        const auto& c = plan.counts;
        CHECK(plan.rank == c.N1 + 2 * c.l1 + 3 * c.N2 + 6 * c.l2 + 9 * (c.N4 + 2 * c.l4));
        CHECK(c.l1 <= c.N1);
        CHECK(c.l2 <= c.N2);
        CHECK(c.l4 <= c.N4);
    }
    CHECK_THROWS_AS(plan_places(18), std::invalid_argument);
    CHECK_THROWS_AS(plan_places(0), std::invalid_argument);
}

TEST_CASE("plan minimality: dropping any assignment breaks capacity or optimality") {
    for (int n = 2; n <= 6; ++n) {
        EvaluationPlan plan = plan_places(n);
        for (std::size_t drop = 0; drop < plan.assignments.size(); ++drop) {
            int cap = 0, cost = 0;
            for (std::size_t i = 0; i < plan.assignments.size(); ++i) {
                if (i == drop) continue;
                cap += plan.assignments[i].u * plan.assignments[i].place.degree;
                cost += place_cost(plan.assignments[i].place.degree, plan.assignments[i].u);
            }
            // Either the reduced multiset no longer covers 2n-1, or its cost
            // is below the certified optimum, which is impossible.
            CHECK((cap < 2 * n - 1 || cost < min_cost_by_exhaustion(n)));
        }
    }
}

TEST_CASE("local expansion basics") {
    Place px = Place::finite(BinaryPoly::x());
    // f = p*g + r evaluates to r.
    std::mt19937_64 rng(555);
    for (int i = 0; i < 200; ++i) {
        BinaryPoly g = random_poly_below(rng, 10);
        BinaryPoly r;  // degree < 1
        if (rng() & 1) r = BinaryPoly::one();
        CHECK(ev_place(poly_mul(px.modulus, g) + r, px, 1, 0)[0] == r);
    }
    // x^3 expands as 0 + 0*t at the place x.
    auto e = ev_place(BinaryPoly::monomial(3), px, 2, 0);
    CHECK(e[0].is_zero());
    CHECK(e[1].is_zero());
    // p itself expands as 0 + 1*t at the place p.
    Place pq = Place::finite(BinaryPoly::from_bits(0b111));
    auto eq = ev_place(pq.modulus, pq, 2, 0);
    CHECK(eq[0].is_zero());
    CHECK(eq[1].is_one());
}

TEST_CASE("infinity expansion reads top coefficients") {
    Place inf = Place::infinity();
    BinaryPoly f = BinaryPoly::from_bits(0b1011);  // x^3 + x + 1
    CHECK(ev_place(f, inf, 1, 3)[0].is_one());
    CHECK(ev_place(f, inf, 1, 4)[0].is_zero());
    auto e = ev_place(f, inf, 2, 4);
    CHECK(e[0].is_zero());
    CHECK(e[1].is_one());
}

TEST_CASE("expansion is linear") {
    std::mt19937_64 rng(808);
    for (const Place& place : place_inventory()) {
        for (int i = 0; i < 100; ++i) {
            BinaryPoly f = random_poly_below(rng, 20), g = random_poly_below(rng, 20);
            auto ef = ev_place(f, place, 2, 20), eg = ev_place(g, place, 2, 20);
            auto esum = ev_place(f + g, place, 2, 20);
            CHECK(esum[0] == ef[0] + eg[0]);
            CHECK(esum[1] == ef[1] + eg[1]);
        }
    }
}

TEST_CASE("derivative product rule through the truncated product") {
    std::mt19937_64 rng(31415);
    for (const Place& place : place_inventory()) {
        if (place.is_infinity()) continue;
        for (int i = 0; i < 500; ++i) {
            BinaryPoly f = random_poly_below(rng, 30), g = random_poly_below(rng, 30);
            auto ef = ev_place(f, place, 2, 0), eg = ev_place(g, place, 2, 0);
            auto efg = ev_place(poly_mul(f, g), place, 2, 0);
            const BinaryPoly& p = place.modulus;
            CHECK(efg[0] == poly_mod(poly_mul(ef[0], eg[0]), p));
            CHECK(efg[1] == poly_mod(poly_mul(ef[0], eg[1]) + poly_mul(ef[1], eg[0]), p));
        }
    }
}

TEST_CASE("reconstruction inverts evaluation") {
    std::mt19937_64 rng(99);
    for (int n : {1, 2, 3, 4, 7, 11, 17}) {
        EvaluationPlan plan = plan_places(n);
        CHECK(reconstruct(plan, ev_plan(plan, BinaryPoly::zero(), 2 * n - 2)).is_zero());
        for (int i = 0; i < 1000; ++i) {
            BinaryPoly h = random_poly_below(rng, 2 * n - 2);
            CHECK(reconstruct(plan, ev_plan(plan, h, 2 * n - 2)) == h);
        }
    }
}

TEST_CASE("three-point reconstruction for n = 2") {
    EvaluationPlan plan = plan_places(2);
    // h = x^2 + x: h(0) = 0, h(1) = 0, top coefficient 1.
    BinaryPoly h = BinaryPoly::from_bits(0b110);
    ResidueVector rv = ev_plan(plan, h, 2);
    CHECK(rv[0][0].is_zero());
    CHECK(rv[1][0].is_zero());
    CHECK(rv[2][0].is_one());
    CHECK(reconstruct(plan, rv) == h);
}

TEST_CASE("synthesized algorithms verify with exact rank accounting") {
    for (int n = 1; n <= 10; ++n) {
        BilinearAlgorithm alg = synthesize(n);
        EvaluationPlan plan = plan_places(n);
        CHECK(alg.rank == plan.rank);
        CHECK(verify(alg, VerifyMode::exhaustive));
        CHECK(verify(alg, VerifyMode::random, 2000));
    }
    BilinearAlgorithm a13 = synthesize(13);
    CHECK(verify(a13, VerifyMode::random, 20000));
    CHECK_THROWS_AS(synthesize(18), std::invalid_argument);
}

TEST_CASE("synthesis from hand-built plans, including double evaluation at infinity") {
    // The cost optimum never puts u = 2 on the infinity place, so drive that
    // configuration explicitly.
    Place x = Place::finite(BinaryPoly::x());
    Place x1 = Place::finite(BinaryPoly::from_bits(0b11));
    Place q2 = Place::finite(BinaryPoly::from_bits(0b111));
    Place inf = Place::infinity();

    EvaluationPlan plan4 = make_plan(4, {{x, 2}, {x1, 2}, {inf, 2}, {q2, 1}});
    CHECK(plan4.capacity() == 8);
    CHECK(plan4.rank == 12);
    BilinearAlgorithm alg4 = synthesize_from_plan(plan4);
    CHECK(alg4.rank == 12);
    CHECK(verify(alg4, VerifyMode::exhaustive));

    // Round trips through a plan whose top coefficients come from a
    // two-term infinity expansion.
    std::mt19937_64 rng(4711);
    for (int i = 0; i < 500; ++i) {
        BinaryPoly h = random_poly_below(rng, 6);
        CHECK(reconstruct(plan4, ev_plan(plan4, h, 6)) == h);
    }

    // A redundant plan (capacity above the minimum) still synthesizes a
    // correct, if wasteful, algorithm.
    Place q4 = Place::finite(BinaryPoly::from_hex("19"));
    EvaluationPlan plan3 = make_plan(3, {{x, 2}, {inf, 2}, {q4, 1}});
    BilinearAlgorithm alg3 = synthesize_from_plan(plan3);
    CHECK(alg3.rank == 15);
    CHECK(verify(alg3, VerifyMode::exhaustive));

    // With strict capacity slack, residue tuples outside the image of the
    // evaluation map are rejected by the public reconstruction.
    ResidueVector out_of_image(plan3.assignments.size());
    for (std::size_t i = 0; i < plan3.assignments.size(); ++i)
        out_of_image[i].assign(static_cast<std::size_t>(plan3.assignments[i].u), BinaryPoly::zero());
    out_of_image[2][0] = BinaryPoly::one();  // value 1 at the quartic place, 0 everywhere else
    CHECK_THROWS_AS(reconstruct(plan3, out_of_image), std::logic_error);

    CHECK_THROWS_AS(make_plan(4, {{x, 1}, {x1, 1}}), std::invalid_argument);       // capacity
    CHECK_THROWS_AS(make_plan(2, {{x, 1}, {x, 1}, {inf, 1}}), std::invalid_argument);  // repeat
}

TEST_CASE("generated straight-line programs reproduce field multiplication") {
    for (int n = 1; n <= 8; ++n) {
        BilinearAlgorithm alg = synthesize(n);
        slp::Program prog = slp::parse(codegen(alg), n);
        CHECK(prog.and_count == alg.rank);
        FieldTables tab(alg.field);
        bool all = true;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n) && all; ++x)
            for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
                BinaryPoly z = slp::run(prog, BinaryPoly::from_bits(x), BinaryPoly::from_bits(y));
                if (z.is_zero() ? tab.mul(x, y) != 0 : z.bits64() != tab.mul(x, y)) {
                    all = false;
                    break;
                }
            }
        CHECK(all);
    }
}

TEST_CASE("synthesize(2) is a rank-3 Karatsuba-style algorithm") {
    BilinearAlgorithm alg = synthesize(2);
    CHECK(alg.rank == 3);
    CHECK(verify(alg, VerifyMode::exhaustive));
    FieldElement x{alg.field, BinaryPoly::x()};
    CHECK(evaluate(alg, x, x).value == BinaryPoly::from_bits(0b11));
}
