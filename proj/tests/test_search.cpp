#include "doctest.h"

#include "lenslift/bracket.hpp"
#include "lenslift/catalog.hpp"
#include "lenslift/lift.hpp"
#include "lenslift/search.hpp"

#include <algorithm>
#include <set>

using namespace lenslift;

TEST_CASE("lift equation families for the trivial-lift case") {
    const SolveResult r = solve_lift_equation(1, 9);
    REQUIRE(r.families.size() == 1);
    CHECK(r.families[0].k == 0);
    CHECK(r.families[0].parity == 1);

    std::vector<LiftEquationSolution> expect{
        {1, 3, 2, 0, true}, {1, 5, 3, 0, true}, {1, 7, 4, 0, true}, {1, 9, 5, 0, true}};
    CHECK(r.solutions == expect);
}

TEST_CASE("lift equation families for the Hopf case") {
    const SolveResult r = solve_lift_equation(2, 12);
    REQUIRE(r.families.size() == 2);
    CHECK(r.families[0].k == 1); // q = 1 for all p
    CHECK(r.families[0].a == 0);
    CHECK(r.families[1].k == 0); // q = (p+2)/2 for even p
    CHECK(r.families[1].parity == 2);

    // p = 6 in the second family is an arithmetic solution that fails
    // coprimality.
    bool found = false;
    for (const auto& s : r.solutions)
        if (s.p == 6 && s.q == 4 && s.k == 0) {
            found = true;
            CHECK(!s.coprime_valid);
        }
    CHECK(found);
}

TEST_CASE("negative exponents use the k = -1 families") {
    const SolveResult r = solve_lift_equation(-2, 10);
    bool has_k_minus = false;
    for (const auto& f : r.families)
        if (f.k == -1) {
            has_k_minus = true;
            // q = p - 1
            CHECK(f.a == 2);
            CHECK(f.b == -2);
        }
    CHECK(has_k_minus);
}

TEST_CASE("families instantiate to exactly the small-k solutions") {
    for (int h : {1, -1, 2, -2, 4, -4}) {
        const SolveResult r = solve_lift_equation(h, 30);
        std::set<LiftEquationSolution> from_families;
        for (const auto& f : r.families)
            for (const auto& s : f.instantiate(30)) {
                CHECK(s.k * s.p + 2 * s.q - s.p == h);
                from_families.insert(s);
            }
        std::set<LiftEquationSolution> brute;
        for (const auto& s : r.solutions) {
            CHECK(s.k * s.p + 2 * s.q - s.p == h);
            if (s.k >= -1 && s.k <= 1) brute.insert(s);
        }
        CHECK(from_families == brute);
    }
}

TEST_CASE("collision search finds the Hopf-lift pair in L(4,1)") {
    const auto reports = collision_search(2, 2, 5);
    bool found = false;
    for (const auto& r : reports) {
        if (r.lens == LensSpace(4, 1) && r.lift_name &&
            *r.lift_name == "L2a1" && r.separated) {
            std::set<int> nus{r.classes_a.nu, r.classes_b.nu};
            if (nus == std::set<int>{1, 2}) found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("collision search finds the unknot-lift knot pairs") {
    const auto reports = collision_search(2, 2, 5);
    bool found_53 = false, found_32_flagged = false;
    for (const auto& r : reports) {
        if (!r.lift_name || *r.lift_name != "0_1") continue;
        if (r.lens == LensSpace(5, 3) && r.separated &&
            r.classes_a.delta != r.classes_b.delta)
            found_53 = true;
        if (r.lens == LensSpace(3, 2) && !r.separated)
            found_32_flagged = true;
    }
    CHECK(found_53);
    CHECK(found_32_flagged);
}

TEST_CASE("collision reports are reproducible from scratch") {
    const auto reports = collision_search(2, 3, 4);
    for (const auto& r : reports) {
        const auto fa = fingerprint_of_closure(lift_braid(r.braid_a, r.lens).second);
        const auto fb = fingerprint_of_closure(lift_braid(r.braid_b, r.lens).second);
        CHECK(fa == fb);
        CHECK(fa == r.lift_fp);
        if (r.separated)
            CHECK((r.classes_a.nu != r.classes_b.nu ||
                   r.classes_a.delta != r.classes_b.delta));
    }
    CHECK(!reports.empty());
}

TEST_CASE("search bounds are enforced") {
    CHECK_THROWS_AS(collision_search(4, 6, 9), ResourceLimit);
    CHECK_THROWS_AS(collision_search(3, 7, 9), ResourceLimit);
    CHECK_THROWS_AS(collision_search(3, 6, 10), ResourceLimit);
    CHECK_THROWS_AS(collision_search(0, 6, 9), std::invalid_argument);
}

TEST_CASE("cable pairs reproduce the itemized component counts") {
    // i = 1 reduces to the plain counterexample pair.
    const CablePair base = build_cable_pair(1, 5);
    CHECK(base.a == BraidWord(2, {}));
    CHECK(base.b == BraidWord(2, {1}));
    CHECK(base.lens == LensSpace(4, 1));

    const auto nu = [](const BraidWord& w, const LensSpace& lens) {
        return lens_closure_components(from_braid(w, lens)).nu;
    };
    // odd width, no pattern: i vs i+1 components
    for (int i : {1, 3}) {
        const CablePair p = build_cable_pair(i, 0);
        CHECK(nu(p.a, p.lens) == i);
        CHECK(nu(p.b, p.lens) == i + 1);
    }
    // even width: equal counts
    for (int i : {2, 4}) {
        const CablePair p = build_cable_pair(i, 0);
        CHECK(nu(p.a, p.lens) == i);
        CHECK(nu(p.b, p.lens) == i);
    }
}

TEST_CASE("the width-2 pattern-2 cable pair has equal lifts") {
    const CablePair p = build_cable_pair(2, 2);
    const auto ca = lens_closure_components(from_braid(p.a, p.lens));
    const auto cb = lens_closure_components(from_braid(p.b, p.lens));
    CHECK(ca.nu == 2);
    CHECK(cb.nu == 2);
    CHECK(ca.delta == std::vector<int>{2, 2});
    CHECK(cb.delta == std::vector<int>{2, 2});

    const auto fa = fingerprint_of_closure(lift_braid(p.a, p.lens).second);
    const auto fb = fingerprint_of_closure(lift_braid(p.b, p.lens).second);
    CHECK(fa == fb);
}
