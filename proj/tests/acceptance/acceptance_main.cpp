// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure. Criteria run against the library only; every expected
// value is pinned in code.

#include "lenslift/alexander.hpp"
#include "lenslift/bracket.hpp"
#include "lenslift/catalog.hpp"
#include "lenslift/disk.hpp"
#include "lenslift/fingerprint.hpp"
#include "lenslift/lift.hpp"
#include "lenslift/normal_form.hpp"
#include "lenslift/search.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

using namespace lenslift;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    int id;
    std::string name;
    std::vector<std::string> errors;
    Clock::time_point start = Clock::now();

    Criterion(int id_, std::string name_) : id(id_), name(std::move(name_)) {}

    void expect(bool ok, const std::string& what) {
        if (!ok) errors.push_back(what);
    }

    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }

    void finish(double budget_s = 0.0) {
        const double secs = seconds();
        if (budget_s > 0.0 && secs > budget_s) {
            std::ostringstream os;
            os << "runtime " << secs << "s exceeds budget " << budget_s << "s";
            errors.push_back(os.str());
        }
        if (errors.empty()) {
            std::printf("criterion %d PASS  %-55s (%.2fs)\n", id, name.c_str(), secs);
        } else {
            ++failures;
            std::printf("criterion %d FAIL  %-55s (%.2fs)\n", id, name.c_str(), secs);
            for (const auto& e : errors) std::printf("    - %s\n", e.c_str());
        }
    }
};

std::string ident(const BraidWord& w) {
    const auto id = identify(fingerprint_of_closure(w));
    return id ? id->display() : "unidentified";
}

BraidWord random_word(std::mt19937& rng, int t, int maxlen) {
    std::uniform_int_distribution<int> len(0, maxlen);
    std::uniform_int_distribution<int> gen(1, t - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    std::vector<int> w;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) w.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
    return BraidWord(t, std::move(w));
}

LensSpace random_lens(std::mt19937& rng, int p_max) {
    std::uniform_int_distribution<int> pd(2, p_max);
    for (;;) {
        const int p = pd(rng);
        std::uniform_int_distribution<int> qd(1, p - 1);
        const int q = qd(rng);
        if (std::gcd(p, q) == 1) return LensSpace(p, q);
    }
}

// ---------------------------------------------------------------- 1
void table_one() {
    Criterion c(1, "half-twist closure table, all 16 rows");
    const std::vector<std::pair<BraidWord, std::string>> rows = {
        {power(delta(1), 0), "0_1"},
        {power(delta(2), 0), "0_1 u 0_1"},
        {power(delta(2), 1), "0_1"},
        {power(delta(2), 2), "L2a1"},
        {power(delta(2), 3), "3_1"},
        {power(delta(2), 4), "L4a1"},
        {power(delta(2), 5), "5_1"},
        {power(delta(2), 6), "L6a3"},
        {power(delta(3), 0), "0_1 u 0_1 u 0_1"},
        {power(delta(3), 1), "L2a1"},
        {power(delta(3), 2), "L6n1"},
        {power(delta(3), 3), "L9n15"},
        {power(delta(4), 0), "0_1 u 0_1 u 0_1 u 0_1"},
        {power(delta(4), 1), "L4a1"},
        {power(delta(5), 0), "0_1 u 0_1 u 0_1 u 0_1 u 0_1"},
        {power(delta(5), 1), "L8n3"},
    };
    for (const auto& [w, name] : rows) {
        const std::string got = ident(w);
        c.expect(got == name, "closure of " + to_text(w) + ": expected " + name +
                                  ", got " + got);
    }
    c.finish(30.0);
}

// ---------------------------------------------------------------- 2
void hopf_pair() {
    Criterion c(2, "knot and 2-component link with the Hopf-link lift");
    const LensSpace lens(4, 1);
    const BraidWord a(2, {});
    const BraidWord b(2, {1});
    const auto fa = fingerprint_of_closure(lift_braid(a, lens).second);
    const auto fb = fingerprint_of_closure(lift_braid(b, lens).second);
    c.expect(fa == fb, "lift fingerprints differ");
    const auto id = identify(fa);
    c.expect(id && id->display() == "L2a1", "lift not identified as L2a1");
    const auto ca = lens_closure_components(from_braid(a, lens));
    const auto cb = lens_closure_components(from_braid(b, lens));
    c.expect((std::set<int>{ca.nu, cb.nu} == std::set<int>{1, 2}),
             "component counts are not {1, 2}");
    // Diagram-level constructions agree with the braid route.
    c.expect(fingerprint(lift_diagram(from_braid(a, lens)).diagram) == fa,
             "theorem-form diagram fingerprint differs for the knot");
    c.expect(fingerprint(lift_diagram(from_braid(b, lens)).diagram) == fb,
             "theorem-form diagram fingerprint differs for the link");
    c.finish();
}

// ---------------------------------------------------------------- 3
void unknot_pairs() {
    Criterion c(3, "distinct knots lifting to the unknot");
    for (int p : {5, 7, 9}) {
        for (int q : {(p + 1) / 2, (p - 1) / 2}) {
            const LensSpace lens(p, q);
            const BraidWord k1(1, {});
            const BraidWord k2(2, {});
            for (const BraidWord& w : {k1, k2}) {
                const std::string got = ident(lift_braid(w, lens).second);
                c.expect(got == "0_1", lens.str() + " lift of " + to_text(w) +
                                           " identifies as " + got);
            }
            const auto d1 = homology_classes(from_braid(k1, lens));
            const auto d2 = homology_classes(from_braid(k2, lens));
            c.expect(d1 == std::vector<int>{1}, lens.str() + ": [K1] != 1");
            c.expect(d2 == std::vector<int>{2}, lens.str() + ": [K2] != 2");
        }
    }
    // p = 3: the two classes fold together.
    for (int q : {1, 2}) {
        const LensSpace lens(3, q);
        c.expect(homology_classes(from_braid(BraidWord(1, {}), lens)) ==
                     homology_classes(from_braid(BraidWord(2, {}), lens)),
                 lens.str() + ": classes should both reduce to 1");
    }
    c.finish();
}

// ---------------------------------------------------------------- 4
void equation_tables() {
    Criterion c(4, "lift equation families for h = +-1, +-2, +-4");
    struct Row { int k, a, b, parity; };
    const std::map<int, std::vector<Row>> paper = {
        {1, {{0, 1, 1, 1}}},
        {-1, {{0, 1, -1, 1}}},
        {2, {{1, 0, 2, 0}, {0, 1, 2, 2}}},
        {-2, {{0, 1, -2, 2}, {-1, 2, -2, 0}}},
        {4, {{1, 0, 4, 0}, {0, 1, 4, 2}}},
        {-4, {{0, 1, -4, 2}, {-1, 2, -4, 0}}},
    };
    for (const auto& [h, rows] : paper) {
        const SolveResult r = solve_lift_equation(h, 30);
        std::set<std::tuple<int, int, int, int>> got, want;
        for (const auto& f : r.families) got.insert({f.k, f.a, f.b, f.parity});
        for (const auto& row : rows) want.insert({row.k, row.a, row.b, row.parity});
        std::ostringstream os;
        os << "h=" << h << ": families do not match the table rows";
        c.expect(got == want, os.str());

        std::set<LiftEquationSolution> inst, brute;
        for (const auto& f : r.families)
            for (const auto& s : f.instantiate(30)) inst.insert(s);
        for (const auto& s : r.solutions) {
            c.expect(s.k * s.p + 2 * s.q - s.p == h, "equation violated");
            if (s.k >= -1 && s.k <= 1) brute.insert(s);
        }
        std::ostringstream os2;
        os2 << "h=" << h << ": instantiation mismatch against brute scan";
        c.expect(inst == brute, os2.str());
    }
    // The non-coprime exception the tables gloss over.
    bool flagged = false;
    for (const auto& s : solve_lift_equation(2, 10).solutions)
        if (s.p == 6 && s.q == 4 && s.k == 0 && !s.coprime_valid) flagged = true;
    c.expect(flagged, "h=2, p=6, q=4 not flagged as non-coprime");
    c.finish();
}

// ---------------------------------------------------------------- 5
void component_oracle() {
    Criterion c(5, "component formula vs closure cycles, 1000 cases");
    std::mt19937 rng(0xC0FFEE);
    for (int rep = 0; rep < 1000; ++rep) {
        const int t = 1 + rep % 5;
        const BraidWord w = t == 1 ? BraidWord(1, {}) : random_word(rng, t, 12);
        const LensSpace lens = random_lens(rng, 9);
        const int predicted = lift_component_count(from_braid(w, lens));
        const BraidWord lifted = lift_braid(w, lens).second;
        if (predicted != underlying_permutation(lifted).cycle_count()) {
            std::ostringstream os;
            os << "mismatch at " << to_text(w) << " in " << lens.str();
            c.expect(false, os.str());
            break;
        }
    }
    c.finish(60.0);
}

// ---------------------------------------------------------------- 6
void torus_witnesses() {
    Criterion c(6, "torus-link criterion witnesses");
    c.expect(braid_equal(concat(power(delta(3), 3), power(delta(3), -1)),
                         power(BraidWord(3, {1, 2}), 3)),
             "Delta_3^3 Delta_3^-1 != (s1 s2)^3");
    c.expect(torus_lens_check(3, 3, LensSpace(3, 1)), "T(3,3) rejected for L(3,1)");
    c.expect(torus_lens_check(2, 6, LensSpace(4, 1)), "T(2,6) rejected for L(4,1)");
    c.expect(!torus_lens_check(2, 5, LensSpace(4, 1)), "T(2,5) accepted for L(4,1)");
    const std::string got = ident(lift_braid(BraidWord(2, {1, 1}), LensSpace(4, 1)).second);
    c.expect(got == "L6a3", "lift of s1^2 from L(4,1) identified as " + got);
    c.finish();
}

// ---------------------------------------------------------------- 7
void cable_family() {
    Criterion c(7, "cabled pairs: counts and the equal-lift case");
    const auto nu = [](const BraidWord& w, const LensSpace& lens) {
        return lens_closure_components(from_braid(w, lens)).nu;
    };
    for (int i = 1; i <= 4; ++i) {
        for (int j = 0; j <= 2; ++j) {
            const CablePair p = build_cable_pair(i, j);
            const int na = nu(p.a, p.lens);
            const int nb = nu(p.b, p.lens);
            std::ostringstream tag;
            tag << "(i=" << i << ", j=" << j << ")";
            if (i == 1) {
                c.expect(na == 1 && nb == 2, tag.str() + ": expected the base pair 1 vs 2");
            } else if (i % 2 == 1 && j == 0) {
                c.expect(na == i && nb == i + 1, tag.str() + ": expected i vs i+1");
            } else if (i % 2 == 0 && j > 0 && j % 2 == 0) {
                c.expect(na == i && nb == i, tag.str() + ": expected equal counts i");
                const auto da = homology_classes(from_braid(p.a, p.lens));
                const auto db = homology_classes(from_braid(p.b, p.lens));
                c.expect(da == std::vector<int>(i, 2) && db == std::vector<int>(i, 2),
                         tag.str() + ": classes are not all 2");
            } else if (i % 2 == 1 || j % 2 == 1) {
                c.expect(na != nb, tag.str() + ": expected different counts");
            } else { // even i, j = 0: the two links are equivalent
                c.expect(na == nb, tag.str() + ": expected equal counts");
            }
        }
    }
    const CablePair p22 = build_cable_pair(2, 2);
    const auto fa = fingerprint_of_closure(lift_braid(p22.a, p22.lens).second);
    const auto fb = fingerprint_of_closure(lift_braid(p22.b, p22.lens).second);
    c.expect(fa == fb, "A_{2,2} and B_{2,2} lift fingerprints differ");
    c.finish(120.0);
}

// ---------------------------------------------------------------- 8
void property_suites() {
    Criterion c(8, "property suites");
    std::mt19937 rng(20260810);

    // Garside identities.
    for (int t = 2; t <= 6; ++t) {
        const BraidWord d = delta(t);
        c.expect(braid_equal(reverse(d), d), "Rev(Delta) != Delta");
        std::vector<int> run;
        for (int i = 1; i < t; ++i) run.push_back(i);
        c.expect(braid_equal(power(d, 2), power(BraidWord(t, run), t)),
                 "Delta^2 != full twist word");
        for (int rep = 0; rep < 6; ++rep) {
            const BraidWord w = random_word(rng, t, 8);
            c.expect(braid_equal(concat(power(d, 2), w), concat(w, power(d, 2))),
                     "Delta^2 not central");
            c.expect(braid_equal(concat(d, w), concat(flip(w), d)),
                     "Delta conjugation is not the flip");
        }
    }

    // Markov invariance of fingerprints.
    for (int rep = 0; rep < 25; ++rep) {
        const int t = 2 + rep % 3;
        const BraidWord w = random_word(rng, t, 6);
        const auto base = fingerprint_of_closure(w);
        std::uniform_int_distribution<int> gen(1, t - 1);
        const int g = gen(rng);
        std::vector<int> conj{g};
        conj.insert(conj.end(), w.letters.begin(), w.letters.end());
        conj.push_back(-g);
        c.expect(fingerprint_of_closure(BraidWord(t, conj)) == base,
                 "fingerprint not conjugation invariant");
        for (int sign : {1, -1}) {
            std::vector<int> stab = w.letters;
            stab.push_back(sign * t);
            c.expect(fingerprint_of_closure(BraidWord(t + 1, stab)) == base,
                     "fingerprint not stabilization invariant");
        }
    }

    // Naive and transfer brackets agree up to 14 crossings.
    for (int rep = 0; rep < 40; ++rep) {
        const int t = 2 + rep % 4;
        const BraidWord w = random_word(rng, t, 14);
        c.expect(kauffman_bracket_naive(closure(w)) == kauffman_bracket_tl(w),
                 "bracket evaluators disagree on " + to_text(w));
    }

    // Theorem-4 and reduced lifts agree over the example corpus.
    struct Case { BraidWord w; LensSpace lens; };
    std::vector<Case> corpus = {
        {BraidWord(1, {}), LensSpace(5, 3)}, {BraidWord(1, {}), LensSpace(7, 4)},
        {BraidWord(2, {}), LensSpace(4, 1)}, {BraidWord(2, {1}), LensSpace(4, 1)},
        {BraidWord(2, {}), LensSpace(5, 3)}, {BraidWord(2, {}), LensSpace(3, 2)},
        {BraidWord(2, {1, 1}), LensSpace(3, 1)}, {BraidWord(3, {1, -2}), LensSpace(3, 1)},
        {BraidWord(3, {2, 1}), LensSpace(3, 2)}, {BraidWord(2, {-1}), LensSpace(4, 3)},
    };
    for (const auto& [w, lens] : corpus) {
        const DiskDiagram d = from_braid(w, lens);
        c.expect(fingerprint(lift_diagram(d).diagram) ==
                     fingerprint(lift_diagram_reduced(d).diagram),
                 "lift constructions disagree on " + to_text(w) + " in " + lens.str());
    }

    // Boundary shuffles followed by standardization keep the lift.
    const std::vector<LensSpace> spaces{LensSpace(2, 1), LensSpace(3, 1),
                                        LensSpace(3, 2), LensSpace(4, 1)};
    int shuffled_checked = 0;
    for (int rep = 0; rep < 80 && shuffled_checked < 10; ++rep) {
        const int t = 2 + rep % 2;
        const BraidWord w = random_word(rng, t, 2);
        const LensSpace lens = spaces[rep % spaces.size()];
        const DiskDiagram d = from_braid(w, lens);
        DiskDiagram cur = d;
        std::uniform_int_distribution<int> pick(1, t), side(0, 1);
        int moves = 0;
        for (int g = 0; g < 60 && moves < 1 + rep % 2; ++g) {
            try {
                cur = r6_slide(cur, pick(rng), side(rng) == 1);
                ++moves;
            } catch (const std::invalid_argument&) {
            }
        }
        const DiskDiagram s = standardize(cur);
        const int half = t * (t - 1) / 2;
        if (lens.p * static_cast<int>(s.crossings.size()) +
                std::abs(2 * lens.q - lens.p) * half > 20)
            continue;
        ++shuffled_checked;
        c.expect(fingerprint(lift_diagram_reduced(d).diagram) ==
                     fingerprint(lift_diagram_reduced(s).diagram),
                 "standardized shuffle changed the lift fingerprint");
    }
    c.expect(shuffled_checked >= 10, "too few shuffle cases inside the bracket guard");
    c.finish();
}

// ---------------------------------------------------------------- 9
void performance() {
    Criterion c(9, "performance floors");
    std::mt19937 rng(1);
    std::vector<int> letters;
    std::uniform_int_distribution<int> gen(1, 7);
    std::uniform_int_distribution<int> sgn(0, 1);
    for (int k = 0; k < 40; ++k) letters.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
    const BraidWord b8(8, letters);

    const auto t0 = Clock::now();
    const Laurent br = kauffman_bracket_tl(b8);
    const double bracket_s = std::chrono::duration<double>(Clock::now() - t0).count();
    c.expect(!br.is_zero(), "degenerate bracket");
    {
        std::ostringstream os;
        os << "transfer bracket of an 8-strand 40-letter closure took " << bracket_s
           << "s (budget 5s)";
        c.expect(bracket_s < 5.0, os.str());
    }

    const DiskDiagram d =
        from_braid(BraidWord(4, {1, -2, 3, 2, 1, -3}), LensSpace(9, 2));
    const auto t1 = Clock::now();
    const LiftResult lifted = lift_diagram(d);
    const double lift_s = std::chrono::duration<double>(Clock::now() - t1).count();
    c.expect(static_cast<int>(lifted.diagram.crossings.size()) ==
                 9 * 6 + 8 * 6 + std::abs(2 * 2 - 1) * 6,
             "theorem-form crossing count is off");
    {
        std::ostringstream os;
        os << "theorem-form lift in L(9,2) took " << lift_s << "s (budget 1s)";
        c.expect(lift_s < 1.0, os.str());
    }
    c.finish();
}

} // namespace

int main() {
    table_one();
    hopf_pair();
    unknot_pairs();
    equation_tables();
    component_oracle();
    torus_witnesses();
    cable_family();
    property_suites();
    performance();
    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria failed\n", failures);
    return failures;
}
