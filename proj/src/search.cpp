#include "lenslift/search.hpp"

#include "lenslift/bracket.hpp"
#include "lenslift/catalog.hpp"
#include "lenslift/lift.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace lenslift {

bool LiftEquationSolution::operator<(const LiftEquationSolution& o) const {
    if (p != o.p) return p < o.p;
    if (q != o.q) return q < o.q;
    return k < o.k;
}

std::string LiftEquationFamily::describe() const {
    std::ostringstream os;
    os << "k=" << k << ", ";
    if (parity == 1) os << "p odd";
    else if (parity == 2) os << "p even";
    else os << "all p";
    os << " (p >= " << p_min << "), q=";
    if (a == 0) {
        os << b / 2;
    } else {
        os << "(";
        if (a == 1) os << "p";
        else os << a << "p";
        if (b > 0) os << "+" << b;
        else if (b < 0) os << b;
        os << ")/2";
    }
    return os.str();
}

std::vector<LiftEquationSolution> LiftEquationFamily::instantiate(int p_max) const {
    std::vector<LiftEquationSolution> out;
    for (int p = p_min; p <= p_max; ++p) {
        if (parity == 1 && p % 2 == 0) continue;
        if (parity == 2 && p % 2 == 1) continue;
        const long long num = static_cast<long long>(a) * p + b;
        if (num % 2 != 0) continue;
        const int q = static_cast<int>(num / 2);
        if (q < 0 || q >= p) continue;
        out.push_back({h, p, q, k, std::gcd(p, q) == 1});
    }
    return out;
}

SolveResult solve_lift_equation(int h, int p_max) {
    if (p_max < 2) throw std::invalid_argument("p_max must be at least 2");
    SolveResult r;

    // Families with solutions for unboundedly many p: k in {-1,0,1}.
    // q = (p(1-k) + h)/2, so a = 1-k and b = h, with the parity of p
    // pinned when a is odd, and p_min forced by 0 <= q < p.
    for (int k = 1; k >= -1; --k) {
        const int a = 1 - k;
        LiftEquationFamily fam;
        fam.h = h;
        fam.k = k;
        fam.a = a;
        fam.b = h;
        if (a == 0) {
            if (h % 2 != 0 || h < 0) continue; // q = h/2 must be an integer >= 0
            fam.parity = 0;
            fam.p_min = std::max(2, h / 2 + 1); // q < p
        } else if (a == 1) {
            fam.parity = (((h % 2) + 2) % 2 == 0) ? 2 : 1; // p = h (mod 2)
            fam.p_min = std::max(2, h + 1);                 // q < p needs p > h
            if (h < 0) fam.p_min = std::max(2, -h);         // q >= 0 needs p >= -h
        } else { // a == 2, q = p + h/2
            if (h % 2 != 0 || h >= 0) continue; // q < p forces h < 0
            fam.parity = 0;
            fam.p_min = std::max(2, -h / 2);    // q >= 0
        }
        r.families.push_back(fam);
    }

    for (int p = 2; p <= p_max; ++p)
        for (int q = 0; q < p; ++q) {
            const int num = h - 2 * q + p;
            if (num % p != 0) continue;
            r.solutions.push_back({h, p, q, num / p, std::gcd(p, q) == 1});
        }
    std::sort(r.solutions.begin(), r.solutions.end());
    return r;
}

namespace {

void enumerate_words(int t, int maxlen, std::vector<BraidWord>& out) {
    std::vector<int> word;
    std::function<void()> rec = [&]() {
        out.emplace_back(t, word);
        if (static_cast<int>(word.size()) == maxlen) return;
        for (int g = 1; g <= t - 1; ++g)
            for (int sign : {1, -1}) {
                const int l = g * sign;
                if (!word.empty() && word.back() == -l) continue; // stay freely reduced
                word.push_back(l);
                rec();
                word.pop_back();
            }
    };
    rec();
}

std::string separator_key(const LensLinkClasses& c) {
    std::ostringstream os;
    os << c.nu << ":";
    for (int d : c.delta) os << d << ",";
    return os.str();
}

} // namespace

std::vector<CollisionReport> collision_search(int strand_max, int wordlen_max,
                                              int p_max) {
    if (strand_max > 3 || wordlen_max > 6 || p_max > 9)
        throw ResourceLimit("collision_search bounds exceed desk-scale defaults (3, 6, 9)");
    if (strand_max < 1 || wordlen_max < 0 || p_max < 2)
        throw std::invalid_argument("degenerate search bounds");

    std::vector<BraidWord> braids;
    for (int t = 1; t <= strand_max; ++t) enumerate_words(t, wordlen_max, braids);

    struct Member {
        const BraidWord* braid;
        LensLinkClasses classes;
    };
    std::vector<CollisionReport> reports;

    for (int p = 2; p <= p_max; ++p) {
        for (int q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const LensSpace lens(p, q);
            std::map<std::string, std::vector<Member>> groups;
            std::map<std::string, LinkFingerprint> group_fp;
            for (const BraidWord& b : braids) {
                const DiskDiagram disk = from_braid(b, lens);
                LensLinkClasses classes = lens_closure_components(disk);
                const BraidWord lifted = lift_braid(b, lens).second;
                const LinkFingerprint fp = fingerprint_of_closure(lifted);
                const std::string key = fp.str();
                groups[key].push_back({&b, std::move(classes)});
                group_fp.emplace(key, fp);
            }
            for (auto& [key, members] : groups) {
                if (members.size() < 2) continue;
                // One representative per distinct separator signature.
                std::map<std::string, const Member*> reps;
                for (const Member& m : members) {
                    const std::string sep = separator_key(m.classes);
                    if (!reps.count(sep)) reps[sep] = &m;
                }
                auto make_report = [&](const Member& a, const Member& b, bool separated) {
                    CollisionReport r;
                    r.lens = lens;
                    r.braid_a = *a.braid;
                    r.braid_b = *b.braid;
                    r.classes_a = a.classes;
                    r.classes_b = b.classes;
                    r.separated = separated;
                    r.lift_fp = group_fp.at(key);
                    if (auto id = identify(r.lift_fp)) r.lift_name = id->display();
                    reports.push_back(std::move(r));
                };
                if (reps.size() >= 2) {
                    for (auto i = reps.begin(); i != reps.end(); ++i)
                        for (auto j = std::next(i); j != reps.end(); ++j)
                            make_report(*i->second, *j->second, true);
                } else {
                    make_report(members[0], members[1], false);
                }
            }
        }
    }
    return reports;
}

CablePair build_cable_pair(int i, int j) {
    if (i < 1 || j < 0) throw std::invalid_argument("need i >= 1 and j >= 0");
    const BraidWord pattern = power(delta(i), j);
    auto with_patterns = [&](const BraidWord& companion) {
        BraidWord w = cable(companion, i);
        w = insert_pattern(w, 1, pattern);
        w = insert_pattern(w, 2, pattern);
        return w;
    };
    CablePair pair{with_patterns(BraidWord(2, {})),
                   with_patterns(BraidWord(2, {1})),
                   LensSpace(4, 1)};
    return pair;
}

} // namespace lenslift
