#pragma once

#include "lenslift/braid.hpp"
#include "lenslift/disk.hpp"
#include "lenslift/fingerprint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lenslift {

/// One arithmetic solution of k.p + 2q - p = h.
struct LiftEquationSolution {
    int h = 0, p = 0, q = 0, k = 0;
    bool coprime_valid = false;

    bool operator==(const LiftEquationSolution&) const = default;
    bool operator<(const LiftEquationSolution& o) const;
};

/// A parametric family of solutions, q = (a.p + b)/2 for fixed k with
/// a parity constraint on p; these are the table rows.
struct LiftEquationFamily {
    int h = 0, k = 0;
    int a = 0, b = 0;        // q = (a*p + b) / 2
    int parity = 0;          // 0 any, 1 odd p, 2 even p
    int p_min = 2;

    std::string describe() const;
    std::vector<LiftEquationSolution> instantiate(int p_max) const;
};

struct SolveResult {
    std::vector<LiftEquationFamily> families;
    std::vector<LiftEquationSolution> solutions; // exhaustive scan, any k
};

SolveResult solve_lift_equation(int h, int p_max);

/// Two links in the same lens space with equal lift fingerprints.
struct CollisionReport {
    LensSpace lens;
    BraidWord braid_a, braid_b;
    LensLinkClasses classes_a, classes_b;
    bool separated = false;   // separators differ => genuinely distinct links
    LinkFingerprint lift_fp;
    std::optional<std::string> lift_name;
};

/// Enumerate freely reduced braid words and lens parameters, group by
/// lift fingerprint within each lens space, and report pairs. Bounds
/// beyond the documented desk-scale defaults (3, 6, 9) are refused.
std::vector<CollisionReport> collision_search(int strand_max, int wordlen_max,
                                              int p_max);

/// The cabled pair construction over the Hopf-lift example: width-i
/// cables of the trivial braid and the half twist on two strands, a
/// copy of the pattern Delta_i^j on each block, in L(4,1).
struct CablePair {
    BraidWord a, b;
    LensSpace lens;
};

CablePair build_cable_pair(int i, int j);

} // namespace lenslift
