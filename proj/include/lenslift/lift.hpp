#pragma once

#include "lenslift/braid.hpp"
#include "lenslift/disk.hpp"
#include "lenslift/planar.hpp"

#include <optional>
#include <utility>

namespace lenslift {

/// Diagram of the lift of a lens-space link to the 3-sphere.
struct LiftResult {
    enum class Construction { Theorem, Reduced };

    PlanarDiagram diagram;
    std::optional<BraidWord> braid_form;
    DiskDiagram source;
    Construction construction = Construction::Theorem;
};

/// Number of lift components: sum of gcd(delta_i, p) over the
/// components of the lens link (gcd(0,p) = p).
int lift_component_count(const LensLinkClasses& classes, int p);
int lift_component_count(const DiskDiagram& d);

/// Chain p copies of the standard diagram through p-1 half-twist
/// inverses and close with the (2q-1)-power; requires standard input.
LiftResult lift_diagram(const DiskDiagram& d);

/// Alternate copies of the diagram and its reverse joined trivially,
/// closed with the (2q-p)-power; fewer crossings, same link.
LiftResult lift_diagram_reduced(const DiskDiagram& d);

/// Convenience wrapper that standardizes first.
LiftResult lift_diagram_standardized(const DiskDiagram& d);

/// Both braid presentations of the lift of a braid-presented link:
/// the literal chain (B D^-1)^p D^2q and the freely reduced
/// B^p D^(2q-p). The closures agree as links, not as words.
std::pair<BraidWord, BraidWord> lift_braid(const BraidWord& b, const LensSpace& lens);

/// Is the torus link T(n,m) the lift of some link in this lens space?
bool torus_lens_check(int n, int m, const LensSpace& lens);

} // namespace lenslift
