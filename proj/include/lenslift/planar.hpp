#pragma once

#include "lenslift/braid.hpp"

#include <array>
#include <vector>

namespace lenslift {

/// One crossing of a planar diagram: arc labels read counterclockwise
/// starting at the incoming under-strand, so the under-strand runs
/// arc[0] -> arc[2] and the over-strand occupies arc[1] and arc[3]
/// (flowing 1 -> 3 at a positive crossing).
struct Crossing {
    std::array<int, 4> arc;

    bool operator==(const Crossing&) const = default;
    bool operator<(const Crossing& o) const { return arc < o.arc; }
};

/// PD code of a link diagram in the 3-sphere. Every arc label occurs
/// exactly twice over all crossing slots; crossingless unknot
/// components are carried by the free_loops counter.
struct PlanarDiagram {
    std::vector<Crossing> crossings;
    int free_loops = 0;

    bool operator==(const PlanarDiagram&) const = default;
};

/// Throws std::invalid_argument when some arc does not occur exactly
/// twice among the crossing slots.
void validate(const PlanarDiagram& d);

/// Component structure and a reference orientation obtained by
/// traversing each component from its smallest arc. Crossing sign
/// data is relative to that orientation.
struct Components {
    int count = 0;                     // includes free loops
    int crossed_count = 0;             // components that meet a crossing
    std::vector<int> comp_of_arc;      // arc -> component id
    std::vector<int> under_comp;       // per crossing
    std::vector<int> over_comp;        // per crossing
    std::vector<int> sign;             // per crossing, reference orientation
};

Components components(const PlanarDiagram& d);

/// Writhe under the reference orientation.
int writhe(const PlanarDiagram& d);

/// All writhes achievable by reorienting components independently.
/// Components not meeting any crossing cannot change it.
std::vector<int> achievable_writhes(const PlanarDiagram& d);

/// Standard closure of a braid: top of strand j joins bottom of
/// strand j; strands missed by every letter close into free loops.
PlanarDiagram closure(const BraidWord& b);

PlanarDiagram disjoint_union(const PlanarDiagram& a, const PlanarDiagram& b);

/// Cut arc `arc_a` of `a` and arc `arc_b` of `b` and cross-splice
/// them. Free-loop surgery is handled by treating a crossingless
/// diagram as a plain unknot strand.
PlanarDiagram connected_sum(const PlanarDiagram& a, int arc_a,
                            const PlanarDiagram& b, int arc_b);

/// Deterministic canonical form: crossing tuples normalized up to the
/// harmless half-rotation, sorted, arcs renumbered by first
/// appearance. Stable across runs, so serialized files diff cleanly.
PlanarDiagram canonicalize(const PlanarDiagram& d);

} // namespace lenslift
