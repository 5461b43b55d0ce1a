#pragma once

#include "lenslift/braid.hpp"
#include "lenslift/planar.hpp"

#include <map>
#include <vector>

namespace lenslift {

struct LensSpace {
    int p = 2;
    int q = 1;

    LensSpace() = default;
    LensSpace(int p_, int q_);

    bool operator==(const LensSpace&) const = default;
    std::string str() const;
};

/// A tangle in the disk with 2t labeled boundary endpoints standing
/// for a link in L(p,q). Boundary labels are the signed integers
/// +1..+t, -1..-t listed counterclockwise along the equator; +i is
/// identified with -i in the lens space. Interior crossings follow
/// the planar-diagram slot convention; `ends` maps each label to the
/// arc terminating there.
struct DiskDiagram {
    LensSpace lens;
    int t = 0;
    std::vector<Crossing> crossings;
    int free_loops = 0;
    std::vector<int> boundary;   // 2t labels, counterclockwise
    std::map<int, int> ends;     // label -> arc

    bool operator==(const DiskDiagram&) const = default;
};

/// Structural checks: labels ±1..±t each once, plus and minus labels
/// each in increasing cyclic order, every arc with exactly two ends.
void validate(const DiskDiagram& d);

/// Standard disk diagram of a braid: the braid box embedded so the
/// boundary reads (+1,...,+t,-1,...,-t) counterclockwise. Reading
/// that order around the box forces top strand position j to carry
/// label +(t+1-j) and bottom position j to carry -j, which is what
/// makes the closure matching order-reversing.
DiskDiagram from_braid(const BraidWord& b, const LensSpace& lens);

/// A local link (contained in a ball missing the boundary): t = 0.
DiskDiagram local_link(const PlanarDiagram& d, const LensSpace& lens);

bool is_standard(const DiskDiagram& d);

/// Component data of the link in the lens space: traversal of the
/// tangle with boundary jumps +i <-> -i.
struct LensLinkClasses {
    int nu = 0;
    std::vector<int> delta;              // homology classes, sorted
    std::vector<std::vector<int>> chords; // per component, sorted pair indices
    int boundary_endpoints = 0;          // total endpoints touched (= 2t)
};

LensLinkClasses lens_closure_components(const DiskDiagram& d);

/// Homology classes only (values in 0..floor(p/2), sorted).
std::vector<int> homology_classes(const DiskDiagram& d);

/// One boundary slide: transport the +i endpoint past the adjacent
/// minus endpoint on the given side, exchanging them on the boundary
/// and inserting the crossing in which the plus arc passes over.
/// `cw` slides +i toward its counterclockwise predecessor.
DiskDiagram r6_slide(const DiskDiagram& d, int plus_index, bool cw);

/// Reduce to a standard disk diagram by boundary slides; every
/// executed transposition inserts exactly one crossing. The number of
/// insertions is reported through `insertions` when non-null.
DiskDiagram standardize(const DiskDiagram& d, int* insertions = nullptr);

/// Mirror across an external line with all crossings toggled.
/// Standard input required; the output boundary reads reflected.
DiskDiagram reverse_diagram(const DiskDiagram& d);

/// Label toggle +i <-> -i, an isotopy only in L(2,q); the boundary is
/// relabeled afterwards so plus labels stay in increasing cyclic order.
DiskDiagram exchange_pair_signs(const DiskDiagram& d, int pair_index);

/// Splice a planar diagram into an interior or boundary arc of the
/// disk diagram (connected sum inside the ball).
DiskDiagram disk_connected_sum(const DiskDiagram& d, int arc_d,
                               const PlanarDiagram& k, int arc_k);

} // namespace lenslift
