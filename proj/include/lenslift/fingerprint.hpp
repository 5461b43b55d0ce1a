#pragma once

#include "lenslift/braid.hpp"
#include "lenslift/laurent.hpp"
#include "lenslift/planar.hpp"

#include <string>

namespace lenslift {

/// Computable equivalence surrogate for unoriented links: component
/// count plus the writhe-normalized bracket (-A^3)^(-w).<D>, taken
/// over every component orientation so the value does not depend on
/// how a diagram happened to be oriented, and resolved against the
/// mirror. Equal fingerprints are necessary, not sufficient, for link
/// equivalence.
struct LinkFingerprint {
    enum class Chirality { Amphichiral, Plus, Minus };

    int components = 0;
    Laurent normalized_bracket;   // least normalized bracket over orientations
    Laurent mirror_bracket;       // same for the mirror image
    Laurent canonical_form;       // min of the two
    Chirality chirality = Chirality::Amphichiral;

    bool operator==(const LinkFingerprint&) const = default;
    bool operator<(const LinkFingerprint& o) const;

    LinkFingerprint mirrored() const;
    std::string str() const;
};

/// Fingerprint of a planar diagram (bracket by the naive evaluator,
/// so the diagram must stay within its crossing guard).
LinkFingerprint fingerprint(const PlanarDiagram& d);

/// Fingerprint of a braid closure; bracket through the transfer
/// evaluator, writhe and components from the word itself.
LinkFingerprint fingerprint_of_closure(const BraidWord& b);

/// Shared finishing step: combine a bracket with the achievable
/// writhes of the underlying diagram.
LinkFingerprint finish_fingerprint(int components, const Laurent& bracket,
                                   const std::vector<int>& writhes);

} // namespace lenslift
