#pragma once

#include "lenslift/braid.hpp"
#include "lenslift/fingerprint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lenslift {

/// A named link with its defining braid presentation. Fingerprints are
/// computed from the presentation at construction time, never copied
/// from tables.
struct CatalogEntry {
    std::string name;      // Knot Atlas style: 0_1, 3_1, L2a1, ...
    std::string alias;     // human name when one exists ("Hopf link")
    BraidWord presentation;
    LinkFingerprint fp;
    bool chiral = false;
};

struct Identification {
    std::string name;
    bool mirror = false;

    /// "L4a1" or "m(L4a1)".
    std::string display() const { return mirror ? "m(" + name + ")" : name; }
};

/// The built-in catalog: unlinks up to five components, the T(2,k)
/// closures sigma_1^k for k = 2..6, and the half-twist closures on
/// three and five strands.
const std::vector<CatalogEntry>& catalog();

std::optional<Identification> identify(const LinkFingerprint& fp);
std::optional<Identification> identify(const PlanarDiagram& d);

/// Alias lookup for display ("L2a1" -> "Hopf link"); empty if none.
std::string catalog_alias(const std::string& name);

} // namespace lenslift
