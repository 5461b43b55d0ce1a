#pragma once

#include "lenslift/catalog.hpp"
#include "lenslift/disk.hpp"
#include "lenslift/fingerprint.hpp"
#include "lenslift/lift.hpp"
#include "lenslift/search.hpp"

#include "json.hpp"

namespace lenslift {

/// Canonical PD JSON: {"crossings":[[a,b,c,d],...],"free_loops":k}
/// with the diagram canonicalized first so files diff cleanly.
nlohmann::json pd_to_json(const PlanarDiagram& d);
PlanarDiagram pd_from_json(const nlohmann::json& j);

/// Disk diagram JSON adds p, q, t, the boundary label list and the
/// arc each label terminates on.
nlohmann::json disk_to_json(const DiskDiagram& d);
DiskDiagram disk_from_json(const nlohmann::json& j);

nlohmann::json fingerprint_to_json(const LinkFingerprint& fp);
nlohmann::json lift_to_json(const LiftResult& r);
nlohmann::json collision_to_json(const CollisionReport& r);
nlohmann::json classes_to_json(const LensLinkClasses& c);
nlohmann::json catalog_to_json();

} // namespace lenslift
