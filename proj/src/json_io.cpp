#include "lenslift/json_io.hpp"

#include "lenslift/normal_form.hpp"

#include <algorithm>
#include <map>

namespace lenslift {

using nlohmann::json;

namespace {

// Canonical form anchored at the boundary labels, so isomorphic
// diagrams serialize identically no matter how their arcs were
// numbered. Strand walks from +1, +2, ... fix a crossing order and a
// half-rotation for each tuple; arcs are then renumbered by first
// appearance and the relabeled crossings sorted.
DiskDiagram canonical_disk(const DiskDiagram& d) {
    DiskDiagram x = d;
    if (x.t >= 1) {
        auto it = std::find(x.boundary.begin(), x.boundary.end(), 1);
        std::rotate(x.boundary.begin(), it, x.boundary.end());
    }

    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (int c = 0; c < static_cast<int>(x.crossings.size()); ++c)
        for (int s = 0; s < 4; ++s)
            occ[x.crossings[c].arc[s]].push_back({c, s});

    std::vector<int> order;                       // canonical crossing order
    std::vector<int> rot(x.crossings.size(), -1); // 0 or 2 per crossing
    std::vector<char> visited(x.crossings.size(), 0);

    auto walk = [&](int c0, int s0) {
        int c = c0, s = s0;
        for (;;) {
            if (!visited[c]) {
                visited[c] = 1;
                rot[c] = (s % 2 == 0) ? s : s - 1;
                order.push_back(c);
            }
            const int s_out = s ^ 2;
            const int arc = x.crossings[c].arc[s_out];
            const auto& ends = occ.at(arc);
            if (ends.size() == 1) return; // strand leaves through the boundary
            const auto from = std::make_pair(c, s_out);
            const auto next = ends[0] == from ? ends[1] : ends[0];
            c = next.first;
            s = next.second;
            if (c == c0 && s == s0) return; // strand closed up
        }
    };

    // Strands entering from the boundary, in label order.
    std::vector<int> seeds;
    for (int i = 1; i <= x.t; ++i) seeds.push_back(i);
    for (int i = 1; i <= x.t; ++i) seeds.push_back(-i);
    for (int label : seeds) {
        const int arc = x.ends.at(label);
        auto it = occ.find(arc);
        if (it == occ.end()) continue; // boundary-to-boundary chord
        // Enter at the occurrence that is not another boundary end.
        walk(it->second[0].first, it->second[0].second);
    }
    // Strands reachable only through already visited crossings.
    for (size_t k = 0; k < order.size(); ++k) {
        const int c = order[k];
        for (int i = 0; i < 4; ++i) {
            const int s = (rot[c] + i) % 4;
            const int arc = x.crossings[c].arc[s];
            for (const auto& [c2, s2] : occ.at(arc))
                if (!visited[c2]) walk(c2, s2);
        }
    }
    // Components disjoint from everything above: canonicalize them as
    // a planar subdiagram and append.
    if (order.size() < x.crossings.size()) {
        PlanarDiagram rest;
        for (int c = 0; c < static_cast<int>(x.crossings.size()); ++c)
            if (!visited[c]) rest.crossings.push_back(x.crossings[c]);
        rest = canonicalize(rest);
        int offset = 1 << 20;
        std::vector<Crossing> replaced;
        for (auto cr : rest.crossings) {
            for (int& a : cr.arc) a += offset;
            replaced.push_back(cr);
        }
        // Swap the leftover crossings for their canonical images.
        std::vector<Crossing> rebuilt;
        for (int idx : order) rebuilt.push_back(x.crossings[idx]);
        std::vector<int> new_rot;
        for (int idx : order) new_rot.push_back(rot[idx]);
        for (auto& cr : replaced) {
            rebuilt.push_back(cr);
            new_rot.push_back(0);
        }
        x.crossings = std::move(rebuilt);
        rot.assign(new_rot.begin(), new_rot.end());
    } else {
        std::vector<Crossing> rebuilt;
        std::vector<int> new_rot;
        for (int idx : order) {
            rebuilt.push_back(x.crossings[idx]);
            new_rot.push_back(rot[idx]);
        }
        x.crossings = std::move(rebuilt);
        rot.assign(new_rot.begin(), new_rot.end());
    }

    for (size_t c = 0; c < x.crossings.size(); ++c)
        if (rot[c] == 2)
            x.crossings[c] = Crossing{{x.crossings[c].arc[2], x.crossings[c].arc[3],
                                       x.crossings[c].arc[0], x.crossings[c].arc[1]}};

    std::map<int, int> renum;
    auto touch = [&renum](int a) {
        if (!renum.count(a)) {
            const int id = static_cast<int>(renum.size());
            renum[a] = id;
        }
    };
    for (auto& c : x.crossings)
        for (int a : c.arc) touch(a);
    for (int l : x.boundary) touch(x.ends.at(l));
    for (auto& c : x.crossings)
        for (int& a : c.arc) a = renum[a];
    for (auto& [l, a] : x.ends) a = renum[a];
    std::sort(x.crossings.begin(), x.crossings.end());
    return x;
}

json crossings_json(const std::vector<Crossing>& cs) {
    json arr = json::array();
    for (const Crossing& c : cs)
        arr.push_back({c.arc[0], c.arc[1], c.arc[2], c.arc[3]});
    return arr;
}

std::vector<Crossing> crossings_from(const json& arr) {
    std::vector<Crossing> cs;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 4)
            throw std::invalid_argument("crossing must be a 4-tuple");
        cs.push_back({{item[0].get<int>(), item[1].get<int>(),
                       item[2].get<int>(), item[3].get<int>()}});
    }
    return cs;
}

std::string label_str(int l) {
    return (l > 0 ? "+" : "") + std::to_string(l);
}

} // namespace

json pd_to_json(const PlanarDiagram& d) {
    const PlanarDiagram c = canonicalize(d);
    return json{{"crossings", crossings_json(c.crossings)},
                {"free_loops", c.free_loops}};
}

PlanarDiagram pd_from_json(const json& j) {
    PlanarDiagram d;
    d.crossings = crossings_from(j.at("crossings"));
    d.free_loops = j.value("free_loops", 0);
    validate(d);
    return d;
}

json disk_to_json(const DiskDiagram& d) {
    const DiskDiagram c = canonical_disk(d);
    json boundary = json::array();
    json ends = json::object();
    for (int l : c.boundary) {
        boundary.push_back(label_str(l));
        ends[label_str(l)] = c.ends.at(l);
    }
    return json{{"p", c.lens.p},          {"q", c.lens.q},
                {"t", c.t},               {"boundary", boundary},
                {"ends", ends},           {"crossings", crossings_json(c.crossings)},
                {"free_loops", c.free_loops}};
}

DiskDiagram disk_from_json(const json& j) {
    DiskDiagram d;
    d.lens = LensSpace(j.at("p").get<int>(), j.at("q").get<int>());
    d.t = j.at("t").get<int>();
    d.crossings = crossings_from(j.at("crossings"));
    d.free_loops = j.value("free_loops", 0);
    for (const auto& item : j.at("boundary")) {
        const std::string s = item.get<std::string>();
        d.boundary.push_back(std::stoi(s));
    }
    const json& ends = j.at("ends");
    for (int l : d.boundary) d.ends[l] = ends.at(label_str(l)).get<int>();
    validate(d);
    return d;
}

json fingerprint_to_json(const LinkFingerprint& fp) {
    std::string ch = "a";
    if (fp.chirality == LinkFingerprint::Chirality::Plus) ch = "+";
    if (fp.chirality == LinkFingerprint::Chirality::Minus) ch = "-";
    return json{{"components", fp.components},
                {"bracket", fp.normalized_bracket.str()},
                {"mirror_bracket", fp.mirror_bracket.str()},
                {"canonical", fp.canonical_form.str()},
                {"chirality", ch}};
}

json lift_to_json(const LiftResult& r) {
    json j = pd_to_json(r.diagram);
    j["p"] = r.source.lens.p;
    j["q"] = r.source.lens.q;
    j["construction"] =
        r.construction == LiftResult::Construction::Theorem ? "theorem" : "reduced";
    if (r.braid_form) j["braid"] = to_text(*r.braid_form);
    return j;
}

json classes_to_json(const LensLinkClasses& c) {
    return json{{"nu", c.nu}, {"delta", c.delta}};
}

json collision_to_json(const CollisionReport& r) {
    json j{{"lens", {{"p", r.lens.p}, {"q", r.lens.q}}},
           {"braid_a", to_text(r.braid_a)},
           {"braid_b", to_text(r.braid_b)},
           {"classes_a", classes_to_json(r.classes_a)},
           {"classes_b", classes_to_json(r.classes_b)},
           {"separated", r.separated},
           {"lift_fingerprint", fingerprint_to_json(r.lift_fp)}};
    if (r.lift_name) j["lift_name"] = *r.lift_name;
    else j["lift_name"] = nullptr;
    return j;
}

json catalog_to_json() {
    json arr = json::array();
    for (const CatalogEntry& e : catalog()) {
        json item{{"name", e.name},
                  {"braid", to_text(e.presentation)},
                  {"fingerprint", fingerprint_to_json(e.fp)},
                  {"chiral", e.chiral}};
        if (!e.alias.empty()) item["alias"] = e.alias;
        arr.push_back(item);
    }
    return arr;
}

} // namespace lenslift
