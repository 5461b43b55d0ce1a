#include "lenslift/catalog.hpp"

#include <stdexcept>

namespace lenslift {

namespace {

std::string unlink_name(int n) {
    std::string s = "0_1";
    for (int k = 1; k < n; ++k) s += " u 0_1";
    return s;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    auto add = [&out](std::string name, std::string alias, BraidWord w, bool chiral) {
        CatalogEntry e;
        e.name = std::move(name);
        e.alias = std::move(alias);
        e.fp = fingerprint_of_closure(w);
        e.presentation = std::move(w);
        e.chiral = chiral;
        out.push_back(std::move(e));
    };

    for (int n = 1; n <= 5; ++n)
        add(unlink_name(n), n == 1 ? "unknot" : "", BraidWord(n, {}), false);

    // T(2,k) family from sigma_1 powers.
    add("L2a1", "Hopf link", BraidWord(2, {1, 1}), false);
    add("3_1", "trefoil", BraidWord(2, {1, 1, 1}), true);
    add("L4a1", "", BraidWord(2, {1, 1, 1, 1}), true);
    add("5_1", "", BraidWord(2, {1, 1, 1, 1, 1}), true);
    add("L6a3", "", BraidWord(2, {1, 1, 1, 1, 1, 1}), true);

    // Half-twist closures beyond two strands.
    add("L6n1", "", power(delta(3), 2), true);
    add("L9n15", "", power(delta(3), 3), true);
    add("L8n3", "", delta(5), true);

    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (out[i].fp == out[j].fp)
                throw std::logic_error("catalog fingerprints collide: " +
                                       out[i].name + " vs " + out[j].name);
    return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

std::optional<Identification> identify(const LinkFingerprint& fp) {
    for (const CatalogEntry& e : catalog()) {
        if (fp == e.fp) return Identification{e.name, false};
        if (e.chiral && fp == e.fp.mirrored()) return Identification{e.name, true};
    }
    return std::nullopt;
}

std::optional<Identification> identify(const PlanarDiagram& d) {
    return identify(fingerprint(d));
}

std::string catalog_alias(const std::string& name) {
    for (const CatalogEntry& e : catalog())
        if (e.name == name) return e.alias;
    return "";
}

} // namespace lenslift
