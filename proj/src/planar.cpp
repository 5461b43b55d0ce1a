#include "lenslift/planar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lenslift {

namespace {

// arc -> its (crossing, slot) occurrences
std::map<int, std::vector<std::pair<int, int>>>
occurrences(const PlanarDiagram& d) {
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
        for (int s = 0; s < 4; ++s)
            occ[d.crossings[c].arc[s]].push_back({c, s});
    return occ;
}

int partner_slot(int s) { return s ^ 2; }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

void validate(const PlanarDiagram& d) {
    for (auto& [arc, occ] : occurrences(d))
        if (occ.size() != 2)
            throw std::invalid_argument("arc " + std::to_string(arc) +
                                        " occurs " + std::to_string(occ.size()) +
                                        " times, expected 2");
    if (d.free_loops < 0) throw std::invalid_argument("negative free loop count");
}

Components components(const PlanarDiagram& d) {
    const auto occ = occurrences(d);
    Components out;
    out.under_comp.assign(d.crossings.size(), -1);
    out.over_comp.assign(d.crossings.size(), -1);
    out.sign.assign(d.crossings.size(), 0);
    std::vector<int> under_dir(d.crossings.size(), 0);
    std::vector<int> over_dir(d.crossings.size(), 0);

    std::map<int, int> comp_of;
    int comp = 0;
    for (auto& [start_arc, start_occ] : occ) {
        if (comp_of.count(start_arc)) continue;
        // Traverse the component, flowing start_arc into its first
        // occurrence; (arc, occurrence-entered) states must close up.
        int arc = start_arc;
        std::pair<int, int> into = start_occ[0];
        do {
            comp_of[arc] = comp;
            const auto [c, s] = into;
            if (s == 0) { under_dir[c] = +1; out.under_comp[c] = comp; }
            else if (s == 2) { under_dir[c] = -1; out.under_comp[c] = comp; }
            else if (s == 1) { over_dir[c] = +1; out.over_comp[c] = comp; }
            else { over_dir[c] = -1; out.over_comp[c] = comp; }
            const int s_out = partner_slot(s);
            arc = d.crossings[c].arc[s_out];
            const auto& pair = occ.at(arc);
            into = (pair[0] == std::make_pair(c, s_out)) ? pair[1] : pair[0];
        } while (!(arc == start_arc && into == start_occ[0]));
        ++comp;
    }
    out.crossed_count = comp;
    out.count = comp + d.free_loops;
    int max_arc = -1;
    for (auto& [a, _] : occ) max_arc = std::max(max_arc, a);
    out.comp_of_arc.assign(max_arc + 1, -1);
    for (auto& [a, cmp] : comp_of) out.comp_of_arc[a] = cmp;
    for (size_t c = 0; c < d.crossings.size(); ++c)
        out.sign[c] = under_dir[c] * over_dir[c];
    return out;
}

int writhe(const PlanarDiagram& d) {
    const Components cs = components(d);
    int w = 0;
    for (int s : cs.sign) w += s;
    return w;
}

std::vector<int> achievable_writhes(const PlanarDiagram& d) {
    const Components cs = components(d);
    int self = 0;
    std::map<std::pair<int, int>, int> cross;
    std::set<int> involved;
    for (size_t c = 0; c < d.crossings.size(); ++c) {
        if (cs.under_comp[c] == cs.over_comp[c]) {
            self += cs.sign[c];
        } else {
            auto key = std::minmax(cs.under_comp[c], cs.over_comp[c]);
            cross[{key.first, key.second}] += cs.sign[c];
            involved.insert(key.first);
            involved.insert(key.second);
        }
    }
    std::vector<int> comps(involved.begin(), involved.end());
    if (comps.size() > 20)
        throw std::invalid_argument("too many linked components for writhe enumeration");
    std::set<int> writhes;
    // A global reversal fixes the writhe, so one component can be pinned.
    const size_t free_bits = comps.empty() ? 0 : comps.size() - 1;
    for (size_t mask = 0; mask < (size_t{1} << free_bits); ++mask) {
        std::map<int, int> eps;
        eps[comps.empty() ? -1 : comps[0]] = 1;
        for (size_t i = 1; i < comps.size(); ++i)
            eps[comps[i]] = (mask >> (i - 1)) & 1 ? -1 : 1;
        int w = self;
        for (auto& [pair, x] : cross) w += eps[pair.first] * eps[pair.second] * x;
        writhes.insert(w);
    }
    if (writhes.empty()) writhes.insert(self);
    return {writhes.begin(), writhes.end()};
}

PlanarDiagram closure(const BraidWord& b) {
    const int t = b.strands;
    int next_arc = 0;
    std::vector<int> top(t), cur(t);
    for (int j = 0; j < t; ++j) top[j] = cur[j] = next_arc++;

    PlanarDiagram d;
    for (int l : b.letters) {
        const int i = std::abs(l) - 1;
        const int nw = cur[i], ne = cur[i + 1];
        const int sw = next_arc++, se = next_arc++;
        if (l > 0)
            d.crossings.push_back({{ne, nw, sw, se}});
        else
            d.crossings.push_back({{nw, sw, se, ne}});
        cur[i] = sw;
        cur[i + 1] = se;
    }

    UnionFind uf(next_arc);
    for (int j = 0; j < t; ++j) uf.unite(cur[j], top[j]);
    for (auto& c : d.crossings)
        for (int& a : c.arc) a = uf.find(a);

    std::set<int> used;
    for (auto& c : d.crossings)
        for (int a : c.arc) used.insert(a);
    std::set<int> loop_classes;
    for (int j = 0; j < t; ++j) {
        const int r = uf.find(top[j]);
        if (!used.count(r)) loop_classes.insert(r);
    }
    d.free_loops = static_cast<int>(loop_classes.size());
    return canonicalize(d);
}

PlanarDiagram disjoint_union(const PlanarDiagram& a, const PlanarDiagram& b) {
    PlanarDiagram d = a;
    int shift = 0;
    for (auto& c : a.crossings)
        for (int x : c.arc) shift = std::max(shift, x + 1);
    for (auto c : b.crossings) {
        for (int& x : c.arc) x += shift;
        d.crossings.push_back(c);
    }
    d.free_loops += b.free_loops;
    return canonicalize(d);
}

PlanarDiagram connected_sum(const PlanarDiagram& a, int arc_a,
                            const PlanarDiagram& b, int arc_b) {
    // A crossingless factor is a disjoint unknot: summing onto it only
    // shifts loop counts.
    if (a.crossings.empty()) {
        if (a.free_loops < 1) throw std::invalid_argument("empty diagram");
        PlanarDiagram d = b;
        d.free_loops += a.free_loops - 1;
        return canonicalize(d);
    }
    if (b.crossings.empty()) {
        if (b.free_loops < 1) throw std::invalid_argument("empty diagram");
        PlanarDiagram d = a;
        d.free_loops += b.free_loops - 1;
        return canonicalize(d);
    }

    const auto occ_a = occurrences(a);
    const auto occ_b = occurrences(b);
    if (!occ_a.count(arc_a)) throw std::invalid_argument("no such arc in first diagram");
    if (!occ_b.count(arc_b)) throw std::invalid_argument("no such arc in second diagram");

    int shift = 0;
    for (auto& [x, _] : occ_a) shift = std::max(shift, x + 1);

    PlanarDiagram d = a;
    for (auto c : b.crossings) {
        for (int& x : c.arc) x += shift;
        d.crossings.push_back(c);
    }
    d.free_loops += b.free_loops;

    const int na = static_cast<int>(a.crossings.size());
    const auto ends_a = occ_a.at(arc_a);
    auto ends_b = occ_b.at(arc_b);
    int fresh = shift;
    for (auto& [x, _] : occ_b) fresh = std::max(fresh, shift + x + 1);
    const int join0 = fresh, join1 = fresh + 1;
    d.crossings[ends_a[0].first].arc[ends_a[0].second] = join0;
    d.crossings[na + ends_b[0].first].arc[ends_b[0].second] = join0;
    d.crossings[ends_a[1].first].arc[ends_a[1].second] = join1;
    d.crossings[na + ends_b[1].first].arc[ends_b[1].second] = join1;
    return canonicalize(d);
}

PlanarDiagram canonicalize(const PlanarDiagram& d) {
    auto step = [](PlanarDiagram x) {
        // Half-rotation of a tuple swaps the under-in/under-out roles,
        // which component traversal handles either way.
        for (auto& c : x.crossings) {
            Crossing rot{{c.arc[2], c.arc[3], c.arc[0], c.arc[1]}};
            if (rot < c) c = rot;
        }
        std::sort(x.crossings.begin(), x.crossings.end());
        std::map<int, int> renum;
        for (auto& c : x.crossings)
            for (int a : c.arc)
                if (!renum.count(a)) {
                    const int id = static_cast<int>(renum.size());
                    renum[a] = id;
                }
        for (auto& c : x.crossings)
            for (int& a : c.arc) a = renum[a];
        return x;
    };

    PlanarDiagram cur = d;
    std::vector<PlanarDiagram> seen{cur};
    for (int it = 0; it < 64; ++it) {
        PlanarDiagram nxt = step(cur);
        if (nxt == cur) return cur;
        auto hit = std::find(seen.begin(), seen.end(), nxt);
        if (hit != seen.end()) {
            // Orbit cycle: the lexicographically least member is canonical.
            PlanarDiagram best = nxt;
            for (auto it2 = hit; it2 != seen.end(); ++it2)
                if (it2->crossings < best.crossings) best = *it2;
            return best;
        }
        seen.push_back(nxt);
        cur = nxt;
    }
    return cur;
}

} // namespace lenslift
