#include "lenslift/lift.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <variant>

namespace lenslift {

namespace {

// A disk diagram cut open as a box tangle: top ports left to right
// carry labels +t..+1, bottom ports carry -1..-t.
struct Box {
    std::vector<int> top, bottom;
    std::vector<Crossing> crossings;
    int free_loops = 0;
};

Box box_of(const DiskDiagram& d) {
    Box b;
    b.crossings = d.crossings;
    b.free_loops = d.free_loops;
    b.top.resize(d.t);
    b.bottom.resize(d.t);
    for (int j = 0; j < d.t; ++j) {
        b.top[j] = d.ends.at(d.t - j);
        b.bottom[j] = d.ends.at(-(j + 1));
    }
    return b;
}

// Mirror across the vertical external line with crossings toggled:
// ports reverse left to right, each tuple reverses.
Box mirrored(const Box& b) {
    Box m;
    m.free_loops = b.free_loops;
    m.top.assign(b.top.rbegin(), b.top.rend());
    m.bottom.assign(b.bottom.rbegin(), b.bottom.rend());
    for (const Crossing& c : b.crossings)
        m.crossings.push_back({{c.arc[3], c.arc[2], c.arc[1], c.arc[0]}});
    return m;
}

struct Assembler {
    int next_arc = 0;
    std::vector<int> parent;

    int alloc() {
        parent.push_back(next_arc);
        return next_arc++;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }

    // Instantiate a box with globally fresh arc ids.
    Box instantiate(const Box& src) {
        std::map<int, int> ren;
        auto arc = [&](int a) {
            auto it = ren.find(a);
            if (it != ren.end()) return it->second;
            const int id = alloc();
            ren[a] = id;
            return id;
        };
        Box b;
        b.free_loops = src.free_loops;
        for (const Crossing& c : src.crossings)
            b.crossings.push_back({{arc(c.arc[0]), arc(c.arc[1]),
                                    arc(c.arc[2]), arc(c.arc[3])}});
        for (int a : src.top) b.top.push_back(arc(a));
        for (int a : src.bottom) b.bottom.push_back(arc(a));
        return b;
    }
};

using StackItem = std::variant<Box, int>; // a pasted box or a braid letter

// Stack items top to bottom and trace-close (bottom position j wraps
// to top position j).
PlanarDiagram assemble(int t, Assembler& as, const std::vector<StackItem>& items,
                       int extra_free_loops) {
    std::vector<Crossing> crossings;
    int free_loops = extra_free_loops;

    std::vector<int> seam(t), cur(t);
    for (int j = 0; j < t; ++j) seam[j] = cur[j] = as.alloc();

    for (const StackItem& item : items) {
        if (std::holds_alternative<Box>(item)) {
            const Box& b = std::get<Box>(item);
            for (int j = 0; j < t; ++j) as.unite(cur[j], b.top[j]);
            crossings.insert(crossings.end(), b.crossings.begin(), b.crossings.end());
            free_loops += b.free_loops;
            cur = b.bottom;
        } else {
            const int l = std::get<int>(item);
            const int i = std::abs(l) - 1;
            const int nw = cur[i], ne = cur[i + 1];
            const int sw = as.alloc(), se = as.alloc();
            if (l > 0)
                crossings.push_back({{ne, nw, sw, se}});
            else
                crossings.push_back({{nw, sw, se, ne}});
            cur[i] = sw;
            cur[i + 1] = se;
        }
    }
    for (int j = 0; j < t; ++j) as.unite(cur[j], seam[j]);

    for (Crossing& c : crossings)
        for (int& a : c.arc) a = as.find(a);

    std::set<int> in_slots;
    for (const Crossing& c : crossings)
        for (int a : c.arc) in_slots.insert(a);
    std::set<int> loop_classes;
    for (int a = 0; a < as.next_arc; ++a) {
        const int r = as.find(a);
        if (!in_slots.count(r)) loop_classes.insert(r);
    }

    PlanarDiagram d;
    d.crossings = std::move(crossings);
    d.free_loops = free_loops + static_cast<int>(loop_classes.size());
    return canonicalize(d);
}

PlanarDiagram replicate_local(const DiskDiagram& d, int p) {
    PlanarDiagram out;
    int shift = 0;
    for (int copy = 0; copy < p; ++copy) {
        int width = 0;
        for (const Crossing& c : d.crossings) {
            Crossing cc = c;
            for (int& a : cc.arc) {
                width = std::max(width, a + 1);
                a += shift;
            }
            out.crossings.push_back(cc);
        }
        shift += width;
        out.free_loops += d.free_loops;
    }
    return canonicalize(out);
}

} // namespace

int lift_component_count(const LensLinkClasses& classes, int p) {
    int total = 0;
    for (int delta : classes.delta)
        total += delta == 0 ? p : std::gcd(delta, p);
    return total;
}

int lift_component_count(const DiskDiagram& d) {
    return lift_component_count(lens_closure_components(d), d.lens.p);
}

LiftResult lift_diagram(const DiskDiagram& d) {
    if (!is_standard(d))
        throw std::invalid_argument("lift_diagram needs a standard disk diagram");
    LiftResult r;
    r.source = d;
    r.construction = LiftResult::Construction::Theorem;

    const int p = d.lens.p, q = d.lens.q, t = d.t;
    if (t == 0) {
        r.diagram = replicate_local(d, p);
        return r;
    }

    Assembler as;
    const Box base = box_of(d);
    std::vector<StackItem> items;
    const BraidWord dinv = inverse(delta(t));
    for (int copy = p; copy >= 1; --copy) {
        items.push_back(as.instantiate(base));
        if (copy > 1)
            for (int l : dinv.letters) items.push_back(l);
    }
    for (int l : power(delta(t), 2 * q - 1).letters) items.push_back(l);
    r.diagram = assemble(t, as, items, 0);
    return r;
}

LiftResult lift_diagram_reduced(const DiskDiagram& d) {
    if (!is_standard(d))
        throw std::invalid_argument("lift_diagram_reduced needs a standard disk diagram");
    LiftResult r;
    r.source = d;
    r.construction = LiftResult::Construction::Reduced;

    const int p = d.lens.p, q = d.lens.q, t = d.t;
    if (t == 0) {
        r.diagram = replicate_local(d, p);
        return r;
    }

    Assembler as;
    const Box base = box_of(d);
    const Box rev = mirrored(base);
    std::vector<StackItem> items;
    for (int copy = p; copy >= 1; --copy)
        items.push_back(as.instantiate(copy % 2 == 1 ? base : rev));
    for (int l : power(delta(t), 2 * q - p).letters) items.push_back(l);
    r.diagram = assemble(t, as, items, 0);
    return r;
}

LiftResult lift_diagram_standardized(const DiskDiagram& d) {
    return lift_diagram(standardize(d));
}

std::pair<BraidWord, BraidWord> lift_braid(const BraidWord& b, const LensSpace& lens) {
    const int t = b.strands;
    const BraidWord literal =
        concat(power(concat(b, inverse(delta(t))), lens.p), power(delta(t), 2 * lens.q));
    // Combing the half-twist inverses to the right flips every other
    // copy (D^-1 B = flip(B) D^-1, and D^2 is central), giving
    // B flip(B) B ... D^(2q-p). When B commutes with the half twist
    // this is the familiar B^p D^(2q-p); in general that shorter word
    // closes to a different link, so the flipped copies stay.
    BraidWord combed(t, {});
    for (int copy = 0; copy < lens.p; ++copy)
        combed = concat(combed, copy % 2 == 0 ? b : flip(b));
    const BraidWord reduced =
        free_reduce(concat(combed, power(delta(t), 2 * lens.q - lens.p)));
    return {literal, reduced};
}

bool torus_lens_check(int n, int m, const LensSpace& lens) {
    if (n < 1) throw std::invalid_argument("torus braid needs n >= 1");
    const int r = m - n * lens.q;
    return ((r % lens.p) + lens.p) % lens.p == 0;
}

} // namespace lenslift
