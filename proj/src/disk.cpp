#include "lenslift/disk.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lenslift {

LensSpace::LensSpace(int p_, int q_) : p(p_), q(q_) {
    if (p <= 1) throw std::invalid_argument("lens space needs p > 1");
    if (q < 0 || q >= p) throw std::invalid_argument("lens space needs 0 <= q < p");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("lens space needs gcd(p,q) = 1");
}

std::string LensSpace::str() const {
    std::ostringstream os;
    os << "L(" << p << "," << q << ")";
    return os.str();
}

namespace {

// An arc end: either a crossing slot or a boundary label.
struct End {
    bool at_boundary = false;
    int c = -1, s = -1;
    int label = 0;

    bool operator==(const End&) const = default;
};

std::map<int, std::vector<End>> disk_occurrences(const DiskDiagram& d) {
    std::map<int, std::vector<End>> occ;
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
        for (int s = 0; s < 4; ++s)
            occ[d.crossings[c].arc[s]].push_back(End{false, c, s, 0});
    for (auto& [label, arc] : d.ends)
        occ[arc].push_back(End{true, -1, -1, label});
    return occ;
}

// Increasing cyclic order of the values at the given boundary slots.
bool cyclically_increasing(const std::vector<int>& vals) {
    if (vals.size() <= 2) return true;
    int drops = 0;
    for (size_t i = 0; i < vals.size(); ++i)
        if (vals[i] > vals[(i + 1) % vals.size()]) ++drops;
    return drops <= 1;
}

/*
  Boundary geometry. The endpoints +i and -i are the two projections
  of one strand point, so they sit at the fixed angular offset q/p of
  a turn and can only rotate rigidly together. Which boundary orders
  are realizable, and which endpoint of a rotating pair passes its
  neighbor first, are questions about actual angles, not the cyclic
  sequence alone. Angles are reconstructed exactly: positions are
  difference-constrained (pair offsets are equalities, consecutive
  boundary slots are strict inequalities) and solved by longest paths
  with lexicographic (value, strictness) weights; strictness then
  materializes as a margin too small to disturb any 1/p-granular
  comparison.
*/

struct Frac {
    long long n = 0, d = 1;

    static long long gcd_ll(long long a, long long b) {
        while (b) { const long long t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }
    static Frac make(long long n, long long d) {
        if (d < 0) { n = -n; d = -d; }
        const long long g = gcd_ll(n == 0 ? 1 : n, d);
        return Frac{n / g, d / g};
    }
    Frac operator+(const Frac& o) const { return make(n * o.d + o.n * d, d * o.d); }
    Frac operator-(const Frac& o) const { return make(n * o.d - o.n * d, d * o.d); }
    bool operator<(const Frac& o) const { return n * o.d < o.n * d; }
    bool operator==(const Frac& o) const { return n == o.n && d == o.d; }
    bool operator<=(const Frac& o) const { return !(o < *this); }

    Frac mod1() const {
        long long nn = n % d;
        if (nn < 0) nn += d;
        return make(nn, d);
    }
};

// Weighted value in the difference system: exact part plus a count of
// strict inequalities along the path.
struct Dist {
    Frac value;
    int strict = 0;
    bool operator<(const Dist& o) const {
        if (!(value == o.value)) return value < o.value;
        return strict < o.strict;
    }
    Dist operator+(const Dist& o) const { return {value + o.value, strict + o.strict}; }
};

// Exact boundary angles (in turns) realizing the diagram's cyclic
// order with all pairs at offset q/p; throws when no such angles
// exist.
std::map<int, Frac> realize_boundary(const DiskDiagram& d) {
    std::map<int, Frac> out;
    const int n = 2 * d.t;
    if (n == 0) return out;
    if (n == 2) {
        // A lone pair has a single cyclic order.
        out[1] = Frac{0, 1};
        out[-1] = Frac::make(d.lens.q, d.lens.p);
        return out;
    }

    std::map<int, int> index;
    for (int k = 0; k < n; ++k) index[d.boundary[k]] = k;

    // Nodes 0..n-1 are slot positions, node n is position 0 plus one
    // full turn. Edge u -> v with weight w: x_v >= x_u + w.
    struct Edge { int u, v; Dist w; };
    std::vector<Edge> edges;
    const Frac c = Frac::make(d.lens.q, d.lens.p);
    for (int k = 0; k < n; ++k)
        edges.push_back({k, k == n - 1 ? n : k + 1, {Frac{0, 1}, 1}});
    for (int i = 1; i <= d.t; ++i) {
        const int a = index.at(i), b = index.at(-i);
        const Frac rhs = b > a ? c : c - Frac{1, 1};
        edges.push_back({a, b, {rhs, 0}});
        edges.push_back({b, a, {Frac{0, 1} - rhs, 0}});
    }
    // Close the circle: x_n = x_0 + 1 exactly.
    edges.push_back({0, n, {Frac{1, 1}, 0}});
    edges.push_back({n, 0, {Frac{-1, 1}, 0}});

    std::vector<Dist> dist(n + 1, Dist{Frac{0, 1}, 0});
    const int rounds = 2 * n + 6;
    for (int round = 0; round <= rounds; ++round) {
        bool changed = false;
        for (const Edge& e : edges) {
            Dist cand = dist[e.u] + e.w;
            if (dist[e.v] < cand) {
                dist[e.v] = cand;
                changed = true;
            }
        }
        if (!changed) break;
        if (round == rounds)
            throw std::invalid_argument("boundary order is not realizable at offset q/p");
    }

    // Materialize strictness: margins of eta keep every 1/p-granular
    // relation intact.
    const Frac eta = Frac::make(1, static_cast<long long>(d.lens.p) * (n + 2) * (n + 2));
    for (int k = 0; k < n; ++k) {
        Frac v = dist[k].value;
        for (int s = 0; s < dist[k].strict; ++s) v = v + eta;
        out[d.boundary[k]] = v.mod1();
    }
    return out;
}

} // namespace

void validate(const DiskDiagram& d) {
    if (d.t < 0) throw std::invalid_argument("negative chord count");
    if (static_cast<int>(d.boundary.size()) != 2 * d.t)
        throw std::invalid_argument("boundary must list 2t labels");
    std::set<int> labels(d.boundary.begin(), d.boundary.end());
    if (static_cast<int>(labels.size()) != 2 * d.t)
        throw std::invalid_argument("boundary labels must be distinct");
    for (int i = 1; i <= d.t; ++i)
        if (!labels.count(i) || !labels.count(-i))
            throw std::invalid_argument("boundary labels must be +-1..+-t");
    if (d.ends.size() != labels.size())
        throw std::invalid_argument("every label needs a terminating arc");
    for (int l : d.boundary)
        if (!d.ends.count(l))
            throw std::invalid_argument("missing arc for a boundary label");

    std::vector<int> plus, minus;
    for (int l : d.boundary)
        (l > 0 ? plus : minus).push_back(l > 0 ? l : -l);
    if (!cyclically_increasing(plus))
        throw std::invalid_argument("plus labels out of cyclic order");
    if (!cyclically_increasing(minus))
        throw std::invalid_argument("minus labels out of cyclic order");

    for (auto& [arc, ends] : disk_occurrences(d))
        if (ends.size() != 2)
            throw std::invalid_argument("arc " + std::to_string(arc) +
                                        " occurs " + std::to_string(ends.size()) +
                                        " times");
    if (d.free_loops < 0) throw std::invalid_argument("negative free loops");
}

DiskDiagram from_braid(const BraidWord& b, const LensSpace& lens) {
    const int t = b.strands;
    DiskDiagram d;
    d.lens = lens;
    d.t = t;

    int next_arc = 0;
    std::vector<int> cur(t);
    for (int j = 0; j < t; ++j) {
        cur[j] = next_arc++;
        d.ends[t - j] = cur[j]; // top position j carries +(t-j), 0-based
    }
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
    for (int j = 0; j < t; ++j) d.ends[-(j + 1)] = cur[j];

    for (int i = 1; i <= t; ++i) d.boundary.push_back(i);
    for (int i = 1; i <= t; ++i) d.boundary.push_back(-i);
    return d;
}

DiskDiagram local_link(const PlanarDiagram& pd, const LensSpace& lens) {
    DiskDiagram d;
    d.lens = lens;
    d.t = 0;
    d.crossings = pd.crossings;
    d.free_loops = pd.free_loops;
    return d;
}

bool is_standard(const DiskDiagram& d) {
    if (d.t == 0) return true;
    std::vector<int> want;
    for (int i = 1; i <= d.t; ++i) want.push_back(i);
    for (int i = 1; i <= d.t; ++i) want.push_back(-i);
    const int n = 2 * d.t;
    for (int r = 0; r < n; ++r) {
        bool ok = true;
        for (int k = 0; k < n && ok; ++k)
            ok = d.boundary[(r + k) % n] == want[k];
        if (ok) return true;
    }
    return false;
}

LensLinkClasses lens_closure_components(const DiskDiagram& d) {
    validate(d);
    const auto occ = disk_occurrences(d);

    LensLinkClasses out;
    out.boundary_endpoints = 2 * d.t;

    std::set<int> visited_arcs;
    struct Comp {
        int passages_signed = 0;
        std::vector<int> chords;
    };
    std::vector<Comp> comps;

    for (auto& [start_arc, start_ends] : occ) {
        if (visited_arcs.count(start_arc)) continue;
        Comp comp;
        int arc = start_arc;
        End into = start_ends[0];
        do {
            visited_arcs.insert(arc);
            if (into.at_boundary) {
                // Jump through the identified pair; entering at the
                // plus label counts +1, at the minus label -1.
                const int label = into.label;
                comp.chords.push_back(std::abs(label));
                comp.passages_signed += label < 0 ? +1 : -1;
                const int partner = -label;
                arc = d.ends.at(partner);
                const auto& pair = occ.at(arc);
                const End from{true, -1, -1, partner};
                into = (pair[0] == from) ? pair[1] : pair[0];
            } else {
                const int s_out = into.s ^ 2;
                arc = d.crossings[into.c].arc[s_out];
                const auto& pair = occ.at(arc);
                const End from{false, into.c, s_out, 0};
                into = (pair[0] == from) ? pair[1] : pair[0];
            }
        } while (!(arc == start_arc && into == start_ends[0]));
        std::sort(comp.chords.begin(), comp.chords.end());
        comps.push_back(std::move(comp));
    }

    const int p = d.lens.p;
    for (auto& comp : comps) {
        const int r = ((comp.passages_signed % p) + p) % p;
        out.delta.push_back(std::min(r, p - r));
        out.chords.push_back(comp.chords);
    }
    for (int k = 0; k < d.free_loops; ++k) {
        out.delta.push_back(0);
        out.chords.push_back({});
    }
    out.nu = static_cast<int>(out.delta.size());

    // Canonical order: by homology class, then chord usage.
    std::vector<size_t> idx(out.delta.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (out.delta[a] != out.delta[b]) return out.delta[a] < out.delta[b];
        return out.chords[a] < out.chords[b];
    });
    LensLinkClasses sorted;
    sorted.nu = out.nu;
    sorted.boundary_endpoints = out.boundary_endpoints;
    for (size_t i : idx) {
        sorted.delta.push_back(out.delta[i]);
        sorted.chords.push_back(out.chords[i]);
    }
    return sorted;
}

std::vector<int> homology_classes(const DiskDiagram& d) {
    return lens_closure_components(d).delta;
}

DiskDiagram r6_slide(const DiskDiagram& d, int pair_index, bool cw) {
    validate(d);
    if (pair_index < 1 || pair_index > d.t)
        throw std::invalid_argument("no such pair");
    if (d.t < 2)
        throw std::invalid_argument("nothing to slide past");

    const auto angle = realize_boundary(d);
    // Rigid rotation: both endpoints of the pair travel together, and
    // whichever reaches a foreign endpoint first defines the event.
    // When both reach one at the same angle (coinciding walls, the
    // generic situation for p = 2) the two transpositions happen as
    // one compound event.
    const auto gap = [&](int from, int to) {
        const Frac diff = cw ? angle.at(from) - angle.at(to)
                             : angle.at(to) - angle.at(from);
        return diff.mod1();
    };
    struct Event { int mover, passed; };
    Frac best{2, 1};
    std::vector<Event> events;
    for (int e : {pair_index, -pair_index}) {
        for (int k = 0; k < 2 * d.t; ++k) {
            const int f = d.boundary[k];
            if (f == pair_index || f == -pair_index) continue;
            const Frac g = gap(e, f);
            if (g < best) {
                best = g;
                events.assign(1, {e, f});
            } else if (g == best) {
                if (events.empty() || events.back().mover != e)
                    events.push_back({e, f});
            }
        }
    }
    for (const Event& ev : events)
        if ((ev.mover > 0) == (ev.passed > 0))
            throw std::invalid_argument("slide blocked: like-signed endpoints would collide");

    DiskDiagram out = d;
    const int n = 2 * d.t;
    for (const Event& ev : events) {
        int pm = -1, pp = -1;
        for (int k = 0; k < n; ++k) {
            if (out.boundary[k] == ev.mover) pm = k;
            if (out.boundary[k] == ev.passed) pp = k;
        }
        if ((pm + (cw ? n - 1 : 1)) % n != pp)
            throw std::logic_error("slide event is not between adjacent endpoints");
        std::swap(out.boundary[pm], out.boundary[pp]);

        int next_arc = 0;
        for (auto& c : out.crossings)
            for (int a : c.arc) next_arc = std::max(next_arc, a + 1);
        for (auto& [l, a] : out.ends) next_arc = std::max(next_arc, a + 1);

        // The plus-label arc passes over (it hugs the upper hemisphere).
        const int plus_label = ev.mover > 0 ? ev.mover : ev.passed;
        const int minus_label = ev.mover > 0 ? ev.passed : ev.mover;
        const int t_body = out.ends.at(plus_label);
        const int s_body = out.ends.at(minus_label);
        const int t_stub = next_arc++;
        const int s_stub = next_arc++;
        // Slot layout from the local picture (interior on the walker's
        // left going counterclockwise): the plus arc transported
        // clockwise puts its fresh stub at slot 1, the mirrored motion
        // at slot 3.
        const bool plus_moves_cw = (ev.mover > 0) == cw;
        if (plus_moves_cw)
            out.crossings.push_back({{s_body, t_stub, s_stub, t_body}});
        else
            out.crossings.push_back({{s_body, t_body, s_stub, t_stub}});
        out.ends[plus_label] = t_stub;
        out.ends[minus_label] = s_stub;
    }
    return out;
}

DiskDiagram standardize(const DiskDiagram& d, int* insertions) {
    validate(d);
    if (insertions) *insertions = 0;
    if (is_standard(d)) return d;
    realize_boundary(d); // reject unrealizable orders up front

    // A single event away from standard is undone by one inverse slide.
    for (int i = 1; i <= d.t; ++i)
        for (bool cw : {true, false}) {
            try {
                DiskDiagram undo = r6_slide(d, i, cw);
                if (is_standard(undo)) {
                    if (insertions)
                        *insertions = static_cast<int>(undo.crossings.size() -
                                                       d.crossings.size());
                    return undo;
                }
            } catch (const std::invalid_argument&) {
            }
        }

    DiskDiagram cur = d;
    auto pred_of = [&cur](int label) {
        const int n = 2 * cur.t;
        for (int k = 0; k < n; ++k)
            if (cur.boundary[k] == label) return cur.boundary[(k + n - 1) % n];
        throw std::logic_error("label missing");
    };

    // The strategy of the standardization proposition: walk each pair
    // clockwise until +i sits just after +(i-1). Along the way +i can
    // only pass minus endpoints and the dragged -i only plus
    // endpoints, so no move is ever blocked.
    for (int i = 2; i <= cur.t; ++i) {
        int guard = 0;
        while (pred_of(i) != i - 1) {
            cur = r6_slide(cur, i, /*cw=*/true);
            if (++guard > 8 * cur.t * cur.t)
                throw std::logic_error("standardize failed to converge");
        }
    }
    if (!is_standard(cur))
        throw std::invalid_argument("boundary order is not realizable in a lens space");
    if (insertions)
        *insertions = static_cast<int>(cur.crossings.size() - d.crossings.size());
    return cur;
}

DiskDiagram reverse_diagram(const DiskDiagram& d) {
    if (!is_standard(d))
        throw std::invalid_argument("reverse_diagram needs a standard diagram");
    DiskDiagram out = d;
    // Mirror: boundary orientation reverses, tuples re-read clockwise,
    // then every crossing toggles. Relabeling pairs i <-> t+1-i
    // restores the labeling convention, so the result is standard again.
    std::reverse(out.boundary.begin(), out.boundary.end());
    for (auto& c : out.crossings)
        c = Crossing{{c.arc[3], c.arc[2], c.arc[1], c.arc[0]}};
    const int t = d.t;
    for (int& l : out.boundary) l = l > 0 ? t + 1 - l : -(t + 1 + l);
    out.ends.clear();
    for (auto& [l, a] : d.ends)
        out.ends[l > 0 ? t + 1 - l : -(t + 1 + l)] = a;
    return out;
}

DiskDiagram exchange_pair_signs(const DiskDiagram& d, int pair_index) {
    validate(d);
    if (d.lens.p != 2)
        throw std::invalid_argument("sign exchange is an isotopy only for p = 2");
    if (pair_index < 1 || pair_index > d.t)
        throw std::invalid_argument("no such pair");

    DiskDiagram out = d;
    for (int& l : out.boundary)
        if (std::abs(l) == pair_index) l = -l;
    std::swap(out.ends.at(pair_index), out.ends.at(-pair_index));

    // Relabel pairs so plus labels increase counterclockwise again.
    std::map<int, int> rename; // old pair -> new pair
    int next = 1;
    for (int l : out.boundary)
        if (l > 0) rename[l] = next++;
    DiskDiagram named = out;
    named.ends.clear();
    for (int& l : named.boundary) l = l > 0 ? rename[l] : -rename[-l];
    for (auto& [l, a] : out.ends)
        named.ends[l > 0 ? rename[l] : -rename[-l]] = a;
    validate(named);
    return named;
}

DiskDiagram disk_connected_sum(const DiskDiagram& d, int arc_d,
                               const PlanarDiagram& k, int arc_k) {
    validate(d);
    validate(k);
    if (k.crossings.empty()) {
        if (k.free_loops < 1) throw std::invalid_argument("empty summand");
        DiskDiagram out = d;
        out.free_loops += k.free_loops - 1;
        return out;
    }
    const auto occ_d = disk_occurrences(d);
    if (!occ_d.count(arc_d)) throw std::invalid_argument("no such arc in disk diagram");
    std::map<int, std::vector<std::pair<int, int>>> occ_k;
    for (int c = 0; c < static_cast<int>(k.crossings.size()); ++c)
        for (int s = 0; s < 4; ++s)
            occ_k[k.crossings[c].arc[s]].push_back({c, s});
    if (!occ_k.count(arc_k)) throw std::invalid_argument("no such arc in summand");

    int shift = 0;
    for (auto& [a, _] : occ_d) shift = std::max(shift, a + 1);

    DiskDiagram out = d;
    const int base = static_cast<int>(d.crossings.size());
    for (auto c : k.crossings) {
        for (int& a : c.arc) a += shift;
        out.crossings.push_back(c);
    }
    out.free_loops += k.free_loops;

    int fresh = shift;
    for (auto& [a, _] : occ_k) fresh = std::max(fresh, shift + a + 1);
    const int join0 = fresh, join1 = fresh + 1;

    const auto set_disk_end = [&](const End& e, int arc) {
        if (e.at_boundary)
            out.ends.at(e.label) = arc;
        else
            out.crossings[e.c].arc[e.s] = arc;
    };
    const auto& ends_d = occ_d.at(arc_d);
    const auto& ends_k = occ_k.at(arc_k);
    set_disk_end(ends_d[0], join0);
    out.crossings[base + ends_k[0].first].arc[ends_k[0].second] = join0;
    set_disk_end(ends_d[1], join1);
    out.crossings[base + ends_k[1].first].arc[ends_k[1].second] = join1;
    validate(out);
    return out;
}

} // namespace lenslift
