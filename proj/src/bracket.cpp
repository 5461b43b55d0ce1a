#include "lenslift/bracket.hpp"

#include "lenslift/temperley_lieb.hpp"

#include <map>
#include <numeric>

namespace lenslift {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

Laurent kauffman_bracket_naive(const PlanarDiagram& d) {
    validate(d);
    const int c = static_cast<int>(d.crossings.size());
    if (c > 22)
        throw ResourceLimit("naive bracket refuses more than 22 crossings");

    // Dense arc relabeling for the union-find.
    std::map<int, int> dense;
    for (auto& cr : d.crossings)
        for (int a : cr.arc)
            if (!dense.count(a)) {
                const int id = static_cast<int>(dense.size());
                dense[a] = id;
            }
    const int arcs = static_cast<int>(dense.size());
    std::vector<std::array<int, 4>> slot(d.crossings.size());
    for (size_t k = 0; k < d.crossings.size(); ++k)
        for (int s = 0; s < 4; ++s)
            slot[k][s] = dense[d.crossings[k].arc[s]];

    if (c == 0 && d.free_loops == 0) return Laurent::constant(1);

    const Laurent delta = Laurent::circle();
    Laurent total;
    for (std::uint64_t state = 0; state < (std::uint64_t{1} << c); ++state) {
        Dsu dsu(arcs);
        int a_minus_b = 0;
        for (int k = 0; k < c; ++k) {
            if (state >> k & 1) {
                // B-smoothing joins (0,1) and (2,3).
                dsu.unite(slot[k][0], slot[k][1]);
                dsu.unite(slot[k][2], slot[k][3]);
                --a_minus_b;
            } else {
                // A-smoothing joins (0,3) and (1,2).
                dsu.unite(slot[k][0], slot[k][3]);
                dsu.unite(slot[k][1], slot[k][2]);
                ++a_minus_b;
            }
        }
        int loops = d.free_loops;
        for (int a = 0; a < arcs; ++a)
            if (dsu.find(a) == a) ++loops;
        total = total + Laurent::monomial(a_minus_b, 1) * delta.pow(loops - 1);
    }
    return total;
}

Laurent kauffman_bracket_tl(const BraidWord& b) {
    const TemperleyLieb tl(b.strands);
    return tl.trace_closure(tl.evaluate_word(b));
}

} // namespace lenslift
