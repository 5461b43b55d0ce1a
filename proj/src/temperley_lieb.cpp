#include "lenslift/temperley_lieb.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace lenslift {

TemperleyLieb::TemperleyLieb(int t) : t_(t) {
    if (t < 1) throw std::invalid_argument("TL needs at least one strand");
    if (t > 12) throw std::invalid_argument("TL dimension guard: t > 12");

    // Points in disk boundary order: top row left to right, then
    // bottom row right to left.
    std::vector<int> boundary;
    for (int i = 0; i < t; ++i) boundary.push_back(i);
    for (int i = 2 * t - 1; i >= t; --i) boundary.push_back(i);

    // Noncrossing matchings of the boundary sequence: repeatedly match
    // the first point of some interval; the chord splits its interval
    // into two independent ones kept on a worklist.
    std::vector<int> mate(2 * t, -1);
    using Intervals = std::vector<std::pair<int, int>>;
    std::function<void(Intervals)> rec = [&](Intervals work) {
        while (!work.empty() && work.back().first > work.back().second)
            work.pop_back();
        if (work.empty()) {
            if (!index_.count(mate)) {
                index_[mate] = static_cast<int>(basis_.size());
                basis_.push_back(mate);
            }
            return;
        }
        const auto [lo, hi] = work.back();
        work.pop_back();
        for (int j = lo + 1; j <= hi; j += 2) {
            mate[boundary[lo]] = boundary[j];
            mate[boundary[j]] = boundary[lo];
            Intervals next = work;
            next.push_back({lo + 1, j - 1});
            next.push_back({j + 1, hi});
            rec(std::move(next));
        }
    };
    rec({{0, 2 * t - 1}});
}

int TemperleyLieb::index_of(const std::vector<int>& mate) const {
    auto it = index_.find(mate);
    if (it == index_.end())
        throw std::logic_error("non-planar TL diagram produced");
    return it->second;
}

TemperleyLieb::Element TemperleyLieb::identity_element() const {
    std::vector<int> mate(2 * t_);
    for (int i = 0; i < t_; ++i) {
        mate[i] = t_ + i;
        mate[t_ + i] = i;
    }
    Element e;
    e[index_of(mate)] = Laurent::constant(1);
    return e;
}

TemperleyLieb::Element TemperleyLieb::apply_letter(const Element& x, int letter) const {
    const int i = letter > 0 ? letter : -letter;
    if (i < 1 || i >= t_) throw std::invalid_argument("letter out of range");
    const Laurent a_id = Laurent::monomial(letter > 0 ? 1 : -1, 1);
    const Laurent a_cup = Laurent::monomial(letter > 0 ? -1 : 1, 1);
    const Laurent delta = Laurent::circle();

    Element out;
    auto add = [&out](int idx, const Laurent& c) {
        if (c.is_zero()) return;
        auto it = out.find(idx);
        if (it == out.end()) {
            out[idx] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) out.erase(it);
        }
    };

    const int u = t_ + (i - 1), v = t_ + i; // bottom points at the slot
    for (auto& [idx, coeff] : x) {
        add(idx, coeff * a_id);
        // Glue e_i under the diagram; a bottom cup already joining the
        // slot closes into a circle.
        std::vector<int> m = basis_[idx];
        if (m[u] == v) {
            add(idx, coeff * a_cup * delta);
        } else {
            const int pu = m[u], pv = m[v];
            m[pu] = pv;
            m[pv] = pu;
            m[u] = v;
            m[v] = u;
            add(index_of(m), coeff * a_cup);
        }
    }
    return out;
}

TemperleyLieb::Element TemperleyLieb::evaluate_word(const BraidWord& b) const {
    if (b.strands != t_) throw std::invalid_argument("strand count mismatch");
    Element x = identity_element();
    for (int l : b.letters) x = apply_letter(x, l);
    return x;
}

Laurent TemperleyLieb::trace_closure(const Element& x) const {
    Laurent total;
    const Laurent delta = Laurent::circle();
    for (auto& [idx, coeff] : x) {
        const std::vector<int>& m = basis_[idx];
        std::vector<char> seen(2 * t_, 0);
        int loops = 0;
        for (int s = 0; s < 2 * t_; ++s) {
            if (seen[s]) continue;
            ++loops;
            int p = s;
            // Alternate mate edges with closure edges i <-> t+i.
            do {
                seen[p] = 1;
                const int q = m[p];
                seen[q] = 1;
                p = q < t_ ? q + t_ : q - t_;
            } while (p != s);
        }
        total = total + coeff * delta.pow(loops - 1);
    }
    return total;
}

} // namespace lenslift
