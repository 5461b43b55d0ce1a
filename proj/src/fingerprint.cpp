#include "lenslift/fingerprint.hpp"

#include "lenslift/bracket.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace lenslift {

bool LinkFingerprint::operator<(const LinkFingerprint& o) const {
    if (components != o.components) return components < o.components;
    if (normalized_bracket != o.normalized_bracket)
        return normalized_bracket < o.normalized_bracket;
    return mirror_bracket < o.mirror_bracket;
}

LinkFingerprint LinkFingerprint::mirrored() const {
    LinkFingerprint m = *this;
    std::swap(m.normalized_bracket, m.mirror_bracket);
    if (chirality == Chirality::Plus) m.chirality = Chirality::Minus;
    else if (chirality == Chirality::Minus) m.chirality = Chirality::Plus;
    return m;
}

std::string LinkFingerprint::str() const {
    std::ostringstream os;
    os << "nu=" << components << " bracket=" << normalized_bracket.str()
       << " chirality=";
    switch (chirality) {
        case Chirality::Amphichiral: os << "a"; break;
        case Chirality::Plus: os << "+"; break;
        case Chirality::Minus: os << "-"; break;
    }
    return os.str();
}

LinkFingerprint finish_fingerprint(int components, const Laurent& bracket,
                                   const std::vector<int>& writhes) {
    auto normalize = [&bracket](int w) {
        // (-A^3)^(-w) <D>
        Laurent f = bracket.shifted(-3 * static_cast<Laurent::Exp>(w));
        return (w % 2 == 0) ? f : -f;
    };
    LinkFingerprint fp;
    fp.components = components;
    bool first = true;
    for (int w : writhes) {
        const Laurent n = normalize(w);
        const Laurent m = n.mirrored();
        if (first || n < fp.normalized_bracket) fp.normalized_bracket = n;
        if (first || m < fp.mirror_bracket) fp.mirror_bracket = m;
        first = false;
    }
    fp.canonical_form = fp.normalized_bracket < fp.mirror_bracket
                            ? fp.normalized_bracket
                            : fp.mirror_bracket;
    if (fp.normalized_bracket == fp.mirror_bracket)
        fp.chirality = LinkFingerprint::Chirality::Amphichiral;
    else if (fp.normalized_bracket < fp.mirror_bracket)
        fp.chirality = LinkFingerprint::Chirality::Plus;
    else
        fp.chirality = LinkFingerprint::Chirality::Minus;
    return fp;
}

LinkFingerprint fingerprint(const PlanarDiagram& d) {
    const Components cs = components(d);
    return finish_fingerprint(cs.count, kauffman_bracket_naive(d),
                              achievable_writhes(d));
}

LinkFingerprint fingerprint_of_closure(const BraidWord& b) {
    const Permutation perm = underlying_permutation(b);

    // Component of each strand under the closure.
    std::vector<int> comp_of_strand(b.strands, -1);
    int ncomp = 0;
    for (const auto& cyc : perm.cycles()) {
        for (int s : cyc) comp_of_strand[s] = ncomp;
        ++ncomp;
    }

    // Walk the word tracking which strand sits at each position to
    // attribute crossing signs to component pairs.
    std::vector<int> strand_at(b.strands);
    std::iota(strand_at.begin(), strand_at.end(), 0);
    int self = 0;
    std::map<std::pair<int, int>, int> cross;
    std::set<int> involved;
    for (int l : b.letters) {
        const int i = std::abs(l) - 1;
        const int cu = comp_of_strand[strand_at[i]];
        const int cv = comp_of_strand[strand_at[i + 1]];
        const int sign = l > 0 ? 1 : -1;
        if (cu == cv) {
            self += sign;
        } else {
            auto key = std::minmax(cu, cv);
            cross[{key.first, key.second}] += sign;
            involved.insert(key.first);
            involved.insert(key.second);
        }
        std::swap(strand_at[i], strand_at[i + 1]);
    }

    std::vector<int> comps(involved.begin(), involved.end());
    if (comps.size() > 20)
        throw std::invalid_argument("too many linked components for writhe enumeration");
    std::set<int> writhes;
    const size_t free_bits = comps.empty() ? 0 : comps.size() - 1;
    for (size_t mask = 0; mask < (size_t{1} << free_bits); ++mask) {
        std::map<int, int> eps;
        if (!comps.empty()) eps[comps[0]] = 1;
        for (size_t k = 1; k < comps.size(); ++k)
            eps[comps[k]] = (mask >> (k - 1)) & 1 ? -1 : 1;
        int w = self;
        for (auto& [pair, x] : cross) w += eps[pair.first] * eps[pair.second] * x;
        writhes.insert(w);
    }
    if (writhes.empty()) writhes.insert(self);

    return finish_fingerprint(ncomp, kauffman_bracket_tl(b),
                              {writhes.begin(), writhes.end()});
}

} // namespace lenslift
