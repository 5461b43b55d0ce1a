#include "lenslift/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lenslift {

Permutation::Permutation(std::vector<int> images) : img(std::move(images)) {
    std::vector<char> seen(img.size(), 0);
    for (int v : img) {
        if (v < 0 || v >= size() || seen[v])
            throw std::invalid_argument("not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

Permutation Permutation::transposition(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("transposition index out of range");
    Permutation p = identity(n);
    std::swap(p.img[i - 1], p.img[i]);
    return p;
}

Permutation Permutation::reversal(int n) {
    Permutation p;
    p.img.resize(n);
    for (int j = 0; j < n; ++j) p.img[j] = n - 1 - j;
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img[i] != i) return false;
    return true;
}

Permutation Permutation::then(const Permutation& o) const {
    if (size() != o.size()) throw std::invalid_argument("size mismatch");
    Permutation p;
    p.img.resize(size());
    for (int i = 0; i < size(); ++i) p.img[i] = o.img[img[i]];
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.img.resize(size());
    for (int i = 0; i < size(); ++i) p.img[img[i]] = i;
    return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(size(), 0);
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        for (int j = i; !seen[j]; j = img[j]) {
            seen[j] = 1;
            cyc.push_back(j);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

int Permutation::cycle_count() const {
    return static_cast<int>(cycles().size());
}

BraidWord::BraidWord(int t, std::vector<int> w) : strands(t), letters(std::move(w)) {
    if (t < 1) throw std::invalid_argument("braid needs at least one strand");
    for (int l : letters)
        if (l == 0 || std::abs(l) >= t)
            throw std::invalid_argument("braid letter out of range");
}

BraidWord delta(int t) {
    if (t < 1) throw std::invalid_argument("braid needs at least one strand");
    std::vector<int> w;
    w.reserve(t * (t - 1) / 2);
    for (int start = 1; start <= t - 1; ++start)
        for (int i = t - 1; i >= start; --i)
            w.push_back(i);
    return BraidWord(t, std::move(w));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands)
        throw std::invalid_argument("strand count mismatch in concat");
    std::vector<int> w = a.letters;
    w.insert(w.end(), b.letters.begin(), b.letters.end());
    return BraidWord(a.strands, std::move(w));
}

BraidWord inverse(const BraidWord& a) {
    std::vector<int> w(a.letters.rbegin(), a.letters.rend());
    for (int& l : w) l = -l;
    return BraidWord(a.strands, std::move(w));
}

BraidWord power(const BraidWord& a, int n) {
    const BraidWord base = n >= 0 ? a : inverse(a);
    const int reps = n >= 0 ? n : -n;
    std::vector<int> w;
    w.reserve(base.letters.size() * reps);
    for (int k = 0; k < reps; ++k)
        w.insert(w.end(), base.letters.begin(), base.letters.end());
    return BraidWord(a.strands, std::move(w));
}

BraidWord free_reduce(const BraidWord& a) {
    std::vector<int> out;
    for (int l : a.letters) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return BraidWord(a.strands, std::move(out));
}

Permutation underlying_permutation(const BraidWord& a) {
    // Track which position each strand occupies; the image of a start
    // position is the strand's end position.
    std::vector<int> pos_of_strand(a.strands);
    std::iota(pos_of_strand.begin(), pos_of_strand.end(), 0);
    std::vector<int> strand_at(pos_of_strand);
    for (int l : a.letters) {
        const int i = std::abs(l) - 1;
        std::swap(strand_at[i], strand_at[i + 1]);
        pos_of_strand[strand_at[i]] = i;
        pos_of_strand[strand_at[i + 1]] = i + 1;
    }
    return Permutation(pos_of_strand);
}

BraidWord flip(const BraidWord& a) {
    std::vector<int> w = a.letters;
    for (int& l : w) l = l > 0 ? a.strands - l : -(a.strands + l);
    return BraidWord(a.strands, std::move(w));
}

BraidWord reverse(const BraidWord& a) {
    return BraidWord(a.strands, {a.letters.rbegin(), a.letters.rend()});
}

namespace {

// Positive word swapping the adjacent width-blocks at generator slot i:
// every strand of the right block crosses every strand of the left one.
std::vector<int> block_swap_word(int i, int width) {
    std::vector<int> w;
    const int base = (i - 1) * width;
    for (int r = 1; r <= width; ++r)
        for (int s = base + width + r - 1; s >= base + r; --s)
            w.push_back(s);
    return w;
}

} // namespace

BraidWord cable(const BraidWord& a, int width) {
    if (width < 1) throw std::invalid_argument("cable width must be positive");
    std::vector<int> w;
    for (int l : a.letters) {
        std::vector<int> blk = block_swap_word(std::abs(l), width);
        if (l < 0) {
            std::reverse(blk.begin(), blk.end());
            for (int& x : blk) x = -x;
        }
        w.insert(w.end(), blk.begin(), blk.end());
    }
    return BraidWord(a.strands * width, std::move(w));
}

BraidWord insert_pattern(const BraidWord& cabled, int block,
                         const BraidWord& pattern) {
    const int width = pattern.strands;
    if (cabled.strands % width != 0)
        throw std::invalid_argument("word is not cabled to the given width");
    const int blocks = cabled.strands / width;
    if (block < 1 || block > blocks)
        throw std::invalid_argument("block index out of range");
    const int shift = (block - 1) * width;
    std::vector<int> w = cabled.letters;
    for (int l : pattern.letters)
        w.push_back(l > 0 ? l + shift : l - shift);
    return BraidWord(cabled.strands, std::move(w));
}

std::string to_text(const BraidWord& a) {
    std::ostringstream os;
    os << "t=" << a.strands;
    for (int l : a.letters) os << " " << l;
    return os.str();
}

BraidWord parse_braid(const std::string& text) {
    std::istringstream is(text);
    std::string head;
    if (!(is >> head) || head.rfind("t=", 0) != 0)
        throw std::invalid_argument("braid text must start with t=<strands>: got '" +
                                    head + "'");
    int t = 0;
    try {
        size_t used = 0;
        t = std::stoi(head.substr(2), &used);
        if (used != head.size() - 2) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad strand count in '" + head + "'");
    }
    std::vector<int> letters;
    std::string tok;
    while (is >> tok) {
        try {
            size_t used = 0;
            letters.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad braid letter '" + tok + "'");
        }
    }
    return BraidWord(t, std::move(letters));
}

} // namespace lenslift
