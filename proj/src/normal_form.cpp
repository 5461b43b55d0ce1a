#include "lenslift/normal_form.hpp"

#include <cstdlib>
#include <stdexcept>

/*
  Left normal form computation with permutation braids as canonical
  factors.

  A permutation braid A_pi is the positive braid in which strands i < j
  cross exactly once iff pi reverses their order. Its starting set
  S(pi) = { i : pi(i-1) > pi(i) } is the descent set of pi, and its
  finishing set F(pi) is the descent set of pi^{-1}. A pair (A, B) is
  left-weighted when S(B) is contained in F(A); if some i lies in
  S(B) \ F(A), the letter sigma_i slides from the head of B onto the
  tail of A, strictly increasing |A|. Sliding until no such i exists
  makes the pair left-weighted, and bubbling adjacent pairs to a fixed
  point makes the whole factor sequence left-weighted. Trivial factors
  are dropped as they appear; leading Delta factors are absorbed into
  the infimum (in a left-weighted sequence any Delta factor has forced
  its predecessors to be Delta, so they sit at the front).

  Negative letters enter as sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1}),
  where Delta sigma_i^{-1} is the permutation braid of tau_i after the
  reversal; the new Delta^{-1} passes to the far left by flipping every
  factor already accumulated (A Delta^{-1} = Delta^{-1} flip(A)).
*/

namespace lenslift {

namespace {

std::vector<int> descents(const Permutation& p) {
    std::vector<int> out;
    for (int i = 1; i < p.size(); ++i)
        if (p[i - 1] > p[i]) out.push_back(i);
    return out;
}

// Swap values i-1, i in the image table: appends sigma_i to the braid.
void append_generator(Permutation& p, int i) {
    for (int& v : p.img) {
        if (v == i - 1) v = i;
        else if (v == i) v = i - 1;
    }
}

// Swap entries at positions i-1, i: removes sigma_i from the front.
void strip_generator(Permutation& p, int i) {
    std::swap(p.img[i - 1], p.img[i]);
}

Permutation flipped(const Permutation& p) {
    const int n = p.size();
    Permutation q = p;
    for (int i = 0; i < n; ++i) q.img[n - 1 - i] = n - 1 - p[i];
    return q;
}

// Make the pair (a, b) left-weighted; returns true if letters moved.
bool left_weight_pair(Permutation& a, Permutation& b) {
    bool moved = false;
    for (;;) {
        const Permutation a_inv = a.inverse();
        int pick = 0;
        for (int i : descents(b)) {
            if (a_inv[i - 1] < a_inv[i]) { // i not in F(a)
                pick = i;
                break;
            }
        }
        if (pick == 0) return moved;
        append_generator(a, pick);
        strip_generator(b, pick);
        moved = true;
    }
}

} // namespace

NormalForm left_normal_form(const BraidWord& a) {
    const int t = a.strands;
    const Permutation delta_perm = Permutation::reversal(t);

    NormalForm nf;
    nf.strands = t;
    std::vector<Permutation>& fs = nf.factors;

    for (int l : a.letters) {
        const int i = std::abs(l);
        if (l > 0) {
            fs.push_back(Permutation::transposition(t, i));
        } else {
            nf.infimum -= 1;
            for (Permutation& f : fs) f = flipped(f);
            // Delta sigma_i^{-1}: reversal, then strip sigma_i's
            // final crossing.
            Permutation rest = delta_perm.then(Permutation::transposition(t, i));
            fs.push_back(rest);
        }
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t j = 0; j + 1 < fs.size(); ++j) {
            if (left_weight_pair(fs[j], fs[j + 1])) changed = true;
            if (fs[j + 1].is_identity()) {
                fs.erase(fs.begin() + j + 1);
                changed = true;
                break;
            }
        }
        // Trivial head factors can only arise from an empty input.
        while (!fs.empty() && fs.front().is_identity()) {
            fs.erase(fs.begin());
            changed = true;
        }
        while (!fs.empty() && fs.front() == delta_perm) {
            fs.erase(fs.begin());
            nf.infimum += 1;
            changed = true;
        }
    }
    return nf;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands)
        throw std::invalid_argument("strand count mismatch in braid_equal");
    return left_normal_form(a) == left_normal_form(b);
}

BraidWord permutation_braid_word(const Permutation& pi) {
    Permutation p = pi;
    std::vector<int> w;
    for (;;) {
        const std::vector<int> ds = descents(p);
        if (ds.empty()) break;
        w.push_back(ds.front());
        strip_generator(p, ds.front());
    }
    return BraidWord(p.size(), std::move(w));
}

BraidWord to_word(const NormalForm& nf) {
    BraidWord w = power(delta(nf.strands), nf.infimum);
    for (const Permutation& f : nf.factors)
        w = concat(w, permutation_braid_word(f));
    return w;
}

} // namespace lenslift
