#pragma once

#include "lenslift/braid.hpp"

namespace lenslift {

/// Garside left normal form Delta^inf . A_1 ... A_m where the A_k are
/// permutation braids, none trivial or equal to Delta, and every
/// consecutive pair is left-weighted.
struct NormalForm {
    int strands = 1;
    int infimum = 0;
    std::vector<Permutation> factors;

    bool operator==(const NormalForm&) const = default;
};

NormalForm left_normal_form(const BraidWord& a);

/// Word-problem equality via normal forms.
bool braid_equal(const BraidWord& a, const BraidWord& b);

/// A positive word for the permutation braid of pi (lexicographically
/// smallest descent picked first); used to re-emit normal forms.
BraidWord permutation_braid_word(const Permutation& pi);

/// Re-emit a normal form as a braid word: Delta^inf followed by the
/// factor words, with negative powers spelled as half-twist inverses.
BraidWord to_word(const NormalForm& nf);

} // namespace lenslift
