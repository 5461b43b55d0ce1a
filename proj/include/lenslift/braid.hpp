#pragma once

#include <string>
#include <vector>

namespace lenslift {

/// A permutation of {0, ..., n-1}; img[i] is the image of i.
struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// The adjacent transposition swapping positions i-1 and i
    /// (i is an Artin generator index, 1-based).
    static Permutation transposition(int n, int i);
    /// The order-reversing permutation j -> n-1-j (half-twist image).
    static Permutation reversal(int n);

    int size() const { return static_cast<int>(img.size()); }
    int operator[](int i) const { return img[i]; }
    bool is_identity() const;

    /// Apply *this first, then o.
    Permutation then(const Permutation& o) const;
    Permutation inverse() const;
    std::vector<std::vector<int>> cycles() const;
    int cycle_count() const;

    bool operator==(const Permutation&) const = default;
};

/// A word in the Artin generators of the braid group on `strands`
/// strands. Letter +i is sigma_i, letter -i its inverse; the empty
/// word is the trivial braid on any strand count. Words are stored
/// literally: no reduction ever happens implicitly.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int t, std::vector<int> w);

    bool operator==(const BraidWord&) const = default;
};

/// The Garside half-twist word
/// (s_{t-1} ... s_1)(s_{t-1} ... s_2) ... (s_{t-1}); empty for t = 1.
BraidWord delta(int t);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& a);

/// n-fold concatenation; negative n concatenates the inverse word, so
/// power(delta(t), -1) is the explicit half-twist inverse word.
BraidWord power(const BraidWord& a, int n);

/// Cancel adjacent (+i, -i) pairs until none remain.
BraidWord free_reduce(const BraidWord& a);

Permutation underlying_permutation(const BraidWord& a);

/// The automorphism sigma_i -> sigma_{t-i} (conjugation by the
/// half-twist), applied letterwise.
BraidWord flip(const BraidWord& a);

/// The reversal antihomomorphism: letters in reverse order, signs kept.
BraidWord reverse(const BraidWord& a);

/// Replace every strand by `width` parallel strands; each letter
/// becomes the block transposition of two adjacent width-blocks, all
/// crossings carrying the letter's sign.
BraidWord cable(const BraidWord& a, int width);

/// Append `pattern` acting on the `block`-th width-block of a cabled
/// word; the block width is the pattern's strand count. Blocks are
/// 1-based.
BraidWord insert_pattern(const BraidWord& cabled, int block,
                         const BraidWord& pattern);

/// Text form "t=<strands> <letters...>"; round-trips losslessly.
std::string to_text(const BraidWord& a);
BraidWord parse_braid(const std::string& text);

} // namespace lenslift
