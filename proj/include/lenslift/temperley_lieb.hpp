#pragma once

#include "lenslift/braid.hpp"
#include "lenslift/laurent.hpp"

#include <map>
#include <vector>

namespace lenslift {

/// The Temperley-Lieb algebra TL_t over exact Laurent polynomials in
/// the bracket variable A. Basis diagrams are the planar pairings of t
/// top and t bottom points (Catalan(t) of them); points are indexed
/// 0..t-1 on top and t..2t-1 on the bottom.
class TemperleyLieb {
public:
    explicit TemperleyLieb(int t);

    int strands() const { return t_; }
    int dimension() const { return static_cast<int>(basis_.size()); }

    /// Sparse algebra element: basis index -> coefficient.
    using Element = std::map<int, Laurent>;

    Element identity_element() const;

    /// Right-multiply by the image of sigma_i^(+-1) under the bracket
    /// skein representation: sigma_i -> A.1 + A^-1.e_i and the inverse
    /// for negative letters.
    Element apply_letter(const Element& x, int letter) const;

    /// Image of a whole braid word.
    Element evaluate_word(const BraidWord& b) const;

    /// Markov-style trace closing top j onto bottom j; each closed
    /// basis diagram contributes delta^(loops-1).
    Laurent trace_closure(const Element& x) const;

    const std::vector<std::vector<int>>& basis() const { return basis_; }

private:
    int index_of(const std::vector<int>& mate) const;

    int t_;
    std::vector<std::vector<int>> basis_;      // mate tables
    std::map<std::vector<int>, int> index_;
};

} // namespace lenslift
