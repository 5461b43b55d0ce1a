#pragma once

#include "lenslift/braid.hpp"
#include "lenslift/laurent.hpp"
#include "lenslift/planar.hpp"

namespace lenslift {

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Kauffman bracket, <unknot> = 1 convention, by the naive sum over
/// all 2^c smoothings. Refuses diagrams with more than 22 crossings.
Laurent kauffman_bracket_naive(const PlanarDiagram& d);

/// Kauffman bracket of a braid closure through the Temperley-Lieb
/// transfer algebra; linear in word length, Catalan(t) state space.
Laurent kauffman_bracket_tl(const BraidWord& b);

} // namespace lenslift
