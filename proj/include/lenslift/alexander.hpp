#pragma once

#include "lenslift/braid.hpp"
#include "lenslift/laurent.hpp"

#include <vector>

namespace lenslift {

/// Reduced Burau matrix of a braid word, (t-1)x(t-1) over Z[s^±1].
std::vector<std::vector<Laurent>> reduced_burau(const BraidWord& b);

/// Alexander polynomial of the closure of b:
/// det(Burau(b) - I) * (1-s)/(1-s^t), exactly divided, then shifted so
/// the lowest exponent is 0 with a positive lowest coefficient. Split
/// closures give the zero polynomial, returned as-is.
Laurent alexander(const BraidWord& b);

} // namespace lenslift
