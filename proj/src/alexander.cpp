#include "lenslift/alexander.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>

namespace lenslift {

namespace {

using Matrix = std::vector<std::vector<Laurent>>;

Matrix identity_matrix(int n) {
    Matrix m(n, std::vector<Laurent>(n));
    for (int i = 0; i < n; ++i) m[i][i] = Laurent::constant(1);
    return m;
}

// Reduced Burau image of a single letter. Acting on row vectors in
// the difference basis f_j = e_j - e_{j+1}:
//   sigma_i:   f_{i-1} += s f_i,   f_i -> -s f_i,   f_{i+1} += f_i
//   inverse:   f_{i-1} += f_i,     f_i -> -1/s f_i, f_{i+1} += f_i / s
Matrix letter_matrix(int t, int letter) {
    const int n = t - 1;
    const int i = std::abs(letter); // generator, 1-based
    Matrix m = identity_matrix(n);
    if (letter > 0) {
        m[i - 1][i - 1] = Laurent::monomial(1, -1);
        if (i >= 2) m[i - 2][i - 1] = Laurent::monomial(1, 1);
        if (i <= n - 1) m[i][i - 1] = Laurent::constant(1);
    } else {
        m[i - 1][i - 1] = Laurent::monomial(-1, -1);
        if (i >= 2) m[i - 2][i - 1] = Laurent::constant(1);
        if (i <= n - 1) m[i][i - 1] = Laurent::monomial(-1, 1);
    }
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    const int n = static_cast<int>(a.size());
    Matrix r(n, std::vector<Laurent>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < n; ++j)
                r[i][j] = r[i][j] + a[i][k] * b[k][j];
        }
    return r;
}

// Expansion along rows with memoization over column subsets.
Laurent determinant(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Laurent::constant(1);
    std::map<std::uint32_t, Laurent> memo;
    std::function<Laurent(int, std::uint32_t)> det =
        [&](int row, std::uint32_t cols) -> Laurent {
        if (row == n) return Laurent::constant(1);
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        Laurent acc;
        int parity = 0;
        for (int j = 0; j < n; ++j) {
            if (!(cols >> j & 1)) continue;
            if (!m[row][j].is_zero()) {
                Laurent term = m[row][j] * det(row + 1, cols & ~(1u << j));
                acc = (parity % 2 == 0) ? acc + term : acc - term;
            }
            ++parity;
        }
        memo[cols] = acc;
        return acc;
    };
    return det(0, (n >= 32 ? ~0u : (1u << n) - 1));
}

Laurent normalized(const Laurent& p) {
    if (p.is_zero()) return p;
    Laurent q = p.shifted(-p.lowest_exp());
    if (q.terms().begin()->second < 0) q = -q;
    return q;
}

} // namespace

std::vector<std::vector<Laurent>> reduced_burau(const BraidWord& b) {
    Matrix m = identity_matrix(b.strands - 1);
    for (int l : b.letters) m = multiply(m, letter_matrix(b.strands, l));
    return m;
}

Laurent alexander(const BraidWord& b) {
    const int t = b.strands;
    if (t == 1) return Laurent::constant(1); // closure is the unknot
    if (t - 1 > 16) throw std::invalid_argument("Burau size guard");

    Matrix m = reduced_burau(b);
    for (int i = 0; i < t - 1; ++i)
        m[i][i] = m[i][i] - Laurent::constant(1);
    const Laurent det = determinant(m);
    if (det.is_zero()) return det;

    const Laurent num = det * (Laurent::constant(1) - Laurent::monomial(1, 1));
    const Laurent den = Laurent::constant(1) - Laurent::monomial(t, 1);
    return normalized(num.exact_div(den));
}

} // namespace lenslift
