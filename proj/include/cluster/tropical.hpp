/**
 * @file tropical.hpp
 * @brief Min-plus evaluation of coefficient dynamics.
 *
 * Tracks the exponent vectors of the coefficients directly in the
 * tropical semifield: trop(1 + y_k) = min(0, c_k) componentwise. This
 * gives the C-matrix without using sign coherence, so it serves as an
 * independent cross-check of the signed column recursion in seed.hpp.
 */
#pragma once

#include <vector>

#include "cluster/exchange_matrix.hpp"

namespace cluster {

/**
 * Applies a 1-based mutation sequence to the tropical seed and returns
 * the resulting exponent matrix (columns = tropical y exponent vectors).
 *
 *   c'_k = -c_k
 *   c'_j = c_j + [b_kj]_+ * c_k - b_kj * min(0, c_k)   (componentwise min)
 */
inline IntMat tropical_c_matrix(ExchangeMatrix B, const std::vector<int>& seq) {
    int n = B.n;
    IntMat C(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) C[i][i] = 1;
    for (int k1 : seq) {
        int k = k1 - 1;
        IntMat nc = C;
        for (int j = 0; j < n; ++j) {
            if (j == k) continue;
            Int bkj = B.b[k][j];
            for (int i = 0; i < n; ++i) {
                Int plus = bkj > 0 ? checked_mul(bkj, C[i][k]) : 0;
                Int mino = C[i][k] < 0 ? C[i][k] : 0;
                nc[i][j] = checked_add(C[i][j],
                                       checked_add(plus, checked_mul(-bkj, mino)));
            }
        }
        for (int i = 0; i < n; ++i) nc[i][k] = -C[i][k];
        C = std::move(nc);
        B.mutate(k);
    }
    return C;
}

}  // namespace cluster
