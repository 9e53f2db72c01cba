/**
 * @file seed.hpp
 * @brief Seed state (B, y, C) and its mutation dynamics.
 *
 * A seed carries the exchange matrix B, a point of coefficient values y
 * (exact rationals), and the integer C-matrix tracking the tropical
 * exponents of the coefficients relative to the starting seed (C starts
 * as the identity). Every mutation appends a StepTrace recording the
 * direction, the signed C-column, the tropical sign, and the mutated
 * coefficient value before the step.
 */
#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "cluster/exchange_matrix.hpp"
#include "cluster/rational.hpp"

namespace cluster {

/// One mutation step. c and y are taken before the step is applied;
/// eps is the common sign of the nonzero entries of c.
struct StepTrace {
    int k = 0;             // 0-based direction
    std::vector<Int> c;    // signed C-column of direction k, before
    int eps = 0;           // tropical sign, +1 or -1
    Rat y;                 // coefficient value y_k, before
};

struct SeedState {
    ExchangeMatrix B;
    std::vector<Rat> y;
    IntMat C;

    bool operator==(const SeedState& o) const {
        return B == o.B && y == o.y && C == o.C;
    }
};

inline IntMat identity_matrix(int n) {
    IntMat m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline SeedState make_seed(const ExchangeMatrix& B, const std::vector<Rat>& y) {
    if (static_cast<int>(y.size()) != B.n)
        throw std::invalid_argument("make_seed: y size does not match matrix");
    return SeedState{B, y, identity_matrix(B.n)};
}

/**
 * Deterministic generic sample point: n independent positive rationals
 * with uniformly random 64-bit numerators and denominators.
 */
inline std::vector<Rat> sample_point(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Rat> y;
    y.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::uint64_t num = rng() | 1;  // avoid zero
        std::uint64_t den = rng() | 1;
        y.emplace_back(BigInt(num), BigInt(den));
    }
    return y;
}

/// Common sign of the nonzero entries of the k-th C-column. Sign
/// coherence is a structural invariant; a mixed column is a hard error.
inline int tropical_sign(const IntMat& C, int k) {
    int n = static_cast<int>(C.size());
    int s = 0;
    for (int i = 0; i < n; ++i) {
        if (C[i][k] == 0) continue;
        int si = C[i][k] > 0 ? 1 : -1;
        if (s == 0) s = si;
        else if (s != si)
            throw std::logic_error("tropical sign coherence violated");
    }
    if (s == 0) throw std::logic_error("zero C-column");
    return s;
}

/**
 * Mutates the seed in direction k (0-based) and returns the step record.
 *
 *   y'_k = 1/y_k
 *   y'_j = y_j * y_k^[b_kj]_+ * (1 + y_k)^(-b_kj)     (j != k)
 *   c'_k = -c_k
 *   c'_j = c_j + [eps * b_kj]_+ * c_k                 (j != k, columns)
 */
inline StepTrace mutate_seed(SeedState& s, int k) {
    int n = s.B.n;
    if (k < 0 || k >= n) throw std::out_of_range("mutate_seed: direction out of range");

    StepTrace t;
    t.k = k;
    t.c.resize(n);
    for (int i = 0; i < n; ++i) t.c[i] = s.C[i][k];
    t.eps = tropical_sign(s.C, k);
    t.y = s.y[k];

    // coefficient step
    const Rat yk = s.y[k];
    const Rat one_plus = Rat(1) + yk;
    std::vector<Rat> ny = s.y;
    ny[k] = yk.inv();
    for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        Int bkj = s.B.b[k][j];
        if (bkj > 0) ny[j] = s.y[j] * yk.pow(bkj) * one_plus.pow(-bkj);
        else if (bkj < 0) ny[j] = s.y[j] * one_plus.pow(-bkj);
        // bkj == 0: unchanged
    }
    s.y = std::move(ny);

    // C step (column update, using the tropical sign)
    for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        Int m = checked_mul(t.eps, s.B.b[k][j]);
        if (m > 0)
            for (int i = 0; i < n; ++i)
                s.C[i][j] = checked_add(s.C[i][j], checked_mul(m, s.C[i][k]));
    }
    for (int i = 0; i < n; ++i) s.C[i][k] = -s.C[i][k];

    // B step last: the y and C rules above read the pre-step B
    s.B.mutate(k);
    return t;
}

/// Applies a 1-based mutation sequence, collecting per-step records.
inline std::vector<StepTrace> apply_sequence(SeedState& s, const std::vector<int>& seq) {
    std::vector<StepTrace> trace;
    trace.reserve(seq.size());
    for (int k1 : seq) {
        if (k1 < 1 || k1 > s.B.n)
            throw std::out_of_range("apply_sequence: 1-based index out of range");
        trace.push_back(mutate_seed(s, k1 - 1));
    }
    return trace;
}

/**
 * Integer-only (B, C) dynamics for a 1-based sequence: the signed
 * column recursion without coefficient values. Exact y-values can grow
 * doubly exponentially on wild quivers, so bulk scans (strictness
 * sweeps, oracle comparisons) run on this instead.
 */
inline IntMat signed_c_matrix(ExchangeMatrix B, const std::vector<int>& seq) {
    int n = B.n;
    IntMat C = identity_matrix(n);
    for (int k1 : seq) {
        int k = k1 - 1;
        if (k < 0 || k >= n)
            throw std::out_of_range("signed_c_matrix: 1-based index out of range");
        int eps = tropical_sign(C, k);
        for (int j = 0; j < n; ++j) {
            if (j == k) continue;
            Int m = checked_mul(eps, B.b[k][j]);
            if (m > 0)
                for (int i = 0; i < n; ++i)
                    C[i][j] = checked_add(C[i][j], checked_mul(m, C[i][k]));
        }
        for (int i = 0; i < n; ++i) C[i][k] = -C[i][k];
        B.mutate(k);
    }
    return C;
}

}  // namespace cluster
