/**
 * @file loops.hpp
 * @brief Closed-loop detection for mutation sequences.
 *
 * A sequence is a strict loop when the full seed state (B, y, C)
 * returns to its starting value, and a loop up to relabeling when the
 * final state equals the initial one after a simultaneous permutation
 * of indices. Coefficients are evaluated at two independent generic
 * sample points so that accidental coincidences at one point cannot
 * fake a closure.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cluster/seed.hpp"
#include "cluster/seed_key.hpp"

namespace cluster {

enum class Closure { strict, up_to_permutation, open };

inline std::string closure_name(Closure c) {
    switch (c) {
        case Closure::strict: return "strict";
        case Closure::up_to_permutation: return "up_to_permutation";
        default: return "open";
    }
}

struct LoopReport {
    Closure closed = Closure::open;
    std::vector<int> perm;  // final == relabel(initial, perm), 0-based images
    int length = 0;
    std::vector<StepTrace> trace;
};

namespace detail {

/// final == initial relabeled by sigma? (B and y; C is label-relative)
inline bool matches_relabeling(const ExchangeMatrix& B0, const std::vector<Rat>& y0,
                               const SeedState& fin, const std::vector<int>& sigma) {
    int n = B0.n;
    for (int i = 0; i < n; ++i)
        if (fin.y[sigma[i]] != y0[i]) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (fin.B.b[sigma[i]][sigma[j]] != B0.b[i][j]) return false;
    return true;
}

}  // namespace detail

/**
 * Runs the 1-based sequence from (B, generic y) and classifies the
 * result. The relabeling, when one exists, is recovered from the
 * canonical forms of the initial and final states and then re-verified
 * entry by entry at both sample points.
 */
inline LoopReport verify_loop(const ExchangeMatrix& B, const std::vector<int>& seq,
                              std::uint64_t seed = 20260822) {
    B.validate();
    LoopReport rep;
    rep.length = static_cast<int>(seq.size());

    SeedState s1 = make_seed(B, sample_point(B.n, seed));
    SeedState s2 = make_seed(B, sample_point(B.n, seed + 1));
    const SeedState init1 = s1, init2 = s2;
    rep.trace = apply_sequence(s1, seq);
    apply_sequence(s2, seq);

    if (s1 == init1 && s2 == init2) {
        rep.closed = Closure::strict;
        return rep;
    }

    // relabeling candidate from canonical forms of the first sample
    std::vector<int> p_init, p_fin;
    std::string k_init = canonical_key(init1, KeyMode::unlabeled, &p_init);
    std::string k_fin = canonical_key(s1, KeyMode::unlabeled, &p_fin);
    if (k_init == k_fin) {
        int n = B.n;
        std::vector<int> sigma(n);
        for (int a = 0; a < n; ++a) sigma[p_init[a]] = p_fin[a];
        if (detail::matches_relabeling(init1.B, init1.y, s1, sigma) &&
            detail::matches_relabeling(init2.B, init2.y, s2, sigma)) {
            rep.closed = Closure::up_to_permutation;
            rep.perm = sigma;
            return rep;
        }
    }
    rep.closed = Closure::open;
    return rep;
}

// ---- rank-2 loops inside a bigger seed ----

struct Rank2Loop {
    int i = 0, j = 0;  // 0-based pair
    Rank2Class cls = Rank2Class::Infinite;
    bool closed = false;
    int length = 0;  // first recurrence of the unlabeled key
};

/**
 * For every unordered pair with finite rank-2 class, alternately
 * mutates i, j, i, j, ... on the full seed until its unlabeled key
 * recurs, up to the step bound. Infinite-class pairs are reported
 * unclosed without mutating.
 */
inline std::vector<Rank2Loop> rank2_loops(const ExchangeMatrix& B, int bound = 24,
                                          std::uint64_t seed = 20260822) {
    B.validate();
    std::vector<Rank2Loop> out;
    for (int i = 0; i < B.n; ++i) {
        for (int j = i + 1; j < B.n; ++j) {
            Rank2Loop r;
            r.i = i;
            r.j = j;
            r.cls = B.rank2_class(i, j);
            if (r.cls != Rank2Class::Infinite) {
                SeedState s = make_seed(B, sample_point(B.n, seed));
                std::string key0 = canonical_key(s, KeyMode::unlabeled);
                for (int t = 1; t <= bound; ++t) {
                    mutate_seed(s, t % 2 == 1 ? i : j);
                    if (canonical_key(s, KeyMode::unlabeled) == key0) {
                        r.closed = true;
                        r.length = t;
                        break;
                    }
                }
            }
            out.push_back(r);
        }
    }
    return out;
}

}  // namespace cluster
