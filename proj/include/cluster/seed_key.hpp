/**
 * @file seed_key.hpp
 * @brief Canonical byte strings identifying seeds up to relabeling.
 *
 * A seed key serializes (B, y) position by position: block a holds y_a
 * followed by the B entries coupling a to earlier positions. Labeled
 * keys serialize as-is; unlabeled keys minimize the block sequence over
 * all simultaneous relabelings by branch and bound. Because y comes
 * first in each block, generic coefficient values cut ties immediately
 * and the search stays near-linear; a node cap guards degenerate fully
 * symmetric inputs.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cluster/seed.hpp"

namespace cluster {

enum class KeyMode { labeled, unlabeled };

namespace detail {

/// Comparable representation of one serialization block: y_a as a pair
/// of strings, then the wedge of B entries to earlier positions.
struct KeyBlock {
    Rat y;
    std::vector<Int> wedge;

    // Rat compares exactly; string form is only for serialization
    int cmp(const KeyBlock& o) const {
        if (y != o.y) return y < o.y ? -1 : 1;
        if (wedge != o.wedge) return wedge < o.wedge ? -1 : 1;
        return 0;
    }
};

inline KeyBlock make_block(const SeedState& s, const std::vector<int>& p, int a) {
    KeyBlock blk;
    blk.y = s.y[p[a]];
    blk.wedge.reserve(2 * a);
    for (int b = 0; b < a; ++b) {
        blk.wedge.push_back(s.B.b[p[a]][p[b]]);
        blk.wedge.push_back(s.B.b[p[b]][p[a]]);
    }
    return blk;
}

struct KeySearch {
    const SeedState& s;
    int n;
    std::vector<int> best_perm;
    std::vector<KeyBlock> best;
    std::vector<int> cur;
    std::vector<KeyBlock> cur_blocks;
    std::vector<bool> used;
    long long nodes = 0, node_cap = 0;

    explicit KeySearch(const SeedState& st, long long cap)
        : s(st), n(st.B.n), used(st.B.n, false), node_cap(cap) {}

    // Invariant: whenever best is nonempty, the current prefix equals
    // best's prefix. A strictly smaller block invalidates best at once,
    // so comparisons against best[pos] stay meaningful at every level.
    void rec(int pos) {
        if (++nodes > node_cap)
            throw ResourceLimitError("seed key canonicalization node cap exceeded");
        if (pos == n) {
            best = cur_blocks;
            best_perm = cur;
            return;
        }
        for (int o = 0; o < n; ++o) {
            if (used[o]) continue;
            cur.push_back(o);
            KeyBlock blk = make_block(s, cur, pos);
            if (!best.empty()) {
                int c = blk.cmp(best[pos]);
                if (c > 0) {
                    cur.pop_back();
                    continue;  // prefix already worse than best
                }
                if (c < 0) {
                    best.clear();
                    best_perm.clear();
                }
            }
            used[o] = true;
            cur_blocks.push_back(std::move(blk));
            rec(pos + 1);
            cur_blocks.pop_back();
            used[o] = false;
            cur.pop_back();
        }
    }
};

inline std::string serialize_blocks(const std::vector<KeyBlock>& blocks) {
    std::string out = "n=" + std::to_string(blocks.size()) + ";";
    for (const auto& blk : blocks) {
        out += "y=" + blk.y.str() + ";b=";
        for (Int v : blk.wedge) {
            out += std::to_string(v);
            out += ',';
        }
        out += ';';
    }
    return out;
}

}  // namespace detail

/// FNV-1a 64-bit, used for short displayable key digests.
inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

/**
 * Canonical key of a seed. For unlabeled mode also reports the
 * relabeling p achieving the minimum: position a of the canonical form
 * is original index p[a].
 */
inline std::string canonical_key(const SeedState& s, KeyMode mode,
                                 std::vector<int>* perm_out = nullptr,
                                 long long node_cap = 2000000) {
    int n = s.B.n;
    if (mode == KeyMode::labeled) {
        std::vector<int> id(n);
        std::vector<detail::KeyBlock> blocks;
        for (int a = 0; a < n; ++a) {
            id[a] = a;
            blocks.push_back(detail::make_block(s, id, a));
        }
        if (perm_out) *perm_out = id;
        return "L|" + detail::serialize_blocks(blocks);
    }
    detail::KeySearch ks(s, node_cap);
    ks.rec(0);
    if (perm_out) *perm_out = ks.best_perm;
    return "U|" + detail::serialize_blocks(ks.best);
}

}  // namespace cluster
