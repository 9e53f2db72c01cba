#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cluster/rewrite.hpp"

namespace cluster {

/// NotFound (found == false) means a bound was exhausted, never a
/// disproof of derivability.
struct SearchResult {
    bool found = false;
    bool limit_hit = false;
    RewriteTrace trace;
    std::size_t expanded = 0;
    std::size_t frontier_peak = 0;
    int pentagon_steps = 0;
};

namespace detail {

inline std::string word_key(const DilogWord& w) {
    std::ostringstream os;
    for (const DilogFactor& f : w) {
        for (Int v : f.alpha) os << v << ",";
        os << "|" << f.k << "|" << f.sign << ";";
    }
    return os.str();
}

inline std::map<std::string, int> factor_counts(const DilogWord& w) {
    std::map<std::string, int> c;
    for (const DilogFactor& f : w) ++c[word_key({f})];
    return c;
}

/// Multiset symmetric difference; each pentagon move inserts or removes
/// exactly one factor, so this lower-bounds the remaining pentagons.
inline int multiset_distance(const std::map<std::string, int>& a,
                             const std::map<std::string, int>& b) {
    int d = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            d += ia->second;
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            d += ib->second;
            ++ib;
        } else {
            d += std::abs(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return d;
}

/// Moves the factor at src next to dst by commute swaps; fails when a
/// passed factor does not commute with the mover.
inline bool bubble_to(DilogWord& w, std::vector<RewriteMove>& moves, std::size_t src,
                      std::size_t dst, const IntMat& L) {
    while (src > dst) {
        if (pairing_form(L, w[src - 1].alpha, w[src].alpha) != 0) return false;
        std::swap(w[src - 1], w[src]);
        moves.push_back({MoveKind::commute_swap, static_cast<int>(src - 1)});
        --src;
    }
    while (src < dst) {
        if (pairing_form(L, w[src].alpha, w[src + 1].alpha) != 0) return false;
        std::swap(w[src], w[src + 1]);
        moves.push_back({MoveKind::commute_swap, static_cast<int>(src)});
        ++src;
    }
    return true;
}

struct PentagonStep {
    DilogWord arranged;           // parent's canonical form after the bubbles
    std::vector<RewriteMove> bubbles;
    RewriteMove pentagon;
    DilogWord result;             // exact word after the pentagon
};

/// All pentagon moves reachable from a canonical word by first bubbling
/// one factor of the pair (or triple) adjacent to the other.
inline std::vector<PentagonStep> pentagon_neighbors(const DilogWord& w, const IntMat& L) {
    std::vector<PentagonStep> out;
    int len = static_cast<int>(w.size());
    auto try_arranged = [&](DilogWord arranged, std::vector<RewriteMove> bubbles, int pos,
                            MoveKind kind) {
        RewriteMove pm{kind, pos};
        DilogWord result = arranged;
        try {
            apply_move(result, pm, L);
        } catch (const MoveNotApplicable&) {
            return;
        }
        out.push_back({std::move(arranged), std::move(bubbles), pm, std::move(result)});
    };
    for (int i = 0; i < len; ++i) {
        for (int j = i + 1; j < len; ++j) {
            const DilogFactor& f = w[static_cast<std::size_t>(i)];
            const DilogFactor& g = w[static_cast<std::size_t>(j)];
            if (f.sign != 1 || g.sign != 1 || f.k != g.k) continue;
            if (pairing_form(L, f.alpha, g.alpha) != -static_cast<Int>(f.k)) continue;
            // Two assembly directions: pull g left, or push f right.
            {
                DilogWord a = w;
                std::vector<RewriteMove> mv;
                if (bubble_to(a, mv, static_cast<std::size_t>(j),
                              static_cast<std::size_t>(i) + 1, L))
                    try_arranged(std::move(a), std::move(mv), i, MoveKind::pentagon_expand);
            }
            if (j > i + 1) {
                DilogWord a = w;
                std::vector<RewriteMove> mv;
                if (bubble_to(a, mv, static_cast<std::size_t>(i),
                              static_cast<std::size_t>(j) - 1, L))
                    try_arranged(std::move(a), std::move(mv), j - 1,
                                 MoveKind::pentagon_expand);
            }
        }
    }
    // Contractions: assemble [g, m, f] with m = f+g at the leftmost of
    // the three source positions.
    for (int pg = 0; pg < len; ++pg) {
        for (int pf = 0; pf < len; ++pf) {
            if (pf == pg) continue;
            const DilogFactor& g = w[static_cast<std::size_t>(pg)];
            const DilogFactor& f = w[static_cast<std::size_t>(pf)];
            if (f.sign != 1 || g.sign != 1 || f.k != g.k) continue;
            if (pairing_form(L, f.alpha, g.alpha) != -static_cast<Int>(f.k)) continue;
            std::vector<Int> sum(f.alpha.size());
            for (std::size_t t = 0; t < sum.size(); ++t)
                sum[t] = checked_add(f.alpha[t], g.alpha[t]);
            for (int pm = 0; pm < len; ++pm) {
                if (pm == pg || pm == pf) continue;
                const DilogFactor& m = w[static_cast<std::size_t>(pm)];
                if (m.sign != 1 || m.k != f.k || m.alpha != sum) continue;
                int base = std::min({pg, pm, pf});
                DilogWord a = w;
                std::vector<RewriteMove> mv;
                // Track how earlier bubbles shift the later sources.
                auto shifted = [&](int p, int done_src, int done_dst) {
                    if (done_src > p && done_dst <= p) return p + 1;
                    if (done_src < p && done_dst >= p) return p - 1;
                    return p;
                };
                int cg = pg, cm = pm, cf = pf;
                if (!bubble_to(a, mv, static_cast<std::size_t>(cg),
                               static_cast<std::size_t>(base), L))
                    continue;
                cm = shifted(cm, cg, base);
                cf = shifted(cf, cg, base);
                if (cm < base + 1 ||
                    !bubble_to(a, mv, static_cast<std::size_t>(cm),
                               static_cast<std::size_t>(base) + 1, L))
                    continue;
                cf = shifted(cf, cm, base + 1);
                if (cf < base + 2 ||
                    !bubble_to(a, mv, static_cast<std::size_t>(cf),
                               static_cast<std::size_t>(base) + 2, L))
                    continue;
                try_arranged(std::move(a), std::move(mv), base, MoveKind::pentagon_contract);
            }
        }
    }
    return out;
}

}  // namespace detail

/**
 * Heuristic best-first search for a commute/pentagon derivation taking
 * lhs to rhs. States are canonical forms; cost counts pentagon moves
 * with the multiset distance to the target as admissible heuristic.
 * max_steps bounds expanded states, max_frontier the open queue.
 */
inline SearchResult search_rewrite(const DilogWord& lhs, const DilogWord& rhs,
                                   const IntMat& L, std::size_t max_steps = 100000,
                                   std::size_t max_frontier = 200000) {
    SearchResult res;
    res.trace.Lambda = L;

    struct Node {
        DilogWord canon;
        int parent = -1;
        detail::PentagonStep step;
        int g = 0;
    };

    DilogWord target = canonical_form(rhs, L);
    auto target_counts = detail::factor_counts(target);
    std::vector<Node> nodes;
    nodes.push_back({canonical_form(lhs, L), -1, {}, 0});

    auto heuristic = [&](const DilogWord& w) {
        return detail::multiset_distance(detail::factor_counts(w), target_counts);
    };

    using Entry = std::pair<int, int>;  // (g + h, node index)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    std::map<std::string, int> best_g;
    open.push({heuristic(nodes[0].canon), 0});
    best_g[detail::word_key(nodes[0].canon)] = 0;

    int goal = -1;
    while (!open.empty()) {
        auto [f, idx] = open.top();
        open.pop();
        const Node& node = nodes[static_cast<std::size_t>(idx)];
        auto it = best_g.find(detail::word_key(node.canon));
        if (it != best_g.end() && it->second < node.g) continue;
        if (node.canon == target) {
            goal = idx;
            break;
        }
        if (res.expanded >= max_steps) {
            res.limit_hit = true;
            break;
        }
        ++res.expanded;
        for (detail::PentagonStep& st : detail::pentagon_neighbors(node.canon, L)) {
            DilogWord canon = canonical_form(st.result, L);
            int g = node.g + 1;
            std::string key = detail::word_key(canon);
            auto found = best_g.find(key);
            if (found != best_g.end() && found->second <= g) continue;
            best_g[key] = g;
            nodes.push_back({std::move(canon), idx, std::move(st), g});
            open.push({g + heuristic(nodes.back().canon), static_cast<int>(nodes.size()) - 1});
            if (open.size() > max_frontier) {
                res.limit_hit = true;
                break;
            }
        }
        if (res.limit_hit) break;
        res.frontier_peak = std::max(res.frontier_peak, open.size());
    }

    if (goal < 0) return res;

    std::vector<int> path;
    for (int i = goal; i >= 0; i = nodes[static_cast<std::size_t>(i)].parent)
        path.push_back(i);
    std::reverse(path.begin(), path.end());

    // Stitch exact words: commute into each stored arrangement, apply
    // its pentagon, and finish by commuting onto rhs itself.
    DilogWord cur = lhs;
    res.trace.words.push_back(cur);
    auto emit = [&](const RewriteMove& m) {
        apply_move(cur, m, L);
        res.trace.moves.push_back(m);
        res.trace.words.push_back(cur);
    };
    for (std::size_t t = 1; t < path.size(); ++t) {
        const detail::PentagonStep& st = nodes[static_cast<std::size_t>(path[t])].step;
        auto plan = commute_transform(cur, st.arranged, L);
        if (!plan) return res;
        for (const RewriteMove& m : *plan) emit(m);
        emit(st.pentagon);
        ++res.pentagon_steps;
    }
    auto tail = commute_transform(cur, rhs, L);
    if (!tail) return res;
    for (const RewriteMove& m : *tail) emit(m);
    res.found = true;
    return res;
}

}  // namespace cluster
