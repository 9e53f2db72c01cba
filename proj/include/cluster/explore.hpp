/**
 * @file explore.hpp
 * @brief Bounded breadth-first exploration of the exchange graph.
 *
 * Vertices are seeds identified by canonical key (labeled or
 * unlabeled); edges are single mutations. The slice records one hex
 * digest per vertex plus the undirected edges between discovered
 * vertices. Exploration is deterministic: neighbors are visited in
 * direction order and the emitted vertex list is sorted by digest.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cluster/loops.hpp"

namespace cluster {

struct GraphSlice {
    int n = 0;
    KeyMode mode = KeyMode::unlabeled;
    bool truncated = false;                 // depth bound cut expansion
    std::vector<std::string> digests;       // vertex id -> hex digest
    std::vector<int> depths;                // vertex id -> BFS depth
    std::vector<std::array<int, 3>> edges;  // (a, b, direction), a < b, 1-based k
};

/**
 * BFS from (B, y) to the given depth. Throws ResourceLimitError as soon
 * as a newly discovered vertex would exceed max_vertices.
 */
inline GraphSlice explore(const ExchangeMatrix& B, const std::vector<Rat>& y,
                          int depth_limit = 8, int max_vertices = 1000000,
                          KeyMode mode = KeyMode::unlabeled) {
    B.validate();
    GraphSlice slice;
    slice.n = B.n;
    slice.mode = mode;

    struct Vertex {
        SeedState state;
        int depth;
    };
    std::map<std::string, int> ids;
    std::vector<Vertex> verts;
    std::vector<std::string> keys;

    SeedState root = make_seed(B, y);
    std::string rkey = canonical_key(root, mode);
    ids[rkey] = 0;
    verts.push_back({root, 0});
    keys.push_back(rkey);

    // labeled mode: an edge is (pair, direction) and mutation is an
    // involution, so both endpoints discover the same triple. Unlabeled
    // mode: the discovering direction depends on the representative, so
    // identity is the pair alone, labeled by the smallest direction seen.
    std::map<std::pair<int, int>, int> edge_dir;
    for (std::size_t head = 0; head < verts.size(); ++head) {
        // copy: verts grows and may reallocate while we expand
        SeedState cur = verts[head].state;
        int d = verts[head].depth;
        if (d >= depth_limit) {
            slice.truncated = true;
            continue;
        }
        for (int k = 0; k < B.n; ++k) {
            SeedState nxt = cur;
            mutate_seed(nxt, k);
            std::string key = canonical_key(nxt, mode);
            auto it = ids.find(key);
            int id;
            if (it == ids.end()) {
                if (static_cast<int>(verts.size()) >= max_vertices)
                    throw ResourceLimitError("explore: vertex budget exceeded");
                id = static_cast<int>(verts.size());
                ids[key] = id;
                verts.push_back({nxt, d + 1});
                keys.push_back(key);
            } else {
                id = it->second;
            }
            int a = static_cast<int>(head), b = id;
            if (a == b) continue;  // relabeling-symmetric self-edge, dropped
            std::pair<int, int> pr{std::min(a, b), std::max(a, b)};
            auto [eit, fresh] = edge_dir.try_emplace(pr, k + 1);
            if (!fresh && mode == KeyMode::unlabeled)
                eit->second = std::min(eit->second, k + 1);
        }
    }

    // emit vertices sorted by digest for a stable external order
    std::vector<int> order(verts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::vector<std::string> digests(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) digests[i] = hex64(fnv1a64(keys[i]));
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (digests[a] != digests[b]) return digests[a] < digests[b];
        return a < b;
    });
    std::vector<int> newid(verts.size());
    for (std::size_t r = 0; r < order.size(); ++r) newid[order[r]] = static_cast<int>(r);
    slice.digests.resize(verts.size());
    slice.depths.resize(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        slice.digests[newid[i]] = digests[i];
        slice.depths[newid[i]] = verts[i].depth;
    }
    for (const auto& [pr, k] : edge_dir) {
        int a = newid[pr.first], b = newid[pr.second];
        slice.edges.push_back({std::min(a, b), std::max(a, b), k});
    }
    std::sort(slice.edges.begin(), slice.edges.end());
    return slice;
}

/// Deterministic DOT rendering of a slice (undirected).
inline std::string export_dot(const GraphSlice& slice) {
    std::string out = "graph exchange {\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < slice.digests.size(); ++i) {
        out += "  v" + std::to_string(i) + " [label=\"" + slice.digests[i] +
               "\", depth=" + std::to_string(slice.depths[i]) + "];\n";
    }
    for (const auto& e : slice.edges) {
        out += "  v" + std::to_string(e[0]) + " -- v" + std::to_string(e[1]) +
               " [label=\"" + std::to_string(e[2]) + "\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace cluster
