/**
 * @file fixtures.hpp
 * @brief Built-in seed matrices, loop sequences, and fixture files.
 *
 * The registry collects the desk-scale examples the test suite and the
 * CLI operate on: the D4 star, the genus-1 torus quiver, square-product
 * grids (generated for any (k, n)), and the four finite rank-2 types.
 * Expected loop classifications recorded here are the values the
 * mutation engine itself reproduces; tests assert them.
 */
#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "cluster/loops.hpp"

namespace cluster {

struct Fixture {
    std::string name;
    ExchangeMatrix B;
    std::vector<Int> d;              // minimal symmetrizer
    std::vector<int> loop;           // canonical 1-based loop sequence
    Closure expected = Closure::open;
    std::vector<int> expected_perm;  // 0-based, for up_to_permutation
    std::string identity_file;       // relative to fixture_dir(), "" if none
    std::string trace_file;
};

/**
 * Grid quiver on a k x n array of vertices, label(i, j) = n*i + j + 1.
 * Horizontal arrows carry sign sh*(-1)^(i+j), vertical sv*(-1)^(i+j).
 */
inline ExchangeMatrix akan_matrix(int k, int n, int sh = 1, int sv = -1) {
    if (k < 1 || n < 1) throw std::invalid_argument("akan_matrix: grid sides must be >= 1");
    int N = k * n;
    IntMat B(N, std::vector<Int>(N, 0));
    auto lab = [n](int i, int j) { return n * i + j; };
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < n; ++j) {
            int s = (i + j) % 2 == 0 ? 1 : -1;
            if (j + 1 < n) {
                B[lab(i, j)][lab(i, j + 1)] = sh * s;
                B[lab(i, j + 1)][lab(i, j)] = -sh * s;
            }
            if (i + 1 < k) {
                B[lab(i, j)][lab(i + 1, j)] = sv * s;
                B[lab(i + 1, j)][lab(i, j)] = -sv * s;
            }
        }
    }
    return ExchangeMatrix(B);
}

/// Bipartite sequence: all even-checkerboard vertices, then all odd,
/// repeated for the given number of rounds. 1-based labels.
inline std::vector<int> akan_sequence(int k, int n, int rounds) {
    std::vector<int> cls0, cls1;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
            ((i + j) % 2 == 0 ? cls0 : cls1).push_back(n * i + j + 1);
    std::vector<int> seq;
    for (int r = 0; r < rounds; ++r) {
        seq.insert(seq.end(), cls0.begin(), cls0.end());
        seq.insert(seq.end(), cls1.begin(), cls1.end());
    }
    return seq;
}

/// Default round count for the (k, n) grid: the candidate period of the
/// bipartite dynamics (halved when k + n is even).
inline int akan_default_rounds(int k, int n) {
    int r = k + n + 2;
    return r % 2 == 0 ? r / 2 : r;
}

inline std::string fixture_dir() {
    if (const char* env = std::getenv("CLUSTER_FIXTURE_DIR")) return env;
#ifdef CLUSTER_FIXTURE_DIR
    return CLUSTER_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

inline const std::vector<Fixture>& registry() {
    static const std::vector<Fixture> fixtures = [] {
        std::vector<Fixture> v;

        // D4 star: three sources feeding one sink
        v.push_back({"d4",
                     ExchangeMatrix({{0, 0, 0, -1}, {0, 0, 0, -1}, {0, 0, 0, -1}, {1, 1, 1, 0}}),
                     {1, 1, 1, 1},
                     {1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 4},
                     Closure::strict,
                     {},
                     "d4_identity.json",
                     ""});

        // genus-1 triangulated torus quiver
        v.push_back({"genus1",
                     ExchangeMatrix({{0, 0, -1, 1, -1, 1},
                                     {0, 0, 1, -1, 1, -1},
                                     {1, -1, 0, 1, 0, -1},
                                     {-1, 1, -1, 0, 1, 0},
                                     {1, -1, 0, -1, 0, 1},
                                     {-1, 1, 1, 0, -1, 0}}),
                     {1, 1, 1, 1, 1, 1},
                     {5, 6, 4, 3, 6, 5, 1, 2, 4, 3, 6, 5, 3, 4, 2, 1,
                      6, 5, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6, 4, 3, 2, 1},
                     Closure::strict,
                     {},
                     "",
                     ""});

        // 3x3 grid: bipartite loop closes up to the antipodal relabeling
        v.push_back({"a3a3",
                     akan_matrix(3, 3),
                     std::vector<Int>(9, 1),
                     akan_sequence(3, 3, 4),
                     Closure::up_to_permutation,
                     {8, 7, 6, 5, 4, 3, 2, 1, 0},
                     "a3a3_identity.json",
                     "a3a3_trace.jsonl"});

        // 2x2 grid: same antipodal pattern at three rounds
        v.push_back({"a2a2",
                     akan_matrix(2, 2),
                     std::vector<Int>(4, 1),
                     akan_sequence(2, 2, 3),
                     Closure::up_to_permutation,
                     {3, 2, 1, 0},
                     "",
                     ""});

        // finite rank-2 types
        v.push_back({"a1a1",
                     ExchangeMatrix({{0, 0}, {0, 0}}),
                     {1, 1},
                     {1, 2, 1, 2},
                     Closure::strict,
                     {},
                     "rank2/a1a1.json",
                     ""});
        v.push_back({"a2",
                     ExchangeMatrix({{0, -1}, {1, 0}}),
                     {1, 1},
                     {1, 2, 1, 2, 1},
                     Closure::up_to_permutation,
                     {1, 0},
                     "rank2/a2.json",
                     ""});
        v.push_back({"b2",
                     ExchangeMatrix({{0, -2}, {1, 0}}),
                     {1, 2},
                     {1, 2, 1, 2, 1, 2},
                     Closure::strict,
                     {},
                     "rank2/b2.json",
                     ""});
        v.push_back({"g2",
                     ExchangeMatrix({{0, -1}, {3, 0}}),
                     {3, 1},
                     {1, 2, 1, 2, 1, 2, 1, 2},
                     Closure::strict,
                     {},
                     "rank2/g2.json",
                     ""});
        return v;
    }();
    return fixtures;
}

inline const Fixture* find_fixture(const std::string& name) {
    for (const auto& f : registry())
        if (f.name == name) return &f;
    return nullptr;
}

}  // namespace cluster
