/**
 * @file exchange_matrix.hpp
 * @brief Skew-symmetrizable integer exchange matrices and their mutation.
 *
 * An ExchangeMatrix holds an n x n integer matrix B for which some positive
 * integer diagonal D makes D*B skew-symmetric. validate() computes the
 * minimal such D or throws NotSkewSymmetrizable.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cluster/rational.hpp"

namespace cluster {

using Int = std::int64_t;
using IntMat = std::vector<std::vector<Int>>;

struct NotSkewSymmetrizable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- checked arithmetic (mutation can grow entries; fail loudly) ----

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in matrix arithmetic");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in matrix arithmetic");
    return r;
}

// ---- rank-2 classification ----

enum class Rank2Class { A1xA1, A2, B2, G2, Infinite };

inline std::string rank2_name(Rank2Class c) {
    switch (c) {
        case Rank2Class::A1xA1: return "A1xA1";
        case Rank2Class::A2: return "A2";
        case Rank2Class::B2: return "B2";
        case Rank2Class::G2: return "G2";
        default: return "Infinite";
    }
}

struct ExchangeMatrix {
    int n = 0;
    IntMat b;

    ExchangeMatrix() = default;
    explicit ExchangeMatrix(IntMat m) : n(static_cast<int>(m.size())), b(std::move(m)) {
        for (const auto& row : b)
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument("ExchangeMatrix: matrix not square");
    }

    bool operator==(const ExchangeMatrix& o) const { return n == o.n && b == o.b; }

    /**
     * Minimal positive integer symmetrizer d with d_i b_ij = -d_j b_ji.
     *
     * Requires b_ij and b_ji to be zero together or of opposite sign.
     * Ratios d_j/d_i propagate along nonzero entries; every connected
     * component is scaled to the smallest integer vector, so the result
     * is unique. Throws NotSkewSymmetrizable on any inconsistency.
     */
    std::vector<Int> validate() const {
        for (int i = 0; i < n; ++i) {
            if (b[i][i] != 0)
                throw NotSkewSymmetrizable("nonzero diagonal entry");
            for (int j = 0; j < n; ++j) {
                bool zi = b[i][j] == 0, zj = b[j][i] == 0;
                if (zi != zj)
                    throw NotSkewSymmetrizable("b_ij zero but b_ji nonzero");
                if (!zi && (b[i][j] > 0) == (b[j][i] > 0))
                    throw NotSkewSymmetrizable("b_ij and b_ji have equal sign");
            }
        }
        // ratio[i] = d_i relative to its component root, as exact rationals
        std::vector<Rat> ratio(n);
        std::vector<int> comp(n, -1);
        std::vector<Int> d(n, 1);
        for (int root = 0; root < n; ++root) {
            if (comp[root] >= 0) continue;
            std::vector<int> stack{root}, members;
            comp[root] = root;
            ratio[root] = Rat(1);
            while (!stack.empty()) {
                int i = stack.back();
                stack.pop_back();
                members.push_back(i);
                for (int j = 0; j < n; ++j) {
                    if (b[i][j] == 0) continue;
                    // d_i b_ij = -d_j b_ji  =>  d_j = d_i * (-b_ij / b_ji)
                    Rat rj = ratio[i] * Rat(-BigInt(b[i][j]), BigInt(b[j][i]));
                    if (comp[j] < 0) {
                        comp[j] = root;
                        ratio[j] = rj;
                        stack.push_back(j);
                    } else if (ratio[j] != rj) {
                        throw NotSkewSymmetrizable("inconsistent symmetrizer ratios");
                    }
                }
            }
            // scale the component to the minimal positive integer vector
            BigInt lcm_den = 1, gcd_num = 0;
            for (int i : members) {
                const BigInt& den = ratio[i].den();
                lcm_den = lcm_den / big_gcd(lcm_den, den) * den;
            }
            for (int i : members)
                gcd_num = big_gcd(gcd_num, ratio[i].num() * (lcm_den / ratio[i].den()));
            for (int i : members) {
                BigInt v = ratio[i].num() * (lcm_den / ratio[i].den()) / gcd_num;
                d[i] = v.convert_to<Int>();
            }
        }
        return d;
    }

    /// Matrix mutation at direction k (0-based). Involutive.
    void mutate(int k) {
        if (k < 0 || k >= n) throw std::out_of_range("mutate: direction out of range");
        IntMat nb = b;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == k || j == k) {
                    nb[i][j] = -b[i][j];
                } else if (b[i][k] > 0 && b[k][j] > 0) {
                    nb[i][j] = checked_add(b[i][j], checked_mul(b[i][k], b[k][j]));
                } else if (b[i][k] < 0 && b[k][j] < 0) {
                    nb[i][j] = checked_sub(b[i][j], checked_mul(b[i][k], b[k][j]));
                }
            }
        }
        b = std::move(nb);
    }

    /// Finite-type class of the sub-matrix on rows/columns {i, j}.
    Rank2Class rank2_class(int i, int j) const {
        Int p = checked_mul(b[i][j], b[j][i]);
        switch (p < 0 ? -p : p) {
            case 0: return Rank2Class::A1xA1;
            case 1: return Rank2Class::A2;
            case 2: return Rank2Class::B2;
            case 3: return Rank2Class::G2;
            default: return Rank2Class::Infinite;
        }
    }

private:
    static Int checked_sub(Int a, Int b_) {
        Int r;
        if (__builtin_sub_overflow(a, b_, &r))
            throw std::overflow_error("integer overflow in matrix arithmetic");
        return r;
    }
};

}  // namespace cluster
