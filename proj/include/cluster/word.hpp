#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cluster/exchange_matrix.hpp"

namespace cluster {

/// A factor's exponent vector left the non-negative cone.
struct NegativeConeError : std::domain_error {
    explicit NegativeConeError(const std::string& what) : std::domain_error(what) {}
};

/// One compact-dilogarithm factor: argument exponent vector, base
/// exponent k (the factor lives over q^k), and power sign.
struct DilogFactor {
    std::vector<Int> alpha;
    int k = 1;
    int sign = 1;

    friend bool operator==(const DilogFactor& a, const DilogFactor& b) {
        return a.alpha == b.alpha && a.k == b.k && a.sign == b.sign;
    }
    friend bool operator!=(const DilogFactor& a, const DilogFactor& b) { return !(a == b); }
};

using DilogWord = std::vector<DilogFactor>;

/// Skew-symmetric pairing of a seed: Λ = D·B with D the symmetrizer.
inline IntMat pairing_matrix(const ExchangeMatrix& B, const std::vector<Int>& d) {
    if (static_cast<int>(d.size()) != B.n)
        throw std::invalid_argument("pairing_matrix: symmetrizer size mismatch");
    IntMat L(static_cast<std::size_t>(B.n), std::vector<Int>(static_cast<std::size_t>(B.n)));
    for (int i = 0; i < B.n; ++i)
        for (int j = 0; j < B.n; ++j)
            L[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                checked_mul(d[static_cast<std::size_t>(i)],
                            B.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return L;
}

/// Bilinear form a^T Λ b.
inline Int pairing_form(const IntMat& L, const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.size() != L.size() || b.size() != L.size())
        throw std::invalid_argument("pairing_form: vector size mismatch");
    Int total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) row = checked_add(row, checked_mul(L[i][j], b[j]));
        total = checked_add(total, checked_mul(a[i], row));
    }
    return total;
}

/// Digit-string exponent vector, digits 1..n with multiplicity; "124"
/// over rank 4 is (1,1,0,1).
inline std::vector<Int> parse_shorthand(const std::string& s, int n) {
    if (n < 1 || n > 9) throw std::invalid_argument("parse_shorthand: rank must be in 1..9");
    std::vector<Int> alpha(static_cast<std::size_t>(n), 0);
    for (char ch : s) {
        if (ch < '1' || ch > '0' + n)
            throw std::invalid_argument(std::string("parse_shorthand: bad digit '") + ch + "'");
        ++alpha[static_cast<std::size_t>(ch - '1')];
    }
    return alpha;
}

inline std::string format_shorthand(const std::vector<Int>& alpha) {
    if (alpha.size() > 9)
        throw std::invalid_argument("format_shorthand: rank must be at most 9");
    std::string s;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0) throw NegativeConeError("format_shorthand: negative exponent");
        for (Int m = 0; m < alpha[i]; ++m) s += static_cast<char>('1' + i);
    }
    return s;
}

inline Int vector_degree(const std::vector<Int>& alpha) {
    Int d = 0;
    for (Int v : alpha) d = checked_add(d, v);
    return d;
}

}  // namespace cluster
