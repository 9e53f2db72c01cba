#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cluster/qrat.hpp"
#include "cluster/word.hpp"

namespace cluster {

/// Graded lexicographic order on exponent vectors: total degree first.
struct GradedLexLess {
    bool operator()(const std::vector<Int>& a, const std::vector<Int>& b) const {
        Int da = 0, db = 0;
        for (Int v : a) da += v;
        for (Int v : b) db += v;
        if (da != db) return da < db;
        return a < b;
    }
};

/**
 * Normal-ordered quantum-torus element truncated by total degree:
 * coefficients attach on the left of monomials Y_alpha. Invariants: no
 * stored zero coefficients; every exponent vector is in the
 * non-negative cone with degree at most the cap.
 */
class TruncatedSeries {
public:
    TruncatedSeries(int rank, int degree_cap) : n_(rank), cap_(degree_cap) {
        if (rank < 1) throw std::invalid_argument("TruncatedSeries: rank must be positive");
        if (degree_cap < 0) throw std::invalid_argument("TruncatedSeries: negative degree cap");
    }

    static TruncatedSeries one(int rank, int degree_cap) {
        TruncatedSeries s(rank, degree_cap);
        s.terms_.emplace(std::vector<Int>(static_cast<std::size_t>(rank), 0), QRat(1));
        return s;
    }

    int rank() const { return n_; }
    int degree_cap() const { return cap_; }
    const std::map<std::vector<Int>, QRat, GradedLexLess>& terms() const { return terms_; }

    QRat at(const std::vector<Int>& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? QRat() : it->second;
    }

    void set(const std::vector<Int>& alpha, QRat value) {
        if (static_cast<int>(alpha.size()) != n_)
            throw std::invalid_argument("TruncatedSeries: rank mismatch");
        Int deg = 0;
        for (Int v : alpha) {
            if (v < 0) throw NegativeConeError("TruncatedSeries: negative exponent");
            deg = checked_add(deg, v);
        }
        if (deg > cap_) throw std::invalid_argument("TruncatedSeries: degree above cap");
        if (value.is_zero())
            terms_.erase(alpha);
        else
            terms_.insert_or_assign(alpha, std::move(value));
    }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->second.is_one() &&
               terms_.begin()->first == std::vector<Int>(static_cast<std::size_t>(n_), 0);
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.n_ == b.n_ && a.cap_ == b.cap_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

private:
    int n_;
    int cap_;
    std::map<std::vector<Int>, QRat, GradedLexLess> terms_;
};

/// (c·Y_α)(c′·Y_β) = c·c′·q^{−Λ(α,β)}·Y_{α+β}, truncated by total degree.
inline TruncatedSeries normal_product(const TruncatedSeries& a, const TruncatedSeries& b,
                                      const IntMat& L) {
    if (a.rank() != b.rank() || a.degree_cap() != b.degree_cap())
        throw std::invalid_argument("normal_product: rank or degree cap mismatch");
    if (static_cast<int>(L.size()) != a.rank())
        throw std::invalid_argument("normal_product: pairing size mismatch");
    TruncatedSeries out(a.rank(), a.degree_cap());
    std::map<std::vector<Int>, QRat, GradedLexLess> acc;
    std::vector<Int> sum(static_cast<std::size_t>(a.rank()));
    for (const auto& [alpha, ca] : a.terms()) {
        Int da = vector_degree(alpha);
        for (const auto& [beta, cb] : b.terms()) {
            if (da + vector_degree(beta) > a.degree_cap()) break;
            for (std::size_t i = 0; i < sum.size(); ++i)
                sum[i] = checked_add(alpha[i], beta[i]);
            QRat term = ca * cb;
            term.shift(static_cast<int>(-pairing_form(L, alpha, beta)));
            auto [it, fresh] = acc.try_emplace(sum, term);
            if (!fresh) it->second += term;
        }
    }
    for (auto& [alpha, c] : acc)
        if (!c.is_zero()) out.set(alpha, std::move(c));
    return out;
}

/**
 * Coefficients c_0..c_M of the compact-dilogarithm series in a single
 * self-commuting variable, base q^k. The sign -1 direction is the
 * q-Pochhammer product carried to completion in each degree:
 * c_m = c_{m-1}·q^{k(2m-1)}/(1-q^{2km}); sign +1 is its series inverse.
 */
inline std::vector<QRat> psi_coefficients(int k, int sign, int M) {
    if (k < 1) throw std::invalid_argument("psi_coefficients: base exponent must be positive");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("psi_coefficients: sign must be +1 or -1");
    std::vector<QRat> inv(static_cast<std::size_t>(M) + 1);
    inv[0] = QRat(1);
    for (int m = 1; m <= M; ++m) {
        std::vector<BigInt> pc(static_cast<std::size_t>(2 * k * m) + 1, BigInt(0));
        pc.front() = 1;
        pc.back() = -1;
        QRat c = inv[static_cast<std::size_t>(m - 1)];
        c.shift(k * (2 * m - 1));
        inv[static_cast<std::size_t>(m)] = c / QRat(ZPoly(std::move(pc)));
    }
    if (sign == -1) return inv;
    std::vector<QRat> out(static_cast<std::size_t>(M) + 1);
    out[0] = QRat(1);
    for (int m = 1; m <= M; ++m) {
        QRat s;
        for (int i = 1; i <= m; ++i)
            s += inv[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(m - i)];
        out[static_cast<std::size_t>(m)] = -s;
    }
    return out;
}

/// Expansion of one factor as a series in Y_{m·α}; powers of a single
/// monomial commute, so no pairing enters.
inline TruncatedSeries psi_series(const std::vector<Int>& alpha, int k, int sign, int D,
                                  int n) {
    if (static_cast<int>(alpha.size()) != n)
        throw std::invalid_argument("psi_series: rank mismatch");
    Int w = 0;
    for (Int v : alpha) {
        if (v < 0) throw NegativeConeError("psi_series: negative exponent in argument");
        w = checked_add(w, v);
    }
    if (w == 0) throw std::invalid_argument("psi_series: zero argument");
    int M = static_cast<int>(D / w);
    std::vector<QRat> cs = psi_coefficients(k, sign, M);
    TruncatedSeries out(n, D);
    for (int m = 0; m <= M; ++m) {
        std::vector<Int> e(alpha.size());
        for (std::size_t i = 0; i < alpha.size(); ++i) e[i] = checked_mul(alpha[i], m);
        out.set(e, std::move(cs[static_cast<std::size_t>(m)]));
    }
    return out;
}

/// Left-to-right product of the factor expansions.
inline TruncatedSeries word_to_series(const DilogWord& w, const IntMat& L, int D) {
    int n = static_cast<int>(L.size());
    TruncatedSeries s = TruncatedSeries::one(n, D);
    for (const DilogFactor& f : w)
        s = normal_product(s, psi_series(f.alpha, f.k, f.sign, D, n), L);
    return s;
}

/// Outcome of a truncated-series comparison. When refuted, monomial is
/// the graded-lex first disagreement with both coefficients.
struct VerifyOutcome {
    bool verified = false;
    int degree = 0;
    std::vector<Int> monomial;
    QRat lhs_coeff, rhs_coeff;
};

inline VerifyOutcome compare_series(const TruncatedSeries& a, const TruncatedSeries& b) {
    VerifyOutcome out;
    out.degree = a.degree_cap();
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    GradedLexLess less;
    while (ia != a.terms().end() || ib != b.terms().end()) {
        bool take_a = ib == b.terms().end() ||
                      (ia != a.terms().end() && less(ia->first, ib->first));
        bool take_b = ia == a.terms().end() ||
                      (ib != b.terms().end() && less(ib->first, ia->first));
        if (take_a) {
            out.monomial = ia->first;
            out.lhs_coeff = ia->second;
            return out;
        }
        if (take_b) {
            out.monomial = ib->first;
            out.rhs_coeff = ib->second;
            return out;
        }
        if (ia->second != ib->second) {
            out.monomial = ia->first;
            out.lhs_coeff = ia->second;
            out.rhs_coeff = ib->second;
            return out;
        }
        ++ia;
        ++ib;
    }
    out.verified = true;
    return out;
}

inline VerifyOutcome verify_identity(const DilogWord& lhs, const DilogWord& rhs,
                                     const IntMat& L, int D) {
    return compare_series(word_to_series(lhs, L, D), word_to_series(rhs, L, D));
}

/**
 * Base-change fold: the base-q series equals the product of k base-q^k
 * series with arguments scaled by q^{k-2j+1}, j = 1..k. Verified as
 * commutative one-variable series to degree D.
 */
inline bool folding_check(int k, int D) {
    if (k < 1) throw std::invalid_argument("folding_check: base exponent must be positive");
    std::vector<QRat> lhs = psi_coefficients(1, 1, D);
    std::vector<QRat> rhs(static_cast<std::size_t>(D) + 1);
    rhs[0] = QRat(1);
    std::vector<QRat> base = psi_coefficients(k, 1, D);
    for (int j = 1; j <= k; ++j) {
        // Argument scale q^s multiplies the degree-m coefficient by q^{s·m}.
        int s = k - 2 * j + 1;
        std::vector<QRat> next(static_cast<std::size_t>(D) + 1);
        for (int m = 0; m <= D; ++m) {
            if (rhs[static_cast<std::size_t>(m)].is_zero()) continue;
            for (int i = 0; i + m <= D; ++i) {
                QRat f = base[static_cast<std::size_t>(i)];
                f.shift(s * i);
                next[static_cast<std::size_t>(m + i)] +=
                    rhs[static_cast<std::size_t>(m)] * f;
            }
        }
        rhs = std::move(next);
    }
    for (int m = 0; m <= D; ++m)
        if (lhs[static_cast<std::size_t>(m)] != rhs[static_cast<std::size_t>(m)]) return false;
    return true;
}

}  // namespace cluster
