#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cluster/rational.hpp"

namespace cluster {

/**
 * Dense integer-coefficient polynomial in q, exponents ascending.
 * Invariant: no trailing zero coefficients; the zero polynomial has an
 * empty coefficient vector and degree -1.
 */
class ZPoly {
public:
    ZPoly() = default;
    ZPoly(long long v) {
        if (v != 0) c_.push_back(BigInt(v));
    }
    explicit ZPoly(BigInt v) {
        if (v != 0) c_.push_back(std::move(v));
    }
    explicit ZPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static ZPoly q_power(int e) {
        if (e < 0) throw std::invalid_argument("ZPoly::q_power: negative exponent");
        std::vector<BigInt> c(static_cast<std::size_t>(e) + 1, BigInt(0));
        c.back() = 1;
        return ZPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const BigInt& coeff(int i) const {
        static const BigInt zero(0);
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(i)];
    }
    const BigInt& lc() const {
        static const BigInt zero(0);
        return c_.empty() ? zero : c_.back();
    }

    /// Multiplies by q^e.
    ZPoly shifted(int e) const {
        if (is_zero()) return ZPoly();
        if (e < 0) throw std::invalid_argument("ZPoly::shifted: negative exponent");
        std::vector<BigInt> c(static_cast<std::size_t>(e), BigInt(0));
        c.insert(c.end(), c_.begin(), c_.end());
        return ZPoly(std::move(c));
    }

    /// Exponent of the lowest nonzero term; -1 for the zero polynomial.
    int low_degree() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return static_cast<int>(i);
        return -1;
    }

    /// Divides by q^e; requires e <= low_degree().
    ZPoly unshifted(int e) const {
        if (e == 0) return *this;
        if (e < 0 || low_degree() < e)
            throw std::domain_error("ZPoly::unshifted: inexact power-of-q division");
        return ZPoly(std::vector<BigInt>(c_.begin() + e, c_.end()));
    }

    ZPoly operator-() const {
        ZPoly r(*this);
        for (auto& v : r.c_) v = -v;
        return r;
    }

    ZPoly& operator+=(const ZPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), BigInt(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    ZPoly& operator-=(const ZPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), BigInt(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }

    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero() || b.is_zero()) return ZPoly();
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return ZPoly(std::move(c));
    }
    ZPoly& operator*=(const ZPoly& o) { return *this = *this * o; }

    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

    /// Gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    BigInt content() const {
        BigInt g(0);
        for (const auto& v : c_) {
            g = big_gcd(g, v);
            if (g == 1) break;
        }
        return g;
    }

    /// Divides every coefficient by v. Division must be exact.
    ZPoly divided_by_const(const BigInt& v) const {
        if (v == 0) throw std::domain_error("ZPoly: division by zero constant");
        std::vector<BigInt> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            BigInt quo = c_[i] / v;
            if (quo * v != c_[i]) throw std::domain_error("ZPoly: inexact constant division");
            c[i] = std::move(quo);
        }
        return ZPoly(std::move(c));
    }

    /// Exact polynomial division; sets *quot and returns true only when
    /// b divides a over the integers.
    static bool try_divide(const ZPoly& a, const ZPoly& b, ZPoly* quot) {
        if (b.is_zero()) throw std::domain_error("ZPoly: division by zero");
        if (a.is_zero()) {
            if (quot) *quot = ZPoly();
            return true;
        }
        if (a.degree() < b.degree()) return false;
        std::vector<BigInt> rem = a.c_;
        std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, BigInt(0));
        for (int i = a.degree(); i >= b.degree(); --i) {
            BigInt& top = rem[static_cast<std::size_t>(i)];
            if (top == 0) continue;
            BigInt f = top / b.lc();
            if (f * b.lc() != top) return false;
            int off = i - b.degree();
            q[static_cast<std::size_t>(off)] = f;
            for (int j = 0; j <= b.degree(); ++j)
                rem[static_cast<std::size_t>(off + j)] -= f * b.c_[static_cast<std::size_t>(j)];
        }
        for (const auto& v : rem)
            if (v != 0) return false;
        if (quot) *quot = ZPoly(std::move(q));
        return true;
    }

    static ZPoly divexact(const ZPoly& a, const ZPoly& b) {
        ZPoly q;
        if (!try_divide(a, b, &q)) throw std::domain_error("ZPoly: inexact division");
        return q;
    }

    /// Gcd with positive leading coefficient, content included.
    static ZPoly gcd(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero()) return positive_lc(b);
        if (b.is_zero()) return positive_lc(a);
        BigInt ca = a.content();
        BigInt cb = b.content();
        BigInt g0 = big_gcd(ca, cb);
        ZPoly pa = a.divided_by_const(ca);
        ZPoly pb = b.divided_by_const(cb);
        if (modular_coprime(pa, pb)) return ZPoly(std::move(g0));
        if (pa.degree() < pb.degree()) std::swap(pa, pb);
        while (!pb.is_zero()) {
            ZPoly r = pseudo_rem(pa, pb);
            pa = std::move(pb);
            BigInt cr = r.content();
            pb = r.is_zero() ? ZPoly() : r.divided_by_const(cr);
        }
        return positive_lc(pa) * ZPoly(std::move(g0));
    }

    Rat eval(const Rat& q) const {
        Rat r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * q + Rat(c_[i]);
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const BigInt& v = c_[i];
            if (v == 0) continue;
            BigInt a = v < 0 ? BigInt(-v) : v;
            if (first) {
                if (v < 0) os << "-";
                first = false;
            } else {
                os << (v < 0 ? " - " : " + ");
            }
            if (a != 1 || i == 0) os << a.str();
            if (i > 0) {
                if (a != 1) os << "*";
                os << "q";
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    std::vector<BigInt> c_;

    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    static ZPoly positive_lc(ZPoly p) {
        if (!p.is_zero() && p.lc() < 0) return -p;
        return p;
    }

    // lc(b)^t * a reduced mod b for the primitive remainder sequence.
    static ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
        while (!a.is_zero() && a.degree() >= b.degree()) {
            BigInt top = a.lc();
            int off = a.degree() - b.degree();
            std::vector<BigInt> c(a.c_.begin(), a.c_.end() - 1);
            for (auto& v : c) v *= b.lc();
            for (int j = 0; j < b.degree(); ++j)
                c[static_cast<std::size_t>(off + j)] -= top * b.c_[static_cast<std::size_t>(j)];
            a = ZPoly(std::move(c));
        }
        return a;
    }

    // One-prime coprimality certificate: a constant gcd mod p with p not
    // dividing either leading coefficient forces a constant true gcd.
    static bool modular_coprime(const ZPoly& a, const ZPoly& b) {
        static const std::int64_t primes[] = {2147483629, 2147483587, 2147483563};
        for (std::int64_t p : primes) {
            if (a.lc() % p == 0 || b.lc() % p == 0) continue;
            std::vector<std::int64_t> ma = mod_reduce(a, p);
            std::vector<std::int64_t> mb = mod_reduce(b, p);
            return mod_gcd_degree(std::move(ma), std::move(mb), p) == 0;
        }
        return false;
    }

    static std::vector<std::int64_t> mod_reduce(const ZPoly& p, std::int64_t m) {
        std::vector<std::int64_t> r(p.c_.size());
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            std::int64_t v = static_cast<std::int64_t>(p.c_[i] % m);
            r[i] = v < 0 ? v + m : v;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::int64_t mod_inv(std::int64_t a, std::int64_t m) {
        std::int64_t t = 0, nt = 1, r = m, nr = a;
        while (nr != 0) {
            std::int64_t qq = r / nr;
            t -= qq * nt;
            std::swap(t, nt);
            r -= qq * nr;
            std::swap(r, nr);
        }
        return t < 0 ? t + m : t;
    }

    static int mod_gcd_degree(std::vector<std::int64_t> a, std::vector<std::int64_t> b,
                              std::int64_t m) {
        while (!b.empty()) {
            std::int64_t inv = mod_inv(b.back(), m);
            while (a.size() >= b.size()) {
                std::int64_t f = static_cast<std::int64_t>(
                    static_cast<__int128>(a.back()) * inv % m);
                std::size_t off = a.size() - b.size();
                for (std::size_t j = 0; j < b.size(); ++j) {
                    __int128 v = static_cast<__int128>(a[off + j]) -
                                 static_cast<__int128>(f) * b[j] % m;
                    std::int64_t w = static_cast<std::int64_t>(v % m);
                    a[off + j] = w < 0 ? w + m : w;
                }
                while (!a.empty() && a.back() == 0) a.pop_back();
                if (a.empty()) break;
            }
            std::swap(a, b);
        }
        return static_cast<int>(a.size()) - 1;
    }
};

}  // namespace cluster
