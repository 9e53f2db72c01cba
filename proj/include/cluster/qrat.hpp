#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "cluster/qpoly.hpp"

namespace cluster {

/**
 * Rational function in q over the integers. Invariants: denominator
 * nonzero with positive lowest coefficient, so ascending-order display
 * leads with a positive term; numerator and denominator share no
 * common factor, integer content included.
 */
class QRat {
public:
    QRat() : num_(), den_(1) {}
    QRat(long long v) : num_(v), den_(1) {}
    explicit QRat(ZPoly n) : num_(std::move(n)), den_(1) {}
    QRat(ZPoly n, ZPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::domain_error("QRat: zero denominator");
        reduce();
    }

    /// q^e for any integer e; negative exponents go to the denominator.
    static QRat q_power(int e) {
        if (e >= 0) return QRat(ZPoly::q_power(e));
        return QRat(ZPoly(1), ZPoly::q_power(-e));
    }

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    QRat operator-() const {
        QRat r(*this);
        r.num_ = -r.num_;
        return r;
    }

    friend QRat operator+(const QRat& a, const QRat& b) {
        if (a.den_ == b.den_) return QRat(a.num_ + b.num_, a.den_);
        return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRat operator-(const QRat& a, const QRat& b) {
        if (a.den_ == b.den_) return QRat(a.num_ - b.num_, a.den_);
        return QRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRat operator*(const QRat& a, const QRat& b) {
        // Cross-reduction keeps the gcd calls on small operands.
        ZPoly g1 = ZPoly::gcd(a.num_, b.den_);
        ZPoly g2 = ZPoly::gcd(b.num_, a.den_);
        QRat r;
        r.num_ = ZPoly::divexact(a.num_, g1) * ZPoly::divexact(b.num_, g2);
        r.den_ = ZPoly::divexact(a.den_, g2) * ZPoly::divexact(b.den_, g1);
        r.fix_sign();
        return r;
    }
    friend QRat operator/(const QRat& a, const QRat& b) { return a * b.inv(); }

    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    QRat& operator/=(const QRat& o) { return *this = *this / o; }

    QRat inv() const {
        if (num_.is_zero()) throw std::domain_error("QRat: inverse of zero");
        QRat r;
        r.num_ = den_;
        r.den_ = num_;
        r.fix_sign();
        return r;
    }

    /// Multiplies by q^e in place. Only the power of q dividing the
    /// numerator or denominator moves, so no polynomial gcd is needed.
    QRat& shift(int e) {
        if (e == 0 || num_.is_zero()) return *this;
        int tn = num_.low_degree();
        int td = den_.low_degree();
        int net = tn - td + e;
        num_ = num_.unshifted(tn);
        den_ = den_.unshifted(td);
        if (net >= 0)
            num_ = num_.shifted(net);
        else
            den_ = den_.shifted(-net);
        return *this;
    }

    friend bool operator==(const QRat& a, const QRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

    Rat eval(const Rat& q) const {
        Rat d = den_.eval(q);
        if (d.is_zero()) throw std::domain_error("QRat: pole at evaluation point");
        return num_.eval(q) / d;
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        std::string n = num_.str();
        if (n.find(" + ") != std::string::npos || n.find(" - ") != std::string::npos)
            n = "(" + n + ")";
        return n + "/(" + den_.str() + ")";
    }

private:
    ZPoly num_, den_;

    void fix_sign() {
        if (num_.is_zero()) {
            den_ = ZPoly(1);
            return;
        }
        if (den_.coeff(den_.low_degree()) < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = ZPoly(1);
            return;
        }
        ZPoly g = ZPoly::gcd(num_, den_);
        num_ = ZPoly::divexact(num_, g);
        den_ = ZPoly::divexact(den_, g);
        fix_sign();
    }
};

}  // namespace cluster
