/**
 * @file rational.hpp
 * @brief Arbitrary-precision rational numbers on top of boost cpp_int.
 *
 * Stores numerator and denominator as BigInt. Denominator is always > 0
 * and gcd(num, den) == 1 after every operation.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace cluster {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(BigInt a, BigInt b) {
    return boost::multiprecision::gcd(a, b);
}

class Rat {
private:
    BigInt num_;
    BigInt den_;  // always > 0

    void canonicalize() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = big_gcd(boost::multiprecision::abs(num_), den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

public:
    // ---- constructors ----
    Rat() : num_(0), den_(1) {}
    Rat(long long v) : num_(v), den_(1) {}
    Rat(const BigInt& v) : num_(v), den_(1) {}
    Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        canonicalize();
    }

    // ---- accessors ----
    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    int sgn() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    // ---- arithmetic ----
    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    Rat inv() const {
        if (num_ == 0) throw std::domain_error("Rat: inverse of zero");
        return Rat(den_, num_);
    }

    /// Integer power; negative exponents invert.
    Rat pow(long long e) const {
        if (e < 0) return inv().pow(-e);
        Rat r(1), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // ---- comparison (canonical form makes == componentwise) ----
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }

    // ---- conversions ----
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    static Rat from_strings(const std::string& num, const std::string& den) {
        return Rat(BigInt(num), BigInt(den));
    }

    /// Double approximation that stays accurate for huge num/den of similar
    /// size (componentwise conversion would overflow to inf/inf). Splits
    /// both parts into a 64-bit mantissa and a power of two.
    double to_double() const {
        if (num_ == 0) return 0.0;
        BigInt n = boost::multiprecision::abs(num_);
        const BigInt& d = den_;
        long long bn = static_cast<long long>(boost::multiprecision::msb(n));
        long long bd = static_cast<long long>(boost::multiprecision::msb(d));
        long long sn = bn > 62 ? bn - 62 : 0;
        long long sd = bd > 62 ? bd - 62 : 0;
        auto mn = BigInt(n >> sn).convert_to<std::uint64_t>();
        auto md = BigInt(d >> sd).convert_to<std::uint64_t>();
        long double r = static_cast<long double>(mn) / static_cast<long double>(md);
        long long e = std::clamp<long long>(sn - sd, -(1 << 20), 1 << 20);
        r = ldexpl(r, static_cast<int>(e));
        return static_cast<double>(sgn() > 0 ? r : -r);
    }
};

}  // namespace cluster
