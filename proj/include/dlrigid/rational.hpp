#pragma once

#include <string>
#include <utility>

#include "dlrigid/bigint.hpp"
#include "dlrigid/errors.hpp"

namespace dlrigid {

/// Exact rational number, always normalized: gcd(num, den) = 1, den > 0.
class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(long long v) : num_(v), den_(1) {} // NOLINT(google-explicit-constructor)
    BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        require(!den_.is_zero(), ErrorCode::Internal, "rational with zero denominator");
        normalize();
    }

    static BigRational from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            return BigRational(BigInt::from_decimal(s.substr(0, slash)),
                               BigInt::from_decimal(s.substr(slash + 1)));
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            BigInt den(1);
            for (std::size_t i = dot + 1; i < s.size(); ++i) den *= BigInt(10);
            return BigRational(BigInt::from_decimal(digits), den);
        }
        return BigRational(BigInt::from_decimal(s), BigInt(1));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

    friend BigRational operator+(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRational operator-(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRational operator*(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BigRational operator/(const BigRational& a, const BigRational& b) {
        require(!b.is_zero(), ErrorCode::Internal, "rational division by zero");
        return BigRational(a.num_ * b.den_, a.den_ * b.num_);
    }

    BigRational operator-() const {
        BigRational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    BigRational& operator+=(const BigRational& o) { return *this = *this + o; }
    BigRational& operator-=(const BigRational& o) { return *this = *this - o; }
    BigRational& operator*=(const BigRational& o) { return *this = *this * o; }
    BigRational& operator/=(const BigRational& o) { return *this = *this / o; }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return !(b < a); }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return !(a < b); }

    std::string to_string() const {
        if (is_integer()) return num_.to_decimal();
        return num_.to_decimal() + "/" + den_.to_decimal();
    }

    double to_double() const { return num_.to_double() / den_.to_double(); }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (g != BigInt(1)) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }

    // q = a / g where g divides a exactly; recovered by binary long division
    // on magnitudes (BigInt deliberately has no general division).
    static BigInt divide_exact(const BigInt& a, const BigInt& g) {
        BigInt n = a.abs();
        BigInt d = g.abs();
        if (d == BigInt(1)) return a;
        BigInt q(0), rem(0);
        for (std::size_t i = n.bit_length(); i-- > 0;) {
            rem = rem.shifted_left(1);
            if (n.bit(i)) rem += BigInt(1);
            q = q.shifted_left(1);
            if (rem >= d) {
                rem -= d;
                q += BigInt(1);
            }
        }
        return a.is_negative() ? -q : q;
    }

    BigInt num_;
    BigInt den_;
};

/// Field adapter for the exact-arithmetic elimination paths.
struct RationalField {
    bool is_zero(const BigRational& a) const { return a.is_zero(); }
    BigRational one() const { return BigRational(1); }
    BigRational mul(const BigRational& a, const BigRational& b) const { return a * b; }
    BigRational sub(const BigRational& a, const BigRational& b) const { return a - b; }
    BigRational inv(const BigRational& a) const { return BigRational(1) / a; }
};

} // namespace dlrigid
