#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "dlrigid/errors.hpp"

namespace dlrigid {

/// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
/// Supports exactly the operations the exact-rational layer needs:
/// add/sub/mul, comparison, binary gcd, decimal I/O. No general division.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) { // NOLINT(google-explicit-constructor)
        bool neg = v < 0;
        unsigned long long m = neg ? 0ULL - static_cast<unsigned long long>(v)
                                   : static_cast<unsigned long long>(v);
        while (m) {
            limbs_.push_back(static_cast<std::uint32_t>(m & 0xFFFFFFFFULL));
            m >>= 32;
        }
        negative_ = neg && !limbs_.empty();
    }

    static BigInt from_u64(std::uint64_t m) {
        BigInt r;
        while (m) {
            r.limbs_.push_back(static_cast<std::uint32_t>(m & 0xFFFFFFFFULL));
            m >>= 32;
        }
        return r;
    }

    static BigInt from_decimal(const std::string& s) {
        require(!s.empty(), ErrorCode::ParseError, "empty integer literal");
        std::size_t i = 0;
        bool neg = false;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            i = 1;
        }
        require(i < s.size(), ErrorCode::ParseError, "sign without digits: " + s);
        BigInt r;
        for (; i < s.size(); ++i) {
            require(s[i] >= '0' && s[i] <= '9', ErrorCode::ParseError,
                    "bad digit in integer literal: " + s);
            r.mul_small_add(10, static_cast<std::uint32_t>(s[i] - '0'));
        }
        r.negative_ = neg && !r.is_zero();
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1); }

    bool bit(std::size_t i) const {
        std::size_t limb = i / 32;
        if (limb >= limbs_.size()) return false;
        return (limbs_[limb] >> (i % 32)) & 1;
    }

    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    std::size_t bit_length() const {
        if (limbs_.empty()) return 0;
        std::uint32_t top = limbs_.back();
        std::size_t bits = (limbs_.size() - 1) * 32;
        while (top) {
            ++bits;
            top >>= 1;
        }
        return bits;
    }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.negative_ = !r.negative_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        r.negative_ = false;
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.negative_ != b.negative_) return a.negative_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.negative_ ? c > 0 : c < 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.negative_ == b.negative_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.negative_ = a.negative_ && !r.limbs_.empty();
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) return r;
            if (c > 0) {
                r.limbs_ = sub_mag(a.limbs_, b.limbs_);
                r.negative_ = a.negative_;
            } else {
                r.limbs_ = sub_mag(b.limbs_, a.limbs_);
                r.negative_ = b.negative_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.is_zero() || b.is_zero()) return r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                                    r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xFFFFFFFFULL);
                carry = cur >> 32;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry) {
                std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xFFFFFFFFULL);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.negative_ = (a.negative_ != b.negative_) && !r.is_zero();
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    BigInt shifted_right(std::size_t bits) const {
        BigInt r = *this;
        std::size_t whole = bits / 32, rest = bits % 32;
        if (whole >= r.limbs_.size()) return BigInt();
        r.limbs_.erase(r.limbs_.begin(), r.limbs_.begin() + static_cast<long>(whole));
        if (rest) {
            for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
                std::uint32_t hi =
                    i + 1 < r.limbs_.size() ? r.limbs_[i + 1] : 0;
                r.limbs_[i] = (r.limbs_[i] >> rest) |
                              (hi << (32 - rest));
            }
        }
        r.trim();
        r.negative_ = r.negative_ && !r.is_zero();
        return r;
    }

    BigInt shifted_left(std::size_t bits) const {
        if (is_zero()) return BigInt();
        BigInt r = *this;
        std::size_t whole = bits / 32, rest = bits % 32;
        if (rest) {
            std::uint32_t carry = 0;
            for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
                std::uint32_t nw = (r.limbs_[i] << rest) | carry;
                carry = r.limbs_[i] >> (32 - rest);
                r.limbs_[i] = nw;
            }
            if (carry) r.limbs_.push_back(carry);
        }
        r.limbs_.insert(r.limbs_.begin(), whole, 0);
        return r;
    }

    std::size_t trailing_zero_bits() const {
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            if (limbs_[i]) {
                std::size_t b = 0;
                std::uint32_t v = limbs_[i];
                while (!(v & 1)) {
                    v >>= 1;
                    ++b;
                }
                return i * 32 + b;
            }
        }
        return 0;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.negative_ = false;
        b.negative_ = false;
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        std::size_t sa = a.trailing_zero_bits(), sb = b.trailing_zero_bits();
        std::size_t shift = std::min(sa, sb);
        a = a.shifted_right(sa);
        b = b.shifted_right(sb);
        while (true) {
            if (cmp_mag(a.limbs_, b.limbs_) > 0) std::swap(a, b);
            b = b - a; // both odd, difference even (or zero)
            if (b.is_zero()) break;
            b = b.shifted_right(b.trailing_zero_bits());
        }
        return a.shifted_left(shift);
    }

    std::string to_decimal() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> work = limbs_;
        std::string digits;
        while (!work.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            for (int k = 0; k < 9; ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (negative_) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

    double to_double() const {
        double v = 0.0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
        return negative_ ? -v : v;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) negative_ = false;
    }

    void mul_small_add(std::uint32_t mul, std::uint32_t add) {
        std::uint64_t carry = add;
        for (auto& limb : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * mul + carry;
            limb = static_cast<std::uint32_t>(cur & 0xFFFFFFFFULL);
            carry = cur >> 32;
        }
        while (carry) {
            limbs_.push_back(static_cast<std::uint32_t>(carry & 0xFFFFFFFFULL));
            carry >>= 32;
        }
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r[i] = static_cast<std::uint32_t>(cur & 0xFFFFFFFFULL);
            carry = cur >> 32;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += 1LL << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    std::vector<std::uint32_t> limbs_; // little-endian, no leading zeros
    bool negative_ = false;
};

} // namespace dlrigid
