#pragma once

#include <cstdint>
#include <vector>

namespace dlrigid {

// Two fixed 62-bit primes used by the randomized rank oracle.
// 2^62 - 57 and 2^62 - 87; primality pinned down by a unit test.
inline constexpr std::uint64_t kPrimeA = 4611686018427387847ULL;
inline constexpr std::uint64_t kPrimeB = 4611686018427387817ULL;

inline std::vector<std::uint64_t> default_primes() { return {kPrimeA, kPrimeB}; }

/// Arithmetic context for Z/pZ with p < 2^63. Elements are raw uint64_t in [0, p).
class FpField {
public:
    explicit FpField(std::uint64_t p) : p_(p) {}

    std::uint64_t modulus() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }

    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(a) * b % p_);
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // p prime, a != 0.
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }

    bool is_zero(std::uint64_t a) const { return a == 0; }
    std::uint64_t one() const { return 1; }

private:
    std::uint64_t p_;
};

} // namespace dlrigid
