#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace asorder {

using BigInt = boost::multiprecision::cpp_int;

// Residue arithmetic modulo a prime p < 2^63.

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

inline std::uint64_t neg_mod(std::uint64_t a, std::uint64_t p) {
    return a == 0 ? 0 : p - a;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p);

/// Inverse of a nonzero residue modulo a prime.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// Deterministic primality for the full 64-bit range (trial division for
/// small inputs, fixed-base Miller-Rabin above).
bool is_prime_u64(std::uint64_t m);

// Exact big-integer helpers.

BigInt pow_uint(std::uint64_t base, unsigned exp);
BigInt binomial(std::uint64_t top, std::uint64_t bottom);  // 0 when bottom > top

/// Natural log of m >= 1, accurate to a few ulps of long double.
long double log_bigint(const BigInt& m);

/// Miller-Rabin with the first twelve prime bases; deterministic below
/// 3.3 * 10^24, strong probable-prime test beyond.
bool is_probable_prime(const BigInt& m);

/// Trial-division factorization; meant for small inputs such as extension
/// degrees.
std::vector<std::pair<std::uint64_t, unsigned>> factor_small(std::uint64_t m);

}  // namespace asorder
