#include "asorder/integer_math.hpp"

#include <array>
#include <cmath>

#include "asorder/errors.hpp"

namespace asorder {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) acc = mul_mod(acc, base, p);
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    return acc;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    return pow_mod(a % p, p - 2, p);
}

namespace {

bool mr_witness_u64(std::uint64_t m, std::uint64_t base, std::uint64_t d, int r) {
    base %= m;
    if (base == 0) return false;
    std::uint64_t x = pow_mod(base, d, m);
    if (x == 1 || x == m - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, m);
        if (x == m - 1) return false;
    }
    return true;  // composite witness
}

constexpr std::array<std::uint64_t, 12> kMrBases = {2,  3,  5,  7,  11, 13,
                                                    17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime_u64(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (m == d) return true;
        if (m % d == 0) return false;
    }
    if (m < 29 * 29) return true;
    std::uint64_t d = m - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // the first twelve prime bases decide primality for all 64-bit inputs
    for (std::uint64_t base : kMrBases)
        if (mr_witness_u64(m, base, d, r)) return false;
    return true;
}

BigInt pow_uint(std::uint64_t base, unsigned exp) {
    return boost::multiprecision::pow(BigInt(base), exp);
}

BigInt binomial(std::uint64_t top, std::uint64_t bottom) {
    if (bottom > top) return 0;
    bottom = std::min(bottom, top - bottom);
    BigInt acc = 1;
    for (std::uint64_t i = 1; i <= bottom; ++i) {
        acc *= top - bottom + i;
        acc /= i;  // exact: acc holds C(top-bottom+i, i) * i! / i!
    }
    return acc;
}

long double log_bigint(const BigInt& m) {
    if (m <= 0) throw Error("log of a non-positive integer");
    unsigned bits = boost::multiprecision::msb(m) + 1;
    if (bits <= 63) return std::log(static_cast<long double>(m.convert_to<std::uint64_t>()));
    unsigned shift = bits - 63;
    auto top = BigInt(m >> shift).convert_to<std::uint64_t>();
    return std::log(static_cast<long double>(top)) +
           static_cast<long double>(shift) * 0.69314718055994530942L;
}

bool is_probable_prime(const BigInt& m) {
    if (m < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (m == d) return true;
        if (m % d == 0) return false;
    }
    BigInt d = m - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t base : kMrBases) {
        BigInt x = boost::multiprecision::powm(BigInt(base), d, m);
        if (x == 1 || x == m - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = (x * x) % m;
            if (x == m - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_small(std::uint64_t m) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
        if (m % d) continue;
        unsigned e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

}  // namespace asorder
