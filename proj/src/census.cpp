#include "asorder/census.hpp"

#include <algorithm>
#include <cmath>

namespace asorder {

int mobius(std::uint64_t m) {
    if (m == 0) throw Error("mobius is defined on positive integers");
    int sign = 1;
    for (auto [prime, exp] : factor_small(m)) {
        (void)prime;
        if (exp > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::vector<std::uint64_t> sorted_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t smallest_prime_divisor(std::uint64_t n) {
    if (n < 2) throw Error("no prime divisor below 2");
    return factor_small(n).front().first;
}

BigInt count_outside(std::uint64_t p, unsigned n) {
    if (!is_prime_u64(p)) throw NotPrime(p);
    BigInt acc = 0;
    for (std::uint64_t d : sorted_divisors(n)) {
        acc += BigInt(mobius(n / d)) * pow_uint(p, static_cast<unsigned>(d));
    }
    return acc;
}

bool in_proper_subfield(const FqElem& b) {
    const unsigned n = b.field()->n;
    if (n == 1) return false;
    for (auto [r, e] : factor_small(n)) {
        (void)e;
        if (frobenius(b, n / static_cast<unsigned>(r)) == b) return true;
    }
    return false;
}

ProbabilityBound probability_lower_bound(std::uint64_t p, unsigned n) {
    ProbabilityBound out;
    if (n == 1) {  // no proper subfields
        out.has_exact = true;
        out.exact_num = 1;
        out.exact_den = 1;
        out.value = 1.0L;
        return out;
    }
    out.r = smallest_prime_divisor(n);
    // q^(1 - 1/r) = p^(n - n/r), an exact integer since r | n
    const unsigned den_exp = n - n / static_cast<unsigned>(out.r);
    BigInt den = pow_uint(p, den_exp);
    long double logr_n = std::log(static_cast<long double>(n)) /
                         std::log(static_cast<long double>(out.r));
    out.value = 1.0L - logr_n / den.convert_to<long double>();

    // exact rational when n is a power of r
    std::uint64_t power = out.r;
    std::uint64_t k = 1;
    while (power < n) {
        power *= out.r;
        ++k;
    }
    if (power == n) {
        out.has_exact = true;
        out.exact_num = den - k;
        out.exact_den = den;
    }
    return out;
}

SubfieldCensus census(std::uint64_t p, unsigned n) {
    if (!is_prime_u64(p)) throw NotPrime(p);
    if (n < 1) throw Error("extension degree must be at least 1");
    SubfieldCensus out;
    out.p = p;
    out.n = n;
    out.divisors = sorted_divisors(n);
    for (std::uint64_t d : out.divisors)
        out.outside_counts.emplace(d, count_outside(p, static_cast<unsigned>(d)));

    out.union_upper = 0;
    if (n >= 2)
        for (auto [r, e] : factor_small(n)) {
            (void)e;
            out.union_upper += pow_uint(p, n / static_cast<unsigned>(r));
        }

    out.prob_lower = probability_lower_bound(p, n);

    BigInt q = pow_uint(p, n);
    if (q <= (BigInt(1) << 20)) {
        out.has_exact_probability = true;
        BigInt num = out.outside_counts.at(n);
        BigInt den = q;
        BigInt g = boost::multiprecision::gcd(num, den);
        out.prob_num = num / g;
        out.prob_den = den / g;
        if (out.prob_lower.has_exact)
            out.boundary_equality =
                out.prob_lower.exact_num * out.prob_den == out.prob_num * out.prob_lower.exact_den;
    }
    return out;
}

}  // namespace asorder
