#pragma once

// Counts elements of F_q outside every proper subfield, by Moebius inversion
// of sum_{d|m} g(d) = p^m, and evaluates the probability lower bound
// 1 - log_r(n) / q^(1 - 1/r) with r the smallest prime divisor of n.

#include <cstdint>
#include <map>
#include <vector>

#include "asorder/ff.hpp"

namespace asorder {

int mobius(std::uint64_t m);

std::vector<std::uint64_t> sorted_divisors(std::uint64_t n);
std::uint64_t smallest_prime_divisor(std::uint64_t n);  // n >= 2

/// g(n) = sum_{d|n} p^d mu(n/d): the number of elements of F_{p^n} lying in
/// no proper subfield. Exact.
BigInt count_outside(std::uint64_t p, unsigned n);

/// Membership in the union of proper subfields. Checking the maximal proper
/// subfields F_{p^(n/r)} over prime divisors r of n suffices.
bool in_proper_subfield(const FqElem& b);

struct ProbabilityBound {
    long double value = 1.0L;
    std::uint64_t r = 0;      // smallest prime divisor of n; 0 when n = 1
    bool has_exact = false;   // exact rational available iff log_r(n) is integral
    BigInt exact_num, exact_den;
};

/// Lower bound on the probability that a uniform element of F_q lies outside
/// every proper subfield. Exactly 1 for n = 1.
ProbabilityBound probability_lower_bound(std::uint64_t p, unsigned n);

struct SubfieldCensus {
    std::uint64_t p = 0;
    unsigned n = 0;
    std::vector<std::uint64_t> divisors;
    std::map<std::uint64_t, BigInt> outside_counts;  // d -> g(d)
    BigInt union_upper;                               // sum of p^(n/r) over prime r | n
    ProbabilityBound prob_lower;
    bool has_exact_probability = false;               // filled when q <= 2^20
    BigInt prob_num, prob_den;                        // g(n) / p^n, reduced
    bool boundary_equality = false;                   // bound meets the exact probability
};

SubfieldCensus census(std::uint64_t p, unsigned n);

}  // namespace asorder
