#pragma once

// Independent brute-force verification: enumeration of the budget vector
// set, the product map Lambda with its injectivity and distinctness checks,
// integer factorization, exact multiplicative orders, and the end-to-end
// instance pipeline. Everything here recomputes from definitions so it can
// cross-check the counting formulas and closed forms.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asorder/artin_schreier.hpp"
#include "asorder/bounds.hpp"
#include "asorder/census.hpp"

namespace asorder {

struct ExponentVector {
    std::vector<int> r;
    unsigned pos_budget = 0, neg_budget = 0;

    bool within_budgets() const;
};

/// Visits every vector of the given length whose positive entries sum to at
/// most pos and negative entries to at most neg (in absolute value), in
/// lexicographic order. Refuses enumerations larger than cap with TooLarge,
/// which carries the exact count.
void enumerate_budget_vectors(unsigned len, unsigned pos, unsigned neg,
                              const std::function<void(const ExponentVector&)>& visit,
                              const BigInt& cap = BigInt(10'000'000));

/// Lambda(r) = prod_j g^(r_j p^j); negative entries go through the inverse.
KElem lambda_eval(const ExponentVector& vec, const KElem& g);

/// The same product in linear-factor form, prod_j (theta + j + b^(p^j))^(r_j);
/// agrees with lambda_eval(vec, theta + b) when a = 1.
KElem lambda_eval_linear(const ExponentVector& vec, const KContextPtr& ctx, const FqElem& b);

struct InjectivityResult {
    bool injective = false;
    bool exploratory = false;  // b lies in a proper subfield, no guarantee applies
    std::size_t image_count = 0;
    std::optional<std::pair<ExponentVector, ExponentVector>> collision;
};

/// Tests injectivity of Lambda on the budget set for theta + b. Requires
/// a = 1 and s + t <= p - 1; when b lies in a proper subfield the check
/// still runs, flagged exploratory, and may legitimately find collisions.
InjectivityResult injectivity_check(const KContextPtr& ctx, const FqElem& b, unsigned s,
                                    unsigned t, const BigInt& cap = BigInt(10'000'000));

struct DistinctnessResult {
    bool distinct = false;
    std::optional<std::pair<unsigned, unsigned>> witness;  // colliding pair (i, j)
};

/// Checks that the np values i + b^(p^i) are pairwise distinct (a = 1).
DistinctnessResult distinctness_check(const KContextPtr& ctx, const FqElem& b);

struct FactorizeOptions {
    BigInt guard = BigInt(1) << 63;
    bool allow_large = false;          // lift the guard, keep the rho budget
    std::uint64_t rho_budget = 20'000'000;  // total rho iterations
};

/// Complete factorization by trial division to 10^6 and deterministic-seed
/// Pollard rho; the product of the factors is checked against the input.
std::vector<std::pair<BigInt, unsigned>> factorize(BigInt m, const FactorizeOptions& opts = {});

struct OrderResult {
    BigInt group_order;
    std::vector<std::pair<BigInt, unsigned>> factorization;  // of group_order
    BigInt element_order;
    bool certified = false;  // u^ord = 1 and u^(ord/l) != 1 for every prime l | ord
};

OrderResult multiplicative_order(const KElem& u, const FactorizeOptions& opts = {});

struct Guards {
    unsigned order_guard_bits = 63;    // refuse orders when p^(np) > 2^bits
    BigInt enum_cap = 10'000'000;
};

struct VerificationRecord {
    std::uint64_t p = 0;
    unsigned n = 0;
    std::uint64_t a = 0;
    std::vector<std::uint64_t> b;

    bool irreducible = false;
    std::string irreducibility_method;
    bool b_outside_proper = false;
    std::optional<BoundReport> bounds;
    std::optional<OrderResult> order;
    bool order_checked = false;   // false when the guard or an error stopped it
    bool order_meets_exact = false;

    // per-closed-form comparisons, keyed by report field name
    std::map<std::string, bool> closed_le_exact;
    std::map<std::string, bool> closed_le_order;

    std::vector<std::string> flags;
    std::vector<std::string> errors;  // recorded, not thrown, so batches finish
};

/// End-to-end pipeline for one instance: build the field, test
/// irreducibility, locate b relative to the proper subfields, assemble the
/// bound report, compute the true order within guards, and compare. Closed
/// forms are measured against the exact data, never assumed.
VerificationRecord verify_instance(std::uint64_t p, unsigned n, std::uint64_t a,
                                   const std::vector<std::uint64_t>& b_coeffs,
                                   const Guards& guards = {});

}  // namespace asorder
