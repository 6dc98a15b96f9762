#pragma once

// Exact and closed-form lower bounds on the order of theta + b: the budget
// vector count that certifies |<theta+b>| >= |I_{s,t}|, its binomial-product
// relaxation, Stirling-type two-sided brackets, and the closed forms for the
// extension (n >= 2) and prime (n = 1) cases. Integer quantities are exact;
// reals accumulate in long double log space (64-bit mantissa, relative error
// well under 1e-12 at the sizes handled here).

#include <cstdint>
#include <string>
#include <vector>

#include "asorder/integer_math.hpp"

namespace asorder {

/// Number of integer vectors of given length whose positive entries sum to
/// at most pos and whose negative entries sum, in absolute value, to at most
/// neg: sum_{i<=pos} sum_{j<=neg} C(len,i) C(len-i,j) C(pos,i) C(neg,j).
BigInt count_budget_vectors(unsigned len, unsigned pos, unsigned neg);

/// The binomial product C(len+neg-pos, neg) * C(len+pos, pos); a strict
/// lower bound on count_budget_vectors when pos, neg >= 1. Requires
/// pos <= len (InvalidBudget otherwise).
BigInt binom_product_bound(unsigned len, unsigned pos, unsigned neg);

struct BudgetMax {
    BigInt value;
    unsigned s = 0, t = 0;
};

/// Maximum of count_budget_vectors(np, s, t) over s + t = p - 1, ties broken
/// toward smaller s. Monotonicity in each budget puts the maximum on that
/// boundary.
BudgetMax best_exact_bound(std::uint64_t p, unsigned n);

/// Same sweep for the binomial product.
BudgetMax best_binom_bound(std::uint64_t p, unsigned n);

struct Bracket {
    long double lower = 0, upper = 0;
};

/// Two-sided Stirling-type bounds on C(rs, s) for r > 1, s > 0 (Sasvari):
///   c_r d_r^s s^(-1/2) Theta(r,s)  <  C(rs,s)  <  c_r d_r^s s^(-1/2).
Bracket sasvari_bracket(long double r, long double s);

/// The Theta(r,s) = exp(-(1/(12s))(1 + 1/(r(r-1)))) factor of the bracket.
long double sasvari_theta(long double r, long double s);

/// Closed-form lower bound for the extension case (odd p, n >= 2).
long double extension_order_bound(std::uint64_t p, unsigned n);

/// The simplified variant (1/(pi p)) ((e - eps)(2n+1))^(p-1); only valid for
/// n past an unquantified threshold, so callers must not assume it holds at
/// any particular n.
long double simplified_order_bound(std::uint64_t p, unsigned n, long double eps);

/// Closed-form lower bound for the prime-field case (n = 1):
/// (sqrt(3)/(pi p)) e^(-1/12) (16/3)^p.
long double prime_order_bound(std::uint64_t p);

struct Rational64 {
    std::uint64_t num = 0, den = 1;
};

/// The lambda-parameterized prime-case display, both Theta factors included:
/// (1/(pi p)) sqrt((1+l)/(2l(1-l))) (4^(1-l)(1+l)^(1+l)/l^l)^p
///   Theta(2, p(1-l)) Theta((1+l)/l, pl).
/// Requires 0 < lambda < 1 with p*lambda integral (InvalidLambda otherwise).
long double prime_order_bound_lambda(std::uint64_t p, Rational64 lambda);

/// Exact value of the chain the display relaxes:
/// (1/2) C(2(p-s), p-s) C(p+s, s) at s = p*lambda. Integral since C(2m, m)
/// is even for m >= 1.
BigInt halved_chain_exact(std::uint64_t p, std::uint64_t s);

/// Generator of the published per-n table column, reconstructed as
/// (2n+1) ((2n+1)/(2n-1))^((4n-1)/4); the derivation is not given alongside
/// the table, so outputs carry a "reconstructed" provenance label.
long double table_row_base(unsigned n);

struct TableRow {
    unsigned n;
    double published;  // the value the table prints for this n
};

/// The eight published rows used for cross-checking table_row_base.
const std::vector<TableRow>& published_table_rows();

// Growth bases (the c in c^p) of earlier prime-case bounds, kept for
// comparison: 4 (Popovych), 2^2.54 (Shparlinski-Voloch, unproved in print),
// and 16/3 here.
struct GrowthComparison {
    double popovych = 4.0;
    double shparlinski_voloch = 5.81589;
    double this_bound = 16.0 / 3.0;
};

struct BoundReport {
    std::uint64_t p = 0;
    unsigned n = 0;
    unsigned degree = 0;  // N = np

    BigInt exact_best;
    unsigned exact_s = 0, exact_t = 0;
    BigInt binom_best;
    unsigned binom_s = 0, binom_t = 0;

    // n >= 2 only
    bool has_extension_forms = false;
    long double ext_closed = 0;
    long double simplified = 0;
    long double epsilon = 0;
    long double table_base = 0;

    // n = 1 only
    bool has_prime_forms = false;
    long double prime_closed = 0;
    long double lambda_value = 0;     // display value at the best lambda
    Rational64 lambda_used;
    BigInt chain_exact;               // halved_chain_exact at that lambda
    long double lambda_value_halved = 0;

    std::vector<std::string> flags;
};

/// Assembles every applicable bound for (p, n) and cross-checks them:
/// CLOSED_FORM_EXCEEDS_EXACT when a closed form exceeds the exact count,
/// TABLE_MISMATCH when the reconstructed table base strays from a published
/// row, BOUNDARY_EQUALITY when the census probability bound is met with
/// equality. Requires odd prime p; for n >= 2 also p not dividing n.
BoundReport make_bound_report(std::uint64_t p, unsigned n, long double eps = 0.01L);

/// -1, 0, +1 comparison of exp(log_value) against the exact integer m,
/// with |log difference| < tol treated as equal.
int compare_log_to_int(long double log_value, const BigInt& m, long double tol = 1e-9L);

}  // namespace asorder
