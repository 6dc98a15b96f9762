#include "asorder/bounds.hpp"

#include <cmath>

#include "asorder/census.hpp"
#include "asorder/errors.hpp"

namespace asorder {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;

void require_odd_prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw NotPrime(p);
    if (p == 2) throw Error("bound machinery needs an odd prime");
}

}  // namespace

BigInt count_budget_vectors(unsigned len, unsigned pos, unsigned neg) {
    if (len < 1) throw InvalidBudget("vector length must be at least 1");
    BigInt acc = 0;
    for (unsigned i = 0; i <= pos; ++i) {
        if (i > len) break;
        BigInt left = binomial(len, i) * binomial(pos, i);
        for (unsigned j = 0; j <= neg; ++j) {
            if (j > len - i) break;
            acc += left * binomial(len - i, j) * binomial(neg, j);
        }
    }
    return acc;
}

BigInt binom_product_bound(unsigned len, unsigned pos, unsigned neg) {
    if (pos > len)
        throw InvalidBudget("positive budget exceeds the vector length");
    return binomial(len + neg - pos, neg) * binomial(len + pos, pos);
}

BudgetMax best_exact_bound(std::uint64_t p, unsigned n) {
    require_odd_prime(p);
    const unsigned len = n * static_cast<unsigned>(p);
    BudgetMax best;
    for (unsigned s = 0; s < p; ++s) {
        unsigned t = static_cast<unsigned>(p) - 1 - s;
        BigInt v = count_budget_vectors(len, s, t);
        if (v > best.value) best = {std::move(v), s, t};
    }
    return best;
}

BudgetMax best_binom_bound(std::uint64_t p, unsigned n) {
    require_odd_prime(p);
    const unsigned len = n * static_cast<unsigned>(p);
    BudgetMax best;
    for (unsigned s = 0; s < p; ++s) {
        unsigned t = static_cast<unsigned>(p) - 1 - s;
        BigInt v = binom_product_bound(len, s, t);
        if (v > best.value) best = {std::move(v), s, t};
    }
    return best;
}

long double sasvari_theta(long double r, long double s) {
    return std::exp(-(1.0L / (12.0L * s)) * (1.0L + 1.0L / (r * (r - 1.0L))));
}

Bracket sasvari_bracket(long double r, long double s) {
    if (!(r > 1.0L) || !(s > 0.0L)) throw Error("bracket needs r > 1 and s > 0");
    long double log_c = 0.5L * std::log(r / (2.0L * kPi * (r - 1.0L)));
    long double log_d = r * std::log(r) - (r - 1.0L) * std::log(r - 1.0L);
    long double log_upper = log_c + s * log_d - 0.5L * std::log(s);
    Bracket out;
    out.upper = std::exp(log_upper);
    out.lower = std::exp(log_upper) * sasvari_theta(r, s);
    return out;
}

long double extension_order_bound(std::uint64_t p, unsigned n) {
    require_odd_prime(p);
    if (n < 2) throw RequiresNAtLeast2();
    const long double pd = static_cast<long double>(p);
    const long double top = 2.0L * n + 1.0L, bot = 2.0L * n - 1.0L;
    long double log_v = -std::log(kPi * (pd - 1.0L));
    log_v += 0.5L * (std::log(top) - std::log(bot));
    log_v += ((pd - 1.0L) / 2.0L) * (top * std::log(top) - bot * std::log(bot));
    const long double nn = 4.0L * n * static_cast<long double>(n);
    log_v += -(1.0L / (3.0L * (pd - 1.0L))) * (nn / (nn - 1.0L));
    return std::exp(log_v);
}

long double simplified_order_bound(std::uint64_t p, unsigned n, long double eps) {
    require_odd_prime(p);
    if (n < 2) throw RequiresNAtLeast2();
    if (!(eps > 0.0L)) throw Error("epsilon must be positive");
    const long double e = 2.71828182845904523536028747135266250L;
    long double log_v = -std::log(kPi * static_cast<long double>(p));
    log_v += (static_cast<long double>(p) - 1.0L) * std::log((e - eps) * (2.0L * n + 1.0L));
    return std::exp(log_v);
}

long double prime_order_bound(std::uint64_t p) {
    require_odd_prime(p);
    long double log_v = 0.5L * std::log(3.0L) - std::log(kPi * static_cast<long double>(p));
    log_v += -1.0L / 12.0L;
    log_v += static_cast<long double>(p) * std::log(16.0L / 3.0L);
    return std::exp(log_v);
}

long double prime_order_bound_lambda(std::uint64_t p, Rational64 lambda) {
    require_odd_prime(p);
    if (lambda.den == 0 || lambda.num == 0 || lambda.num >= lambda.den)
        throw InvalidLambda("lambda must satisfy 0 < lambda < 1");
    if ((p * lambda.num) % lambda.den != 0)
        throw InvalidLambda("p * lambda must be an integer");
    const long double l = static_cast<long double>(lambda.num) / lambda.den;
    const long double pd = static_cast<long double>(p);
    long double log_v = -std::log(kPi * pd);
    log_v += 0.5L * std::log((1.0L + l) / (2.0L * l * (1.0L - l)));
    log_v += pd * ((1.0L - l) * std::log(4.0L) + (1.0L + l) * std::log(1.0L + l) -
                   l * std::log(l));
    long double v = std::exp(log_v);
    v *= sasvari_theta(2.0L, pd * (1.0L - l));
    v *= sasvari_theta((1.0L + l) / l, pd * l);
    return v;
}

BigInt halved_chain_exact(std::uint64_t p, std::uint64_t s) {
    if (s >= p) throw InvalidLambda("requires s < p");
    return binomial(2 * (p - s), p - s) * binomial(p + s, s) / 2;
}

long double table_row_base(unsigned n) {
    if (n < 2) throw RequiresNAtLeast2();
    const long double top = 2.0L * n + 1.0L, bot = 2.0L * n - 1.0L;
    const long double exponent = (4.0L * n - 1.0L) / 4.0L;
    return top * std::exp(exponent * (std::log(top) - std::log(bot)));
}

const std::vector<TableRow>& published_table_rows() {
    static const std::vector<TableRow> rows = {
        {2, 12.22377},    {3, 17.65835},    {4, 23.09586},     {5, 28.53356},
        {10, 55.71983},   {100, 545.01494}, {1000, 5437.92274}, {10000, 54366.9957},
    };
    return rows;
}

int compare_log_to_int(long double log_value, const BigInt& m, long double tol) {
    long double diff = log_value - log_bigint(m);
    if (diff > tol) return 1;
    if (diff < -tol) return -1;
    return 0;
}

BoundReport make_bound_report(std::uint64_t p, unsigned n, long double eps) {
    require_odd_prime(p);
    if (n < 1) throw Error("extension degree must be at least 1");
    if (n >= 2 && n % p == 0)
        throw Reducible("p divides n: x^p - x - a is reducible for a in F_p*");

    BoundReport rep;
    rep.p = p;
    rep.n = n;
    rep.degree = n * static_cast<unsigned>(p);

    BudgetMax exact = best_exact_bound(p, n);
    rep.exact_best = exact.value;
    rep.exact_s = exact.s;
    rep.exact_t = exact.t;
    BudgetMax binom = best_binom_bound(p, n);
    rep.binom_best = binom.value;
    rep.binom_s = binom.s;
    rep.binom_t = binom.t;

    bool closed_exceeds = false;
    if (n >= 2) {
        rep.has_extension_forms = true;
        rep.ext_closed = extension_order_bound(p, n);
        rep.epsilon = eps;
        rep.simplified = simplified_order_bound(p, n, eps);
        rep.table_base = table_row_base(n);
        if (compare_log_to_int(std::log(rep.ext_closed), rep.exact_best) > 0)
            closed_exceeds = true;
        for (const auto& row : published_table_rows())
            if (row.n == n &&
                std::fabs(rep.table_base - static_cast<long double>(row.published)) >
                    1e-3L * static_cast<long double>(row.published))
                rep.flags.emplace_back("TABLE_MISMATCH");
    } else {
        rep.has_prime_forms = true;
        rep.prime_closed = prime_order_bound(p);
        // the display is a max over lambda; sweep the admissible grid
        long double best = 0;
        for (std::uint64_t s = 1; s < p; ++s) {
            long double v = prime_order_bound_lambda(p, {s, p});
            if (v > best) {
                best = v;
                rep.lambda_used = {s, p};
            }
        }
        rep.lambda_value = best;
        rep.lambda_value_halved = best / 2.0L;
        rep.chain_exact = halved_chain_exact(p, rep.lambda_used.num);
        if (compare_log_to_int(std::log(rep.prime_closed), rep.exact_best) > 0)
            closed_exceeds = true;
        if (compare_log_to_int(std::log(rep.lambda_value), rep.exact_best) > 0)
            closed_exceeds = true;
    }
    if (closed_exceeds) rep.flags.emplace_back("CLOSED_FORM_EXCEEDS_EXACT");

    if (n >= 2 && census(p, n).boundary_equality)
        rep.flags.emplace_back("BOUNDARY_EQUALITY");

    return rep;
}

}  // namespace asorder
