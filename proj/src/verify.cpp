#include "asorder/verify.hpp"

#include <algorithm>
#include <cmath>

namespace asorder {

bool ExponentVector::within_budgets() const {
    long long pos = 0, neg = 0;
    for (int v : r) {
        if (v > 0) pos += v;
        if (v < 0) neg -= v;
    }
    return pos <= static_cast<long long>(pos_budget) && neg <= static_cast<long long>(neg_budget);
}

namespace {

void enumerate_rec(ExponentVector& vec, unsigned idx, unsigned pos_left, unsigned neg_left,
                   const std::function<void(const ExponentVector&)>& visit) {
    if (idx == vec.r.size()) {
        visit(vec);
        return;
    }
    for (int v = -static_cast<int>(neg_left); v <= static_cast<int>(pos_left); ++v) {
        vec.r[idx] = v;
        enumerate_rec(vec, idx + 1, pos_left - (v > 0 ? v : 0), neg_left - (v < 0 ? -v : 0),
                      visit);
    }
    vec.r[idx] = 0;
}

}  // namespace

void enumerate_budget_vectors(unsigned len, unsigned pos, unsigned neg,
                              const std::function<void(const ExponentVector&)>& visit,
                              const BigInt& cap) {
    BigInt count = count_budget_vectors(len, pos, neg);
    if (count > cap) throw TooLarge(count);
    ExponentVector vec;
    vec.r.assign(len, 0);
    vec.pos_budget = pos;
    vec.neg_budget = neg;
    enumerate_rec(vec, 0, pos, neg, visit);
}

KElem lambda_eval(const ExponentVector& vec, const KElem& g) {
    if (g.is_zero()) throw DivisionByZero();
    const auto& ctx = g.context();
    if (vec.r.size() != ctx->degree)
        throw ContextMismatch("vector length must equal the degree over F_p");
    KElem acc = KElem::one(ctx);
    KElem power = g;  // g^(p^j) for the current j
    for (std::size_t j = 0; j < vec.r.size(); ++j) {
        if (j > 0) power = pow(power, ctx->base->p);
        int e = vec.r[j];
        if (e > 0)
            acc = acc * pow(power, static_cast<std::uint64_t>(e));
        else if (e < 0)
            acc = acc * pow(inv(power), static_cast<std::uint64_t>(-e));
    }
    return acc;
}

KElem lambda_eval_linear(const ExponentVector& vec, const KContextPtr& ctx, const FqElem& b) {
    if (ctx->a != 1) throw RequiresAEqualsOne();
    if (vec.r.size() != ctx->degree)
        throw ContextMismatch("vector length must equal the degree over F_p");
    KElem acc = KElem::one(ctx);
    for (std::size_t j = 0; j < vec.r.size(); ++j) {
        int e = vec.r[j];
        if (e == 0) continue;
        FqElem shift = FqElem::from_residue(ctx->base, j % ctx->base->p) + frobenius(b, j % ctx->base->n);
        KElem factor = theta_plus(ctx, shift);
        if (e > 0)
            acc = acc * pow(factor, static_cast<std::uint64_t>(e));
        else
            acc = acc * pow(inv(factor), static_cast<std::uint64_t>(-e));
    }
    return acc;
}

InjectivityResult injectivity_check(const KContextPtr& ctx, const FqElem& b, unsigned s,
                                    unsigned t, const BigInt& cap) {
    if (ctx->a != 1) throw RequiresAEqualsOne();
    if (s + t > ctx->base->p - 1)
        throw InvalidBudget("injectivity is only guaranteed for s + t <= p - 1");
    InjectivityResult out;
    out.exploratory = in_proper_subfield(b);
    out.injective = true;
    KElem g = theta_plus(ctx, b);
    std::map<std::vector<std::uint64_t>, ExponentVector> seen;
    enumerate_budget_vectors(
        ctx->degree, s, t,
        [&](const ExponentVector& vec) {
            if (!out.injective) return;
            KElem image = lambda_eval(vec, g);
            auto [it, inserted] = seen.emplace(image.key(), vec);
            if (!inserted) {
                out.injective = false;
                out.collision = {it->second, vec};
            }
        },
        cap);
    out.image_count = seen.size();
    return out;
}

DistinctnessResult distinctness_check(const KContextPtr& ctx, const FqElem& b) {
    if (ctx->a != 1) throw RequiresAEqualsOne();
    const unsigned N = ctx->degree;
    std::vector<FqElem> values;
    values.reserve(N);
    FqElem fr = b;
    for (unsigned i = 0; i < N; ++i) {
        if (i > 0) fr = pow(fr, ctx->base->p);
        values.push_back(FqElem::from_residue(ctx->base, i % ctx->base->p) + fr);
    }
    for (unsigned i = 0; i < N; ++i)
        for (unsigned j = i + 1; j < N; ++j)
            if (values[i] == values[j]) return {false, std::make_pair(i, j)};
    return {true, std::nullopt};
}

namespace {

BigInt pollard_rho(const BigInt& m, std::uint64_t& budget) {
    // Brent's cycle variant; the increment c steps deterministically so runs
    // are reproducible
    for (BigInt c = 1; budget > 0; ++c) {
        BigInt x = 2, saved = 2, d = 1;
        std::uint64_t power = 1, lam = 1;
        while (d == 1) {
            if (budget == 0) return 0;
            --budget;
            x = (x * x + c) % m;
            BigInt diff = x > saved ? x - saved : saved - x;
            d = boost::multiprecision::gcd(diff, m);  // gcd(0, m) = m ends the lap
            if (lam == power) {
                saved = x;
                power *= 2;
                lam = 0;
            }
            ++lam;
        }
        if (d != m) return d;
    }
    return 0;
}

void factor_into(BigInt m, std::vector<BigInt>& primes, std::uint64_t& budget) {
    if (m == 1) return;
    if (is_probable_prime(m)) {
        primes.push_back(m);
        return;
    }
    BigInt d = pollard_rho(m, budget);
    if (d == 0) throw FactorizationBudgetExceeded("rho budget exhausted on " + m.str());
    factor_into(d, primes, budget);
    factor_into(m / d, primes, budget);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factorize(BigInt m, const FactorizeOptions& opts) {
    if (m < 1) throw Error("factorization needs a positive integer");
    if (!opts.allow_large && m > opts.guard)
        throw FactorizationBudgetExceeded("input exceeds the factorization guard");
    const BigInt input = m;
    std::vector<std::pair<BigInt, unsigned>> out;
    for (std::uint64_t d = 2; d <= 1'000'000 && BigInt(d) * d <= m; d += (d == 2 ? 1 : 2)) {
        if (m % d != 0) continue;
        unsigned e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (m > 1) {
        std::vector<BigInt> primes;
        std::uint64_t budget = opts.rho_budget;
        factor_into(m, primes, budget);
        std::sort(primes.begin(), primes.end());
        for (std::size_t i = 0; i < primes.size();) {
            std::size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            out.emplace_back(primes[i], static_cast<unsigned>(j - i));
            i = j;
        }
    }
    BigInt check = 1;
    for (const auto& [prime, exp] : out)
        for (unsigned i = 0; i < exp; ++i) check *= prime;
    if (check != input) throw Error("factorization product check failed");
    return out;
}

OrderResult multiplicative_order(const KElem& u, const FactorizeOptions& opts) {
    if (u.is_zero()) throw DivisionByZero();
    OrderResult out;
    out.group_order = u.context()->unit_group_order;
    out.factorization = factorize(out.group_order, opts);
    BigInt order = out.group_order;
    for (const auto& [prime, exp] : out.factorization) {
        for (unsigned i = 0; i < exp; ++i) {
            BigInt candidate = order / prime;
            if (pow(u, candidate).is_one())
                order = candidate;
            else
                break;
        }
    }
    out.element_order = order;
    out.certified = pow(u, order).is_one();
    for (const auto& [prime, exp] : out.factorization) {
        (void)exp;
        if (order % prime == 0 && pow(u, BigInt(order / prime)).is_one()) out.certified = false;
    }
    return out;
}

VerificationRecord verify_instance(std::uint64_t p, unsigned n, std::uint64_t a,
                                   const std::vector<std::uint64_t>& b_coeffs,
                                   const Guards& guards) {
    VerificationRecord rec;
    rec.p = p;
    rec.n = n;
    rec.a = a;
    rec.b = b_coeffs;
    try {
        FieldPtr base = Field::make(p, n);
        FqElem av = FqElem::from_residue(base, a);
        FqElem b(base, b_coeffs);
        rec.b = b.coeffs();

        IrredResult ir = as_irreducible(base, av);
        rec.irreducible = ir.irreducible;
        rec.irreducibility_method = irred_method_name(ir.method);
        if (!ir.irreducible) {
            rec.errors.emplace_back("IrreducibilityFailure: x^p - x - a is reducible");
            return rec;
        }

        rec.b_outside_proper = !in_proper_subfield(b);

        rec.bounds = make_bound_report(p, n);
        for (const auto& f : rec.bounds->flags) rec.flags.push_back(f);

        const BoundReport& br = *rec.bounds;
        std::map<std::string, long double> closed_forms;
        if (br.has_extension_forms) closed_forms["extensionClosedForm"] = br.ext_closed;
        if (br.has_prime_forms) {
            closed_forms["primeClosedForm"] = br.prime_closed;
            closed_forms["lambdaForm"] = br.lambda_value;
        }
        for (const auto& [name, value] : closed_forms)
            rec.closed_le_exact[name] = compare_log_to_int(std::log(value), br.exact_best) <= 0;

        KContextPtr ctx = KContext::make(base, av);
        BigInt order_cap = BigInt(1) << guards.order_guard_bits;
        if (pow_uint(p, ctx->degree) <= order_cap) {
            KElem u = theta_plus(ctx, b);
            rec.order = multiplicative_order(u);
            rec.order_checked = true;
            rec.order_meets_exact = rec.order->element_order >= br.exact_best;
            if (rec.b_outside_proper && !rec.order_meets_exact)
                rec.flags.emplace_back("ORDER_BELOW_EXACT");
            for (const auto& [name, value] : closed_forms) {
                bool le = compare_log_to_int(std::log(value), rec.order->element_order) <= 0;
                rec.closed_le_order[name] = le;
                if (!le && rec.b_outside_proper)
                    if (std::find(rec.flags.begin(), rec.flags.end(),
                                  "CLOSED_FORM_EXCEEDS_ORDER") == rec.flags.end())
                        rec.flags.emplace_back("CLOSED_FORM_EXCEEDS_ORDER");
            }
        }
    } catch (const std::exception& e) {
        rec.errors.emplace_back(e.what());
    }
    return rec;
}

}  // namespace asorder
