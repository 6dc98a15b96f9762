#include "asorder/artin_schreier.hpp"

#include <algorithm>
#include <sstream>

namespace asorder {

IrredResult as_irreducible(const FieldPtr& base, const FqElem& a, IrredMethod method) {
    if (!same_params(*base, *a.field())) throw FieldMismatch();
    switch (method) {
        case IrredMethod::degree_coprime: {
            if (!a.in_prime_subfield() || a.is_zero())
                throw Error("degree test applies only to a in F_p*");
            return {base->n % base->p != 0, method};
        }
        case IrredMethod::trace:
            // x^p - x - a has a root iff a = c^p - c for some c, i.e. Tr(a) = 0
            return {trace_to_fp(a) != 0, method};
        case IrredMethod::exhaustive: {
            if (base->q > 729) throw TooLarge(base->q);
            std::uint64_t q = base->q.convert_to<std::uint64_t>();
            for (std::uint64_t i = 0; i < q; ++i) {
                FqElem c = element_at(base, i);
                if (pow(c, base->p) - c == a) return {false, method};
            }
            return {true, method};
        }
    }
    throw Error("unknown irreducibility method");
}

IrredResult as_irreducible(const FieldPtr& base, const FqElem& a) {
    if (a.in_prime_subfield() && !a.is_zero())
        return as_irreducible(base, a, IrredMethod::degree_coprime);
    return as_irreducible(base, a, IrredMethod::trace);
}

const char* irred_method_name(IrredMethod m) {
    switch (m) {
        case IrredMethod::degree_coprime: return "degree-coprime";
        case IrredMethod::trace: return "trace";
        case IrredMethod::exhaustive: return "exhaustive";
    }
    return "?";
}

KContextPtr KContext::make(FieldPtr base, const FqElem& a) {
    if (!same_params(*base, *a.field())) throw FieldMismatch();
    if (a.is_zero() || !a.in_prime_subfield())
        throw Reducible("a must be a nonzero prime-subfield element");
    if (!as_irreducible(base, a).irreducible)
        throw Reducible("x^p - x - a is reducible over this base field");
    auto ctx = std::make_shared<KContext>();
    ctx->degree = base->n * static_cast<unsigned>(base->p);
    ctx->unit_group_order = pow_uint(base->p, ctx->degree) - 1;
    ctx->a = a.constant();
    ctx->base = std::move(base);
    return ctx;
}

KContextPtr KContext::make(FieldPtr base, std::uint64_t a) {
    FqElem av = FqElem::from_residue(base, a);
    return make(std::move(base), av);
}

bool same_context(const KContext& x, const KContext& y) {
    return x.a == y.a && same_params(*x.base, *y.base);
}

namespace {

void require_same(const KElem& u, const KElem& v) {
    if (!u.context() || !v.context() || !same_context(*u.context(), *v.context()))
        throw ContextMismatch("operands belong to different extensions");
}

}  // namespace

KElem::KElem(KContextPtr ctx, std::vector<FqElem> coeffs) : ctx_(std::move(ctx)) {
    const auto p = static_cast<std::size_t>(ctx_->base->p);
    if (coeffs.size() > p) throw DegreeMismatch("reduced form must have degree < p");
    while (coeffs.size() < p) coeffs.push_back(FqElem::zero(ctx_->base));
    for (const auto& c : coeffs)
        if (!same_params(*c.field(), *ctx_->base)) throw FieldMismatch();
    coeffs_ = std::move(coeffs);
}

KElem KElem::zero(const KContextPtr& ctx) { return KElem(ctx, {}); }

KElem KElem::one(const KContextPtr& ctx) { return KElem(ctx, {FqElem::one(ctx->base)}); }

bool KElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FqElem& c) { return c.is_zero(); });
}

bool KElem::is_one() const { return *this == one(ctx_); }

KElem KElem::operator+(const KElem& rhs) const {
    require_same(*this, rhs);
    KElem out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
    return out;
}

KElem KElem::operator-(const KElem& rhs) const {
    require_same(*this, rhs);
    KElem out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
    return out;
}

KElem KElem::operator*(const KElem& rhs) const {
    require_same(*this, rhs);
    const auto p = static_cast<std::size_t>(ctx_->base->p);
    std::vector<FqElem> prod(2 * p - 1, FqElem::zero(ctx_->base));
    for (std::size_t i = 0; i < p; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < p; ++j) prod[i + j] = prod[i + j] + coeffs_[i] * rhs.coeffs_[j];
    }
    // theta^k = theta^(k-p+1) + a * theta^(k-p) for k >= p
    for (std::size_t k = prod.size(); k-- > p;) {
        if (prod[k].is_zero()) continue;
        FqElem c = prod[k];
        prod[k] = FqElem::zero(ctx_->base);
        prod[k - p + 1] = prod[k - p + 1] + c;
        prod[k - p] = prod[k - p] + c.scaled(ctx_->a);
    }
    prod.resize(p, FqElem::zero(ctx_->base));
    KElem out = *this;
    out.coeffs_ = std::move(prod);
    return out;
}

bool operator==(const KElem& a, const KElem& b) {
    require_same(a, b);
    return a.coeffs_ == b.coeffs_;
}

std::vector<std::uint64_t> KElem::key() const {
    std::vector<std::uint64_t> k;
    k.reserve(coeffs_.size());
    for (const auto& c : coeffs_) k.push_back(element_index(c));
    return k;
}

KElem theta(const KContextPtr& ctx) {
    return KElem(ctx, {FqElem::zero(ctx->base), FqElem::one(ctx->base)});
}

KElem theta_plus(const KContextPtr& ctx, const FqElem& b) {
    if (!same_params(*b.field(), *ctx->base)) throw FieldMismatch();
    return KElem(ctx, {b, FqElem::one(ctx->base)});
}

KElem pow(const KElem& u, const BigInt& e) {
    if (e < 0) throw Error("negative exponent; invert explicitly");
    KElem acc = KElem::one(u.context());
    KElem base = u;
    for (unsigned bit = 0, top = (e == 0) ? 0 : boost::multiprecision::msb(e) + 1; bit < top; ++bit) {
        if (boost::multiprecision::bit_test(e, bit)) acc = acc * base;
        base = base * base;
    }
    return acc;
}

KElem pow(const KElem& u, std::uint64_t e) { return pow(u, BigInt(e)); }

KElem inv(const KElem& u) {
    if (u.is_zero()) throw DivisionByZero();
    return pow(u, BigInt(u.context()->unit_group_order - 1));
}

bool frobenius_identity_holds(const KContextPtr& ctx, unsigned jmax) {
    if (ctx->a != 1) throw RequiresAEqualsOne();
    if (jmax > ctx->degree) throw Error("jmax exceeds the degree over F_p");
    KElem fr = theta(ctx);
    for (unsigned j = 1; j <= jmax; ++j) {
        fr = pow(fr, ctx->base->p);
        if (fr != theta_plus(ctx, FqElem::from_residue(ctx->base, j % ctx->base->p)))
            return false;
    }
    return true;
}

KContextPtr unit_sibling(const KContextPtr& ctx) { return KContext::make(ctx->base, 1); }

KElem tau_transport(const KElem& u, const KContextPtr& target) {
    const auto& src = *u.context();
    if (target->a != 1) throw ContextMismatch("transport target must use a = 1");
    if (!same_params(*src.base, *target->base))
        throw ContextMismatch("transport requires the same base field");
    // h(x) -> h(ax): the i-th coefficient picks up a^i, degree is unchanged
    std::vector<FqElem> out;
    out.reserve(u.coeffs().size());
    std::uint64_t scale = 1;
    for (const auto& c : u.coeffs()) {
        out.push_back(c.scaled(scale));
        scale = mul_mod(scale, src.a, src.base->p);
    }
    return KElem(target, std::move(out));
}

KElem tau_transport(const KElem& u) { return tau_transport(u, unit_sibling(u.context())); }

std::string kelem_text(const KElem& u) {
    std::string out;
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
        if (i) out += ';';
        out += poly_text(u.coeffs()[i].coeffs());
    }
    return out;
}

KElem parse_kelem(const KContextPtr& ctx, const std::string& text) {
    std::vector<FqElem> coeffs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';'))
        coeffs.emplace_back(ctx->base, parse_poly_text(tok));
    return KElem(ctx, std::move(coeffs));
}

}  // namespace asorder
