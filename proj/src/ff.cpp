#include "asorder/ff.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace asorder {

namespace {

// Dense polynomial helpers over F_p, coefficient of y^i at index i.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = add_mod(out[i + j], mul_mod(a[i], b[j], p), p);
    }
    return out;
}

// Reduce a modulo the monic polynomial g.
void poly_mod(Poly& a, const Poly& g, std::uint64_t p) {
    const std::size_t n = g.size() - 1;
    for (std::size_t k = a.size(); k-- > n;) {
        std::uint64_t c = a[k];
        if (c == 0) continue;
        a[k] = 0;
        for (std::size_t i = 0; i < n; ++i)
            a[k - n + i] = sub_mod(a[k - n + i], mul_mod(c, g[i], p), p);
    }
    if (a.size() > n) a.resize(n);
    trim(a);
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& g, std::uint64_t p) {
    Poly out = poly_mul(a, b, p);
    poly_mod(out, g, p);
    return out;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& g, std::uint64_t p) {
    Poly acc = {1 % p};
    poly_mod(base, g, p);
    while (e) {
        if (e & 1) acc = poly_mulmod(acc, base, g, p);
        base = poly_mulmod(base, base, g, p);
        e >>= 1;
    }
    return acc;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub_mod(a[i], b[i], p);
    trim(a);
    return a;
}

Poly poly_rem(Poly a, const Poly& b, std::uint64_t p) {
    std::uint64_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        std::uint64_t c = mul_mod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - b.size();
        if (c != 0)
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = sub_mod(a[shift + i], mul_mod(c, b[i], p), p);
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Classic criterion: g of degree n is irreducible over F_p iff
// y^(p^n) = y (mod g) and gcd(y^(p^(n/r)) - y, g) = 1 for every prime r | n.
bool is_irreducible_mod_p(const Poly& g, std::uint64_t p) {
    const std::size_t n = g.size() - 1;
    if (n == 1) return true;
    const Poly y = {0, 1};
    std::vector<Poly> frob(n + 1);  // frob[i] = y^(p^i) mod g
    frob[0] = y;
    for (std::size_t i = 1; i <= n; ++i) frob[i] = poly_powmod(frob[i - 1], p, g, p);
    if (frob[n] != y) return false;
    for (auto [r, e] : factor_small(n)) {
        (void)e;
        Poly d = poly_gcd(poly_sub(frob[n / r], y, p), g, p);
        if (d.size() != 1) return false;
    }
    return true;
}

}  // namespace

FieldPtr Field::make(std::uint64_t p, unsigned n, std::optional<std::vector<std::uint64_t>> g) {
    if (!is_prime_u64(p)) throw NotPrime(p);
    if (n < 1) throw DegreeMismatch("extension degree must be at least 1");

    Poly mod;
    if (g) {
        mod = std::move(*g);
        if (mod.size() != static_cast<std::size_t>(n) + 1)
            throw DegreeMismatch("modulus must have exactly degree " + std::to_string(n));
        for (auto& c : mod) c %= p;
        if (mod.back() != 1) throw DegreeMismatch("modulus must be monic");
        if (!is_irreducible_mod_p(mod, p)) throw ReducibleModulus();
    } else if (n == 1) {
        mod = {0, 1};  // g(y) = y
    } else {
        // lexicographically smallest monic irreducible, constant term first
        BigInt total = pow_uint(p, n);
        if (total > (BigInt(1) << 40))
            throw DegreeMismatch("automatic modulus search is limited to small fields");
        std::uint64_t count = total.convert_to<std::uint64_t>();
        bool found = false;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly cand(n + 1, 0);
            cand[n] = 1;
            std::uint64_t rest = idx;
            for (unsigned i = 0; i < n; ++i) {  // digits of idx, constant term most significant
                cand[n - 1 - i] = rest % p;
                rest /= p;
            }
            if (is_irreducible_mod_p(cand, p)) {
                mod = std::move(cand);
                found = true;
                break;
            }
        }
        if (!found) throw ReducibleModulus("no irreducible modulus found");  // unreachable
    }

    auto f = std::make_shared<Field>();
    f->p = p;
    f->n = n;
    f->q = pow_uint(p, n);
    f->modulus = std::move(mod);
    return f;
}

bool same_params(const Field& a, const Field& b) {
    return a.p == b.p && a.n == b.n && a.modulus == b.modulus;
}

namespace {

void require_same(const FqElem& a, const FqElem& b) {
    if (!a.field() || !b.field() || !same_params(*a.field(), *b.field()))
        throw FieldMismatch();
}

}  // namespace

FqElem::FqElem(FieldPtr f, std::vector<std::uint64_t> coeffs) : field_(std::move(f)) {
    if (coeffs.size() > field_->n)
        throw DegreeMismatch("element has more coefficients than the extension degree");
    coeffs.resize(field_->n, 0);
    for (auto& c : coeffs) c %= field_->p;
    coeffs_ = std::move(coeffs);
}

FqElem FqElem::zero(const FieldPtr& f) { return FqElem(f, {}); }

FqElem FqElem::one(const FieldPtr& f) { return FqElem(f, {1}); }

FqElem FqElem::from_residue(const FieldPtr& f, std::uint64_t v) { return FqElem(f, {v}); }

FqElem FqElem::generator(const FieldPtr& f) {
    if (f->n < 2) throw DegreeMismatch("generator y exists only for n >= 2");
    return FqElem(f, {0, 1});
}

bool FqElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint64_t c) { return c == 0; });
}

bool FqElem::in_prime_subfield() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

FqElem FqElem::operator+(const FqElem& rhs) const {
    require_same(*this, rhs);
    FqElem out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] = add_mod(coeffs_[i], rhs.coeffs_[i], field_->p);
    return out;
}

FqElem FqElem::operator-(const FqElem& rhs) const {
    require_same(*this, rhs);
    FqElem out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] = sub_mod(coeffs_[i], rhs.coeffs_[i], field_->p);
    return out;
}

FqElem FqElem::operator-() const {
    FqElem out = *this;
    for (auto& c : out.coeffs_) c = neg_mod(c, field_->p);
    return out;
}

FqElem FqElem::scaled(std::uint64_t c) const {
    FqElem out = *this;
    c %= field_->p;
    for (auto& x : out.coeffs_) x = mul_mod(x, c, field_->p);
    return out;
}

FqElem FqElem::operator*(const FqElem& rhs) const {
    require_same(*this, rhs);
    const std::uint64_t p = field_->p;
    const unsigned n = field_->n;
    std::vector<std::uint64_t> prod(2 * n - 1, 0);
    for (unsigned i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (unsigned j = 0; j < n; ++j)
            prod[i + j] = add_mod(prod[i + j], mul_mod(coeffs_[i], rhs.coeffs_[j], p), p);
    }
    const auto& g = field_->modulus;
    for (std::size_t k = prod.size(); k-- > n;) {
        std::uint64_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (unsigned i = 0; i < n; ++i)
            prod[k - n + i] = sub_mod(prod[k - n + i], mul_mod(c, g[i], p), p);
    }
    prod.resize(n);
    FqElem out = *this;
    out.coeffs_ = std::move(prod);
    return out;
}

bool operator==(const FqElem& a, const FqElem& b) {
    require_same(a, b);
    return a.coeffs_ == b.coeffs_;
}

FqElem pow(const FqElem& x, const BigInt& e) {
    if (e < 0) throw Error("negative exponent; invert explicitly");
    FqElem acc = FqElem::one(x.field());
    FqElem base = x;
    for (unsigned bit = 0, top = (e == 0) ? 0 : boost::multiprecision::msb(e) + 1; bit < top; ++bit) {
        if (boost::multiprecision::bit_test(e, bit)) acc = acc * base;
        base = base * base;
    }
    return acc;
}

FqElem pow(const FqElem& x, std::uint64_t e) { return pow(x, BigInt(e)); }

FqElem inv(const FqElem& x) {
    if (x.is_zero()) throw DivisionByZero();
    return pow(x, BigInt(x.field()->q - 2));
}

FqElem frobenius(const FqElem& x, unsigned j) {
    const unsigned n = x.field()->n;
    FqElem out = x;
    for (unsigned i = 0; i < j % n; ++i) out = pow(out, x.field()->p);
    return out;
}

std::uint64_t trace_to_fp(const FqElem& x) {
    FqElem acc = x;
    FqElem fr = x;
    for (unsigned i = 1; i < x.field()->n; ++i) {
        fr = pow(fr, x.field()->p);
        acc = acc + fr;
    }
    if (!acc.in_prime_subfield())
        throw std::logic_error("trace left the prime subfield; arithmetic bug");
    return acc.constant();
}

FqElem element_at(const FieldPtr& f, std::uint64_t index) {
    std::vector<std::uint64_t> coeffs(f->n, 0);
    for (unsigned i = 0; i < f->n; ++i) {
        coeffs[i] = index % f->p;
        index /= f->p;
    }
    return FqElem(f, std::move(coeffs));
}

std::uint64_t element_index(const FqElem& x) {
    std::uint64_t idx = 0;
    const auto& c = x.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) idx = idx * x.field()->p + c[i];
    return idx;
}

std::vector<std::uint64_t> parse_poly_text(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw Error("bad coefficient: '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw Error("empty polynomial text");
    return out;
}

std::string poly_text(const std::vector<std::uint64_t>& coeffs) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coeffs[i]);
    }
    return out;
}

}  // namespace asorder
