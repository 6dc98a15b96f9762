#pragma once

// The degree-p extension K = F_q[x]/(x^p - x - a) for a in F_p*, its
// canonical coset theta, the translates theta + b, and the change-of-variable
// isomorphism onto the a = 1 extension. Reduction uses theta^p = theta + a.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "asorder/ff.hpp"

namespace asorder {

struct KContext;
using KContextPtr = std::shared_ptr<const KContext>;

struct KContext {
    FieldPtr base;
    std::uint64_t a = 0;        // nonzero residue in the prime subfield
    unsigned degree = 0;        // N = n * p, degree of K over F_p
    BigInt unit_group_order;    // p^N - 1

    /// Requires x^p - x - a irreducible over F_q (throws Reducible otherwise)
    /// and a a nonzero prime-subfield element.
    static KContextPtr make(FieldPtr base, const FqElem& a);
    static KContextPtr make(FieldPtr base, std::uint64_t a);
};

bool same_context(const KContext& x, const KContext& y);

enum class IrredMethod {
    degree_coprime,  // a in F_p*: irreducible iff p does not divide n
    trace,           // irreducible iff Tr(a) != 0
    exhaustive,      // no c in F_q with c^p - c = a (guarded to q <= 729)
};

struct IrredResult {
    bool irreducible = false;
    IrredMethod method = IrredMethod::trace;
};

/// Decides irreducibility of x^p - x - a over F_q, picking the cheapest
/// applicable method (degree test for prime-subfield a, trace otherwise).
IrredResult as_irreducible(const FieldPtr& base, const FqElem& a);
/// Same decision through a forced method; all methods agree.
IrredResult as_irreducible(const FieldPtr& base, const FqElem& a, IrredMethod method);

const char* irred_method_name(IrredMethod m);

class KElem {
  public:
    KElem() = default;
    KElem(KContextPtr ctx, std::vector<FqElem> coeffs);  // degree < p, low first

    static KElem zero(const KContextPtr& ctx);
    static KElem one(const KContextPtr& ctx);

    const KContextPtr& context() const { return ctx_; }
    const std::vector<FqElem>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_one() const;

    KElem operator+(const KElem& rhs) const;
    KElem operator-(const KElem& rhs) const;
    KElem operator*(const KElem& rhs) const;

    friend bool operator==(const KElem& a, const KElem& b);
    friend bool operator!=(const KElem& a, const KElem& b) { return !(a == b); }

    /// Packed coefficient indices, usable as a map key.
    std::vector<std::uint64_t> key() const;

  private:
    KContextPtr ctx_;
    std::vector<FqElem> coeffs_;
};

KElem theta(const KContextPtr& ctx);
KElem theta_plus(const KContextPtr& ctx, const FqElem& b);

KElem pow(const KElem& u, const BigInt& e);
KElem pow(const KElem& u, std::uint64_t e);
KElem inv(const KElem& u);

/// Checks theta^(p^j) == theta + j for 1 <= j <= jmax; the identity is
/// specific to a = 1 (throws RequiresAEqualsOne otherwise).
bool frobenius_identity_holds(const KContextPtr& ctx, unsigned jmax);

/// The a = 1 extension over the same base field.
KContextPtr unit_sibling(const KContextPtr& ctx);

/// Image of u under h(x) -> h(a x), a field isomorphism onto the target
/// a = 1 extension; multiplicative orders are preserved.
KElem tau_transport(const KElem& u, const KContextPtr& target);
KElem tau_transport(const KElem& u);

// Text format: semicolon-separated base-field coefficient strings, the
// theta^0 coefficient first.
std::string kelem_text(const KElem& u);
KElem parse_kelem(const KContextPtr& ctx, const std::string& text);

}  // namespace asorder
