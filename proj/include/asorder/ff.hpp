#pragma once

// Exact arithmetic in F_p and in F_q = F_p[y]/(g(y)) for a monic irreducible
// g of degree n. Elements are canonical coefficient vectors with residues in
// [0, p); every operation is a pure function of its inputs.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "asorder/errors.hpp"
#include "asorder/integer_math.hpp"

namespace asorder {

struct Field;
using FieldPtr = std::shared_ptr<const Field>;

struct Field {
    std::uint64_t p = 0;
    unsigned n = 0;
    BigInt q;                             // p^n, exact
    std::vector<std::uint64_t> modulus;   // g, length n+1, modulus[n] == 1

    /// Validates p (deterministic primality test) and g (monic, irreducible,
    /// degree n). When g is omitted the lexicographically smallest monic
    /// irreducible is chosen, comparing coefficient tuples constant term
    /// first, so identical (p, n) always yield the same field.
    static FieldPtr make(std::uint64_t p, unsigned n,
                         std::optional<std::vector<std::uint64_t>> g = std::nullopt);
};

bool same_params(const Field& a, const Field& b);

class FqElem {
  public:
    FqElem() = default;
    /// Coefficients are reduced mod p; shorter vectors are zero-padded to
    /// length n, longer ones rejected.
    FqElem(FieldPtr f, std::vector<std::uint64_t> coeffs);

    static FqElem zero(const FieldPtr& f);
    static FqElem one(const FieldPtr& f);
    static FqElem from_residue(const FieldPtr& f, std::uint64_t v);
    static FqElem generator(const FieldPtr& f);  // the coset of y

    const FieldPtr& field() const { return field_; }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    /// True when the element lies in the prime subfield F_p.
    bool in_prime_subfield() const;
    /// Constant coefficient; meaningful for prime-subfield elements.
    std::uint64_t constant() const { return coeffs_.empty() ? 0 : coeffs_[0]; }

    FqElem operator+(const FqElem& rhs) const;
    FqElem operator-(const FqElem& rhs) const;
    FqElem operator*(const FqElem& rhs) const;
    FqElem operator-() const;
    FqElem scaled(std::uint64_t c) const;  // multiply by a residue

    friend bool operator==(const FqElem& a, const FqElem& b);
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

  private:
    FieldPtr field_;
    std::vector<std::uint64_t> coeffs_;
};

FqElem inv(const FqElem& x);  // throws DivisionByZero on 0
FqElem pow(const FqElem& x, const BigInt& e);
FqElem pow(const FqElem& x, std::uint64_t e);

/// x^(p^j); Frobenius has order n, so only j mod n matters.
FqElem frobenius(const FqElem& x, unsigned j);

/// Tr(x) = sum of x^(p^i) for 0 <= i < n. The sum always lands in F_p; a
/// nonzero higher coefficient signals an arithmetic bug and aborts.
std::uint64_t trace_to_fp(const FqElem& x);

// Enumeration of F_q by index: index digits in base p are the coefficients,
// constant term least significant. Requires q to fit in 64 bits.
FqElem element_at(const FieldPtr& f, std::uint64_t index);
std::uint64_t element_index(const FqElem& x);

// Polynomial text format: comma-separated coefficients, constant term first
// ("1,0,1" is y^2 + 1). Used for moduli and for F_q elements.
std::vector<std::uint64_t> parse_poly_text(const std::string& text);
std::string poly_text(const std::vector<std::uint64_t>& coeffs);

}  // namespace asorder
