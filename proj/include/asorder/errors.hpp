#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace asorder {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error {
    explicit NotPrime(std::uint64_t p) : Error("not a prime: " + std::to_string(p)) {}
};

struct ReducibleModulus : Error {
    ReducibleModulus() : Error("modulus polynomial is reducible") {}
    explicit ReducibleModulus(const std::string& what) : Error(what) {}
};

struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& what) : Error(what) {}
};

struct FieldMismatch : Error {
    FieldMismatch() : Error("operands belong to different fields") {}
};

struct ContextMismatch : Error {
    explicit ContextMismatch(const std::string& what) : Error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

// x^p - x - a has a root in the base field, so no degree-p extension exists.
struct Reducible : Error {
    explicit Reducible(const std::string& what) : Error(what) {}
};

struct RequiresAEqualsOne : Error {
    RequiresAEqualsOne() : Error("operation requires the extension with a = 1") {}
};

struct RequiresNAtLeast2 : Error {
    RequiresNAtLeast2() : Error("closed form is defined for extension degree n >= 2") {}
};

struct InvalidBudget : Error {
    explicit InvalidBudget(const std::string& what) : Error(what) {}
};

struct InvalidLambda : Error {
    explicit InvalidLambda(const std::string& what) : Error(what) {}
};

struct TooLarge : Error {
    boost::multiprecision::cpp_int count;
    explicit TooLarge(boost::multiprecision::cpp_int c)
        : Error("requested enumeration has " + c.str() + " members, over the guard"),
          count(std::move(c)) {}
};

struct FactorizationBudgetExceeded : Error {
    explicit FactorizationBudgetExceeded(const std::string& what) : Error(what) {}
};

}  // namespace asorder
