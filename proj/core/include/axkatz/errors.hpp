#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace axkatz {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidPrime : public Error {
public:
    explicit InvalidPrime(std::uint64_t p)
        : Error("not a prime: " + std::to_string(p)), p(p) {}
    std::uint64_t p;
};

class InvalidDegree : public Error {
public:
    explicit InvalidDegree(long m)
        : Error("invalid extension degree: " + std::to_string(m)), m(m) {}
    long m;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero field element") {}
};

class FieldMismatch : public Error {
public:
    explicit FieldMismatch(const std::string& what) : Error(what) {}
};

/// Syntax error in the polynomial grammar; `position` is a byte offset.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& msg)
        : Error("parse error at position " + std::to_string(position) + ": " + msg),
          position(position) {}
    std::size_t position;
};

class UnknownVariable : public ParseError {
public:
    UnknownVariable(std::size_t position, unsigned index, unsigned nvars)
        : ParseError(position, "variable x" + std::to_string(index) +
                                   " out of range (have x0..x" + std::to_string(nvars - 1) + ")"),
          index(index) {}
    unsigned index;
};

class ZeroPolynomial : public Error {
public:
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& cost, std::uint64_t budget, unsigned feasible_levels)
        : Error("enumeration budget exceeded: estimated cost " + cost + " kernel evaluations, budget " +
                std::to_string(budget) +
                (feasible_levels > 0 ? ", largest feasible S = " + std::to_string(feasible_levels)
                                     : ", no level feasible")),
          estimated_cost(cost), budget(budget), feasible_levels(feasible_levels) {}
    std::string estimated_cost;
    std::uint64_t budget;
    unsigned feasible_levels;
};

class InsufficientCounts : public Error {
public:
    explicit InsufficientCounts(unsigned min_levels)
        : Error("not enough zeta coefficients: need S >= " + std::to_string(min_levels)),
          min_levels(min_levels) {}
    unsigned min_levels;
};

class DegreeBoundsTooSmall : public Error {
public:
    explicit DegreeBoundsTooSmall(const std::string& what) : Error(what) {}
};

class IntegralityViolation : public Error {
public:
    explicit IntegralityViolation(const std::string& what) : Error(what) {}
};

class NotCompleteIntersectionLike : public Error {
public:
    explicit NotCompleteIntersectionLike(const std::string& what) : Error(what) {}
};

class DegreeMismatch : public Error {
public:
    explicit DegreeMismatch(const std::string& what) : Error(what) {}
};

class InvalidSpec : public Error {
public:
    explicit InvalidSpec(const std::string& what) : Error(what) {}
};

class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what) : Error(what) {}
};

/// Guard for conditions that indicate a bug rather than bad input.
class InternalInconsistency : public Error {
public:
    explicit InternalInconsistency(const std::string& what) : Error(what) {}
};

} // namespace axkatz
