#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "axkatz/errors.hpp"
#include "axkatz/field.hpp"

namespace axkatz {

/// Multivariate polynomial with integer coefficients over projective
/// coordinates x0..x{nvars-1}, kept in a unique normal form: terms sorted by
/// graded-lexicographic exponent order, no duplicate exponent vectors, no
/// zero coefficients.
class MultiPoly {
public:
    struct Term {
        mpz_class coeff;
        std::vector<unsigned> exps;
    };

    explicit MultiPoly(unsigned nvars) : nvars_(nvars) {}
    static MultiPoly constant(unsigned nvars, const mpz_class& value);
    static MultiPoly variable(unsigned nvars, unsigned index);
    static MultiPoly from_terms(unsigned nvars, std::vector<Term> terms);

    unsigned nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MultiPoly add(const MultiPoly& other) const;
    MultiPoly sub(const MultiPoly& other) const;
    MultiPoly neg() const;
    MultiPoly mul(const MultiPoly& other) const;
    MultiPoly pow(unsigned e) const;

    /// Common total degree when homogeneous. Throws ZeroPolynomial on zero.
    std::optional<unsigned> homogeneous_degree() const;
    unsigned max_total_degree() const;

    std::string render() const;

    bool operator==(const MultiPoly& other) const {
        return nvars_ == other.nvars_ && terms_ == other.terms_;
    }
    bool operator!=(const MultiPoly& other) const { return !(*this == other); }

private:
    unsigned nvars_;
    std::vector<Term> terms_;
};

inline bool operator==(const MultiPoly::Term& a, const MultiPoly::Term& b) {
    return a.coeff == b.coeff && a.exps == b.exps;
}

/// Recursive-descent parser for the polynomial grammar: integer literals,
/// variables x0..x{n-1}, operators + - * ^ with ^ binding tighter than unary
/// minus, parentheses. No implicit multiplication. Exponents are non-negative
/// integer literals and apply only to atoms (literals, variables,
/// parenthesized subexpressions).
MultiPoly parse_poly(const std::string& text, unsigned nvars);

/// Homogeneous polynomials cutting out a projective subscheme X in P^n.
class PolynomialSystem {
public:
    PolynomialSystem(unsigned n, std::vector<MultiPoly> polys);

    unsigned n() const { return n_; }
    unsigned nvars() const { return n_ + 1; }
    const std::vector<MultiPoly>& polys() const { return polys_; }
    /// Degrees d1 >= d2 >= ... >= dr.
    const std::vector<unsigned>& degrees() const { return degrees_; }
    bool empty() const { return polys_.empty(); }

private:
    unsigned n_;
    std::vector<MultiPoly> polys_;
    std::vector<unsigned> degrees_;
};

/// One polynomial reduced into a field and ready for exact evaluation at
/// points given as coordinate vectors of field elements. Pure and shareable.
class EvaluationKernel {
public:
    EvaluationKernel(const MultiPoly& poly, FieldPtr field);

    FieldElement evaluate(const std::vector<FieldElement>& point) const;
    /// True when every coefficient vanished in the field.
    bool is_identically_zero() const { return terms_.empty(); }
    unsigned nvars() const { return nvars_; }
    const FieldPtr& field() const { return field_; }

    struct Term {
        FieldElement coeff;
        std::vector<unsigned> exps;
    };
    const std::vector<Term>& terms() const { return terms_; }

private:
    FieldPtr field_;
    unsigned nvars_;
    unsigned max_degree_ = 0;
    std::vector<Term> terms_;
};

/// reduce_and_compile: coefficients reduced into the field, vanished terms
/// dropped.
EvaluationKernel reduce_and_compile(const MultiPoly& poly, FieldPtr field);

} // namespace axkatz
