#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "axkatz/counting.hpp"
#include "axkatz/errors.hpp"

namespace axkatz {

/// Power-series expansion of a zeta function through order S, with
/// coefficients c_0 = 1, c_1, ..., c_S as exact rationals. Coefficients from
/// scheme point counts are non-negative integers (they count effective
/// zero-cycles).
struct ZetaSeries {
    std::uint64_t p = 0;
    unsigned d = 1;
    std::vector<mpq_class> coeffs; // c_0 .. c_S
    bool from_scheme = false;

    unsigned order() const { return static_cast<unsigned>(coeffs.size()) - 1; }
    mpz_class q() const;
};

/// Series with logarithmic derivative sum N_s t^{s-1}, via the recurrence
/// s c_s = sum_{j=1..s} N_j c_{s-j}. With use_complement the counts of
/// U = P^n \ X are used instead of X's.
ZetaSeries series_from_counts(const PointCountSequence& counts, bool use_complement);

/// Integer-coefficient numerator/denominator with constant term 1 and no
/// common factor.
struct RationalZeta {
    std::vector<mpz_class> numerator;   // lowest degree first
    std::vector<mpz_class> denominator; // lowest degree first
};

/// Solves Q Z = P mod t^{S+1} with deg P <= deg_num, deg Q <= deg_den,
/// Q(0) = 1, by exact elimination; clears common factors and verifies the fit
/// on all S coefficients.
RationalZeta pade_reconstruct(const ZetaSeries& series, unsigned deg_num, unsigned deg_den);

/// The primitive middle factor P_m of a smooth complete intersection of
/// dimension m: Z(t) * prod_{j=0..m} (1 - q^j t) must truncate to a degree
/// b_prim polynomial (after series inversion when m is even).
std::vector<mpz_class> extract_middle_factor(const ZetaSeries& series, unsigned m,
                                             unsigned b_prim);

/// Lower convex hull of (j, v_q(c_j)) with v_q = v_p / d.
struct NewtonPolygon {
    std::vector<std::pair<unsigned long, mpq_class>> vertices; // (abscissa, ordinate)
    std::vector<std::pair<mpq_class, unsigned long>> slopes;   // non-decreasing, with multiplicity

    unsigned long width() const { return vertices.empty() ? 0 : vertices.back().first; }
    /// Ordinate of the piecewise-linear hull at abscissa x (must lie in range).
    mpq_class ordinate_at(const mpq_class& x) const;
};

NewtonPolygon newton_polygon(const std::vector<mpz_class>& poly, std::uint64_t p, unsigned d);

/// True iff v_p(c_j) >= d * kappa * j for all j >= 1: all reciprocal roots of
/// the factor are divisible by q^kappa as algebraic integers.
bool divisibility_check(const std::vector<mpz_class>& poly, std::uint64_t p, unsigned d,
                        unsigned kappa);

/// Functional-equation symmetry of a middle factor for a variety of dimension
/// m over F_q: t^b q^{mb/2} P(1/(q^m t)) = +-P(t), checked in exact integer
/// arithmetic (squared comparison when m*b is odd).
bool weil_symmetry_check(const std::vector<mpz_class>& pm, std::uint64_t p, unsigned d,
                         unsigned m);

/// Expands numerator/denominator as a power series through order S.
std::vector<mpq_class> expand_series(const RationalZeta& zeta, unsigned S);

/// Recovers N_s from the log derivative of a reconstructed zeta: N_s =
/// p_s(denominator) - p_s(numerator) where p_s are power sums of reciprocal
/// roots.
std::vector<mpz_class> point_counts_from_zeta(const RationalZeta& zeta, unsigned S);

// small exact-polynomial helpers shared with other modules
std::vector<mpz_class> poly_mul_z(const std::vector<mpz_class>& a,
                                  const std::vector<mpz_class>& b);
unsigned poly_degree_z(const std::vector<mpz_class>& a);

} // namespace axkatz
