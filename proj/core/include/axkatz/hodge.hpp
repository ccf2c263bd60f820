#pragma once

#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "axkatz/errors.hpp"
#include "axkatz/zeta.hpp"

namespace axkatz {

/// A smooth complete intersection in P^n cut by r hypersurfaces of degrees
/// d1 >= d2 >= ... >= dr, of dimension m = n - r.
struct CompleteIntersectionSpec {
    unsigned n;
    std::vector<unsigned> degrees; // sorted descending on construction

    CompleteIntersectionSpec(unsigned n, std::vector<unsigned> degrees);

    unsigned r() const { return static_cast<unsigned>(degrees.size()); }
    unsigned m() const { return n - r(); }
};

/// Hodge diamond of a smooth complete intersection of dimension m. Off the
/// middle row h^{p,q} = [p == q]; the middle row splits into primitive parts
/// plus the Lefschetz class at 2p = m.
struct HodgeDiamond {
    unsigned m = 0;
    std::vector<std::vector<mpz_class>> h; // (m+1) x (m+1)
    std::vector<mpz_class> prim;           // h^{p, m-p}_prim for p = 0..m

    mpz_class b_prim() const;
    bool has_primitive() const;
};

/// chi(X, Omega^p_X(k)) by exact recursion:
///   chi(P^n, O(k)) = prod_{i=1..n}(k+i)/n!  (valid for every integer k),
///   Euler sequence for Omega^p on P^n,
///   Koszul resolution to restrict sheaves to X,
///   conormal filtration solved for Omega^p_X with memoization.
class HodgeCalculator {
public:
    explicit HodgeCalculator(CompleteIntersectionSpec spec);

    mpz_class chi_twisted(unsigned p, long k);
    HodgeDiamond diamond();
    const CompleteIntersectionSpec& spec() const { return spec_; }

private:
    mpz_class chi_o_pn(long k) const;
    mpz_class chi_omega_pn(unsigned p, long k);
    mpz_class chi_restricted_omega_pn(unsigned p, long k);

    CompleteIntersectionSpec spec_;
    std::vector<std::pair<long, mpz_class>> koszul_;            // (twist offset, signed count)
    std::vector<std::vector<std::pair<long, mpz_class>>> wedge_; // wedge_[j]: offsets of size-j subsets
    std::map<std::pair<unsigned, long>, mpz_class> memo_x_;
    std::map<std::pair<unsigned, long>, mpz_class> memo_pn_;
};

/// chi(P^n, O(k)) = binom(n+k, n) evaluated as a polynomial in k.
mpz_class chi_projective_o(unsigned n, long k);

HodgeDiamond hodge_numbers(const CompleteIntersectionSpec& spec);

struct HodgeType {
    unsigned kappa = 0;
    bool no_primitive = false; // all primitive numbers vanish; kappa = m + 1
};

/// Smallest p with a nonzero primitive middle Hodge number, or the m+1
/// marker when primitive cohomology vanishes entirely.
HodgeType hodge_type(const HodgeDiamond& diamond);

/// floor((n - d2 - ... - dr)/d1), clamped below at 0.
unsigned ax_katz_kappa(unsigned n, const std::vector<unsigned>& degrees_desc);

/// Polygon with slope i of multiplicity h^{i, m-i} (primitive variant drops
/// the Lefschetz class at 2i = m).
NewtonPolygon hodge_polygon(const HodgeDiamond& diamond, bool use_primitive);

/// Hodge table of a variety that need not satisfy the complete-intersection
/// diamond constraints.
struct HodgeTable {
    unsigned dim = 0;
    std::vector<std::vector<mpz_class>> h;
};

/// Hodge numbers of the blow-up of P^n along the complete intersection X of
/// kappa degree-d hypersurfaces: h^{a,b}(Y) = h^{a,b}(P^n) +
/// sum_{i=1..kappa-1} h^{a-i,b-i}(X).
HodgeTable blowup_hodge(unsigned kappa, unsigned d, unsigned n);

/// Verdict of the incidence-hypersurface vanishing test for the family
/// Y in P^{kappa-1} x P^n of bidegree (1, d): off-diagonal Hodge classes of Y
/// start at level >= kappa exactly when kappa*d <= n. Degenerate when X
/// carries no off-diagonal Hodge classes at all (then the level is undefined
/// and the case is reported as vacuous).
struct IncidenceVanishingReport {
    unsigned kappa = 0, d = 0, n = 0;
    bool fano_range = false;                      // kappa*d <= n
    std::optional<unsigned> min_offdiag_level;    // smallest p with h^{q,p}(Y) != 0, q != p
    bool degenerate = false;
    bool pass = false;
};

IncidenceVanishingReport check_incidence_vanishing(unsigned kappa, unsigned d, unsigned n);

/// Hodge table of the incidence hypersurface Y itself (dimension n+kappa-2):
/// the projective-bundle part plus X shifted by kappa-1.
HodgeTable incidence_hodge(unsigned kappa, unsigned d, unsigned n);

} // namespace axkatz
