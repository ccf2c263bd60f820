#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "axkatz/counting.hpp"
#include "axkatz/hodge.hpp"
#include "axkatz/variety.hpp"
#include "axkatz/zeta.hpp"

namespace axkatz {

/// One congruence check at tower level s. The strong form uses modulus
/// (q^s)^kappa, the base-change-invariant reading; the weak form is the
/// literal per-field modulus q^kappa and is reported for transparency.
struct LevelCheck {
    unsigned s = 0;
    mpz_class modulus;
    mpz_class remainder;
    bool pass = false;
    mpz_class weak_modulus;
    mpz_class weak_remainder;
    bool weak_pass = false;
};

struct AxKatzSection {
    unsigned kappa = 0;
    bool vacuous_empty_system = false;
    std::vector<LevelCheck> levels;
    bool pass = false;
};

struct FanoSection {
    std::vector<LevelCheck> levels; // N_s = 1 mod q^s
    bool pass = false;
};

struct RingMembershipLevel {
    unsigned s = 0;
    mpz_class coefficient;
    std::optional<unsigned long> valuation; // v_p; absent means +infinity
    unsigned long required = 0;             // d * kappa * s
    bool pass = false;
};

struct RingMembershipSection {
    unsigned kappa = 0;
    std::vector<RingMembershipLevel> levels;
    bool pass = false;
    std::optional<unsigned> kappa_max; // largest kappa <= cap passing, if scanned
};

struct CoefficientCheck {
    unsigned long j = 0;
    mpz_class coefficient;
    std::optional<unsigned long> valuation;
    unsigned long required = 0;
    bool pass = false;
};

struct EigenvalueSection {
    unsigned kappa = 0;
    std::vector<CoefficientCheck> coefficients;
    bool pass = false;
    std::optional<unsigned> kappa_max;
};

struct NewtonHodgeSection {
    NewtonPolygon newton;
    NewtonPolygon hodge;
    bool endpoints_match = false;
    bool newton_above = false;
    bool equality = false; // polygons coincide
    bool pass = false;
};

struct SlopesPropositionSection {
    unsigned kappa_hodge = 0;
    bool no_primitive = false;
    bool hypothesis_holds = false; // kappa_hodge >= 1 (marker counts)
    unsigned applied_kappa = 0;    // min(kappa_hodge, m)
    bool eigenvalue_pass = false;
    bool ring_pass = false;
    bool pass = false;
    bool skipped = false; // kappa_hodge = 0: hypothesis fails, vacuous
};

struct KappaAgreementSection {
    unsigned kappa_ax_katz = 0;
    std::optional<unsigned> kappa_hodge; // absent when primitive cohomology vanishes
    std::optional<unsigned> kappa_divisibility_max;
    bool agree = false;
    bool skipped = false;
    std::string note;
};

struct ProvenanceSection {
    unsigned S_used = 0;
    std::uint64_t budget = 0;
    std::vector<std::string> fields; // defining data per level
};

/// Everything the pipeline established about one variety input.
struct VerificationReport {
    VarietyInput input;
    ProvenanceSection provenance;

    std::vector<mpz_class> counts;
    std::vector<mpz_class> complement_counts;
    std::vector<mpz_class> projective_sizes;

    AxKatzSection ax_katz;
    std::optional<FanoSection> fano;
    std::optional<HodgeDiamond> hodge;
    std::optional<unsigned> hodge_kappa; // absent => marker (no primitive cohomology)
    unsigned hodge_marker_value = 0;     // m + 1 when marker applies
    std::optional<std::vector<mpz_class>> middle_factor;
    std::optional<bool> weil_symmetric;
    std::optional<NewtonHodgeSection> newton_hodge;
    std::optional<RingMembershipSection> ring_membership;
    std::optional<EigenvalueSection> eigenvalue_divisibility;
    std::optional<SlopesPropositionSection> slopes_proposition;
    std::optional<KappaAgreementSection> kappa_agreement;

    std::vector<std::string> notes;
    bool budget_partial = false;
    bool overall_pass = false;
};

struct ReportOptions {
    CountOptions counting;
    /// Headline kappa for the divisibility sections instead of the Ax-Katz
    /// value (the scans still report the maximal passing kappa).
    std::optional<unsigned> kappa_override;
    /// Test hook: perturbs N_1 by +1 before any check runs.
    bool corrupt_counts = false;
};

// ---------------------------------------------------------------------------
// individual checks

AxKatzSection verify_ax_katz(const PolynomialSystem& system, std::uint64_t p, unsigned d,
                             unsigned S, const CountOptions& options = {});
AxKatzSection ax_katz_from_counts(const PolynomialSystem& system,
                                  const PointCountSequence& counts);

FanoSection verify_fano_congruence(const PointCountSequence& counts);

/// Ring-membership check of the complement series: v_p(c_s) >= d*kappa*s.
RingMembershipSection verify_zeta_ring_membership(const ZetaSeries& complement_series,
                                                  unsigned kappa);

EigenvalueSection verify_eigenvalue_divisibility(const std::vector<mpz_class>& middle_factor,
                                                 std::uint64_t p, unsigned d, unsigned kappa);

SlopesPropositionSection verify_slopes_proposition(const PolynomialSystem& system,
                                                   const CompleteIntersectionSpec& spec,
                                                   std::uint64_t p, unsigned d, unsigned S,
                                                   const CountOptions& options = {});

NewtonHodgeSection verify_newton_above_hodge(const std::vector<mpz_class>& middle_factor,
                                             const HodgeDiamond& diamond, std::uint64_t p,
                                             unsigned d);

/// Runs every applicable check and emits the kappa comparison.
VerificationReport full_report(const VarietyInput& input, const ReportOptions& options = {});

} // namespace axkatz
