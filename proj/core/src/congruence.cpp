#include "axkatz/congruence.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "axkatz/integers.hpp"

namespace axkatz {

namespace {

mpz_class nonneg_mod(const mpz_class& x, const mpz_class& modulus) {
    if (modulus == 1) return 0;
    mpz_class r = x % modulus;
    if (r < 0) r += modulus;
    return r;
}

} // namespace

AxKatzSection ax_katz_from_counts(const PolynomialSystem& system,
                                  const PointCountSequence& counts) {
    AxKatzSection section;
    if (system.empty()) {
        section.vacuous_empty_system = true;
        section.kappa = 0;
        section.pass = true;
        return section;
    }
    section.kappa = ax_katz_kappa(system.n(), system.degrees());
    section.pass = true;
    const mpz_class q = upow(counts.p, counts.d);
    for (unsigned s = 1; s <= counts.S; ++s) {
        LevelCheck level;
        level.s = s;
        level.modulus = mpow(upow(counts.p, static_cast<unsigned long>(counts.d) * s),
                             section.kappa);
        level.remainder = nonneg_mod(counts.complement_counts[s - 1], level.modulus);
        level.pass = level.remainder == 0;
        level.weak_modulus = mpow(q, section.kappa);
        level.weak_remainder = nonneg_mod(counts.complement_counts[s - 1], level.weak_modulus);
        level.weak_pass = level.weak_remainder == 0;
        section.pass = section.pass && level.pass;
        section.levels.push_back(std::move(level));
    }
    return section;
}

AxKatzSection verify_ax_katz(const PolynomialSystem& system, std::uint64_t p, unsigned d,
                             unsigned S, const CountOptions& options) {
    return ax_katz_from_counts(system, count_tower(system, p, d, S, options));
}

FanoSection verify_fano_congruence(const PointCountSequence& counts) {
    FanoSection section;
    section.pass = true;
    const mpz_class q = upow(counts.p, counts.d);
    for (unsigned s = 1; s <= counts.S; ++s) {
        LevelCheck level;
        level.s = s;
        level.modulus = upow(counts.p, static_cast<unsigned long>(counts.d) * s);
        level.remainder = nonneg_mod(counts.counts[s - 1] - 1, level.modulus);
        level.pass = level.remainder == 0;
        level.weak_modulus = q;
        level.weak_remainder = nonneg_mod(counts.counts[s - 1] - 1, q);
        level.weak_pass = level.weak_remainder == 0;
        section.pass = section.pass && level.pass;
        section.levels.push_back(std::move(level));
    }
    return section;
}

RingMembershipSection verify_zeta_ring_membership(const ZetaSeries& complement_series,
                                                  unsigned kappa) {
    RingMembershipSection section;
    section.kappa = kappa;
    section.pass = true;
    for (unsigned s = 1; s <= complement_series.order(); ++s) {
        const mpq_class& c = complement_series.coeffs[s];
        if (!is_integral(c))
            throw IntegralityViolation("series coefficient c_" + std::to_string(s) +
                                       " is not an integer");
        RingMembershipLevel level;
        level.s = s;
        level.coefficient = mpz_class(c.get_num());
        level.valuation = p_adic_valuation(level.coefficient, complement_series.p);
        level.required = static_cast<unsigned long>(complement_series.d) * kappa * s;
        level.pass = !level.valuation || *level.valuation >= level.required;
        section.pass = section.pass && level.pass;
        section.levels.push_back(std::move(level));
    }
    return section;
}

EigenvalueSection verify_eigenvalue_divisibility(const std::vector<mpz_class>& middle_factor,
                                                 std::uint64_t p, unsigned d, unsigned kappa) {
    if (middle_factor.empty() || middle_factor[0] != 1)
        throw InvalidInput("middle factor must have constant term 1");
    EigenvalueSection section;
    section.kappa = kappa;
    section.pass = true;
    for (std::size_t j = 1; j < middle_factor.size(); ++j) {
        CoefficientCheck check;
        check.j = static_cast<unsigned long>(j);
        check.coefficient = middle_factor[j];
        check.valuation = p_adic_valuation(middle_factor[j], p);
        check.required = static_cast<unsigned long>(d) * kappa * j;
        check.pass = !check.valuation || *check.valuation >= check.required;
        section.pass = section.pass && check.pass;
        section.coefficients.push_back(std::move(check));
    }
    return section;
}

NewtonHodgeSection verify_newton_above_hodge(const std::vector<mpz_class>& middle_factor,
                                             const HodgeDiamond& diamond, std::uint64_t p,
                                             unsigned d) {
    NewtonHodgeSection section;
    section.hodge = hodge_polygon(diamond, true);

    const unsigned deg = middle_factor.size() <= 1 ? 0 : poly_degree_z(middle_factor);
    mpz_class b_prim = diamond.b_prim();
    if (b_prim != static_cast<unsigned long>(deg))
        throw DegreeMismatch("middle factor degree " + std::to_string(deg) +
                             " does not match primitive Betti number " + b_prim.get_str());
    if (deg == 0) {
        section.endpoints_match = true;
        section.newton_above = true;
        section.equality = true;
        section.pass = true;
        return section;
    }

    section.newton = newton_polygon(middle_factor, p, d);
    section.endpoints_match =
        section.newton.vertices.front() == section.hodge.vertices.front() &&
        section.newton.vertices.back() == section.hodge.vertices.back();

    section.newton_above = true;
    for (const auto& v : section.newton.vertices) {
        if (v.second < section.hodge.ordinate_at(mpq_class(v.first))) {
            section.newton_above = false;
            break;
        }
    }
    for (const auto& v : section.hodge.vertices) {
        if (section.newton.ordinate_at(mpq_class(v.first)) < v.second) {
            section.newton_above = false;
            break;
        }
    }
    section.equality = section.newton.slopes == section.hodge.slopes;
    section.pass = section.endpoints_match && section.newton_above;
    return section;
}

namespace {

unsigned scan_kappa_max(unsigned cap, const std::function<bool(unsigned)>& passes) {
    unsigned best = 0;
    for (unsigned k = 0; k <= cap; ++k) {
        if (passes(k))
            best = k;
        else
            break; // divisibility requirements are monotone in kappa
    }
    return best;
}

} // namespace

SlopesPropositionSection verify_slopes_proposition(const PolynomialSystem& system,
                                                   const CompleteIntersectionSpec& spec,
                                                   std::uint64_t p, unsigned d, unsigned S,
                                                   const CountOptions& options) {
    SlopesPropositionSection section;
    HodgeDiamond diamond = hodge_numbers(spec);
    HodgeType ht = hodge_type(diamond);
    section.kappa_hodge = ht.kappa;
    section.no_primitive = ht.no_primitive;
    section.hypothesis_holds = ht.kappa >= 1;
    if (!section.hypothesis_holds) {
        section.skipped = true;
        section.pass = true;
        return section;
    }

    const unsigned m = spec.m();
    section.applied_kappa = std::min(ht.kappa, m);

    mpz_class b_prim = diamond.b_prim();
    if (!b_prim.fits_uint_p()) throw InvalidSpec("primitive Betti number too large");
    const unsigned b = static_cast<unsigned>(b_prim.get_ui());
    if (S < b) throw InsufficientCounts(b);

    PointCountSequence counts = count_tower(system, p, d, S, options);
    ZetaSeries x_series = series_from_counts(counts, false);
    ZetaSeries u_series = series_from_counts(counts, true);
    std::vector<mpz_class> middle = extract_middle_factor(x_series, m, b);

    section.eigenvalue_pass =
        verify_eigenvalue_divisibility(middle, p, d, section.applied_kappa).pass;
    section.ring_pass = verify_zeta_ring_membership(u_series, section.applied_kappa).pass;
    section.pass = section.eigenvalue_pass && section.ring_pass;
    return section;
}

VerificationReport full_report(const VarietyInput& input, const ReportOptions& options) {
    VerificationReport report;
    report.input = input;

    PolynomialSystem system = system_from_input(input);
    CountOptions copts = options.counting;
    if (input.budget) copts.budget = *input.budget;
    report.provenance.budget = copts.budget;

    unsigned S = input.S;
    PointCountSequence counts;
    try {
        counts = count_tower(system, input.p, input.d, S, copts);
    } catch (const BudgetExceeded& e) {
        if (e.feasible_levels < 1) throw;
        S = e.feasible_levels;
        counts = count_tower(system, input.p, input.d, S, copts);
        report.budget_partial = true;
        report.notes.push_back("budget allows only S = " + std::to_string(S) +
                               " of requested " + std::to_string(input.S));
    }
    if (options.corrupt_counts) {
        counts.counts[0] += 1;
        counts.complement_counts[0] -= 1;
        report.notes.push_back("test hook: N_1 corrupted by +1");
    }

    report.provenance.S_used = S;
    for (unsigned s = 1; s <= S; ++s) {
        FieldPtr f = build_field(input.p, input.d * s, copts.use_tables);
        std::ostringstream os;
        os << "s=" << s << ": F_{" << input.p << "^" << input.d * s << "}, defining "
           << f->defining_poly_string();
        report.provenance.fields.push_back(os.str());
        report.projective_sizes.push_back(projective_space_size(
            input.n, mpz_class(static_cast<unsigned long>(f->q()))));
    }
    report.counts = counts.counts;
    report.complement_counts = counts.complement_counts;

    bool ok = true;

    report.ax_katz = ax_katz_from_counts(system, counts);
    ok = ok && report.ax_katz.pass;

    if (input.fano.value_or(false)) {
        report.fano = verify_fano_congruence(counts);
        ok = ok && report.fano->pass;
    }

    // Hodge-side checks run only for asserted smooth complete intersections.
    const bool hodge_applicable = input.smooth.value_or(false) &&
                                  input.complete_intersection.value_or(false) &&
                                  (input.hodge_degrees || !system.empty());
    if (!hodge_applicable) {
        if (!input.smooth.value_or(false))
            report.notes.push_back("Hodge-side checks skipped: smoothness not asserted");
        report.overall_pass = ok;
        return report;
    }

    const unsigned hodge_n = input.hodge_n.value_or(input.n);
    const std::vector<unsigned> hodge_degrees =
        input.hodge_degrees ? *input.hodge_degrees : system.degrees();
    CompleteIntersectionSpec spec(hodge_n, hodge_degrees);
    const unsigned m = spec.m();

    HodgeDiamond diamond = hodge_numbers(spec);
    report.hodge = diamond;
    HodgeType ht = hodge_type(diamond);
    if (ht.no_primitive) {
        report.hodge_marker_value = ht.kappa;
        report.notes.push_back("no primitive cohomology; Hodge type marker m + 1 = " +
                               std::to_string(ht.kappa));
    } else {
        report.hodge_kappa = ht.kappa;
    }

    const unsigned kappa_ax = report.ax_katz.vacuous_empty_system ? 0 : report.ax_katz.kappa;
    const unsigned kappa_headline = options.kappa_override.value_or(kappa_ax);
    const unsigned kappa_cap = m + 1;
    if (options.kappa_override)
        report.notes.push_back("kappa override: divisibility sections checked at kappa = " +
                               std::to_string(kappa_headline));

    // Everything from here on consumes zeta series; inconsistent (corrupted)
    // counts surface as IntegralityViolation and fail the report instead of
    // aborting it.
    try {
    ZetaSeries u_series = series_from_counts(counts, true);
    {
        RingMembershipSection ring = verify_zeta_ring_membership(u_series, kappa_headline);
        ring.kappa_max = scan_kappa_max(kappa_cap, [&](unsigned k) {
            return verify_zeta_ring_membership(u_series, k).pass;
        });
        ok = ok && ring.pass;
        report.ring_membership = std::move(ring);
    }

    // middle factor and everything downstream of it
    mpz_class b_prim_z = diamond.b_prim();
    bool middle_available = false;
    if (b_prim_z.fits_uint_p() && S >= b_prim_z.get_ui()) {
        const unsigned b_prim = static_cast<unsigned>(b_prim_z.get_ui());
        ZetaSeries x_series = series_from_counts(counts, false);
        try {
            std::vector<mpz_class> middle = extract_middle_factor(x_series, m, b_prim);
            middle_available = true;
            report.middle_factor = middle;
            report.weil_symmetric = weil_symmetry_check(middle, input.p, input.d, m);
            ok = ok && *report.weil_symmetric;

            EigenvalueSection eigen =
                verify_eigenvalue_divisibility(middle, input.p, input.d, kappa_headline);
            eigen.kappa_max = scan_kappa_max(kappa_cap, [&](unsigned k) {
                return verify_eigenvalue_divisibility(middle, input.p, input.d, k).pass;
            });
            ok = ok && eigen.pass;
            report.eigenvalue_divisibility = std::move(eigen);

            report.newton_hodge =
                verify_newton_above_hodge(middle, diamond, input.p, input.d);
            ok = ok && report.newton_hodge->pass;
        } catch (const NotCompleteIntersectionLike& e) {
            report.notes.push_back(std::string("middle-factor extraction failed: ") + e.what());
            ok = false;
        }
    } else {
        report.notes.push_back("S = " + std::to_string(S) +
                               " too small to reconstruct the middle factor (need S >= " +
                               b_prim_z.get_str() + ")");
    }

    // Hodge-type divisibility implication
    {
        SlopesPropositionSection slopes;
        slopes.kappa_hodge = ht.kappa;
        slopes.no_primitive = ht.no_primitive;
        slopes.hypothesis_holds = ht.kappa >= 1;
        if (!slopes.hypothesis_holds) {
            slopes.skipped = true;
            slopes.pass = true;
        } else if (middle_available) {
            slopes.applied_kappa = std::min(ht.kappa, m);
            slopes.eigenvalue_pass =
                verify_eigenvalue_divisibility(*report.middle_factor, input.p, input.d,
                                               slopes.applied_kappa)
                    .pass;
            slopes.ring_pass = verify_zeta_ring_membership(u_series, slopes.applied_kappa).pass;
            slopes.pass = slopes.eigenvalue_pass && slopes.ring_pass;
            ok = ok && slopes.pass;
        } else {
            slopes.skipped = true;
            slopes.pass = true;
            report.notes.push_back("divisibility implication skipped: middle factor unavailable");
        }
        report.slopes_proposition = std::move(slopes);
    }

    // kappa agreement
    {
        KappaAgreementSection agree;
        agree.kappa_ax_katz = kappa_ax;
        if (ht.no_primitive) {
            agree.skipped = true;
            agree.agree = true;
            agree.note = "primitive cohomology vanishes; comparison skipped";
        } else if (!middle_available) {
            agree.skipped = true;
            agree.agree = true;
            agree.kappa_hodge = ht.kappa;
            agree.note = "middle factor unavailable; comparison skipped";
        } else {
            agree.kappa_hodge = ht.kappa;
            agree.kappa_divisibility_max = report.eigenvalue_divisibility->kappa_max;
            agree.agree = (*agree.kappa_hodge == agree.kappa_ax_katz) &&
                          agree.kappa_divisibility_max &&
                          (*agree.kappa_divisibility_max == agree.kappa_ax_katz);
            ok = ok && agree.agree;
        }
        report.kappa_agreement = std::move(agree);
    }
    } catch (const IntegralityViolation& e) {
        report.notes.push_back(std::string("integrality violation: ") + e.what());
        ok = false;
    }

    report.overall_pass = ok;
    return report;
}

} // namespace axkatz
