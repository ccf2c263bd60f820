// Acceptance suite: one criterion per check, one pass/fail line each, exact
// tolerances throughout. Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "axkatz/catalog.hpp"
#include "axkatz/congruence.hpp"
#include "axkatz/integers.hpp"
#include "axkatz/report_json.hpp"

using namespace axkatz;
using Clock = std::chrono::steady_clock;

namespace {

struct Harness {
    int failures = 0;

    void run(int number, const std::string& title, const std::function<void()>& body) {
        auto start = Clock::now();
        std::string detail;
        bool ok = true;
        try {
            body();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << " ("
                  << ms.count() << " ms)\n";
        if (!ok) {
            std::cout << "      " << detail << "\n";
            ++failures;
        }
    }
};

struct CheckFailure : std::runtime_error {
    explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

void require(bool cond, const std::string& what) {
    if (!cond) throw CheckFailure(what);
}

PolynomialSystem make_system(unsigned n, std::initializer_list<const char*> eqs) {
    std::vector<MultiPoly> polys;
    for (const char* e : eqs) polys.push_back(parse_poly(e, n + 1));
    return PolynomialSystem(n, std::move(polys));
}

// independent affine brute force over a prime field, bypassing the library's
// enumeration and kernels entirely
long brute_force_count(const PolynomialSystem& system, long p) {
    unsigned nvars = system.n() + 1;
    std::vector<long> pt(nvars, 0);
    long zeros = 0;
    while (true) {
        bool vanishes = true;
        for (const auto& f : system.polys()) {
            long acc = 0;
            for (const auto& t : f.terms()) {
                long v = static_cast<long>(mpz_class(t.coeff % p).get_si());
                if (v < 0) v += p;
                for (unsigned i = 0; i < nvars; ++i)
                    for (unsigned e = 0; e < t.exps[i]; ++e) v = v * pt[i] % p;
                acc = (acc + v) % p;
            }
            if (acc != 0) {
                vanishes = false;
                break;
            }
        }
        if (vanishes) ++zeros;
        unsigned j = nvars;
        while (j > 0) {
            --j;
            if (++pt[j] < p) break;
            pt[j] = 0;
            if (j == 0) return (zeros - 1) / (p - 1);
        }
    }
}

std::vector<long> jacobian_ring_hilbert(unsigned n, unsigned d) {
    std::vector<long> h{1};
    for (unsigned factor = 0; factor <= n; ++factor) {
        std::vector<long> next(h.size() + d - 2, 0);
        for (std::size_t i = 0; i < h.size(); ++i)
            for (unsigned j = 0; j + 2 <= d; ++j) next[i + j] += h[i];
        h = std::move(next);
    }
    return h;
}

ZetaSeries truncate_series(const PointCountSequence& counts, unsigned S) {
    PointCountSequence head = counts;
    head.S = S;
    head.counts.assign(counts.counts.begin(), counts.counts.begin() + S);
    head.complement_counts.assign(counts.complement_counts.begin(),
                                  counts.complement_counts.begin() + S);
    return series_from_counts(head, false);
}

void criterion_projective_identity() {
    const std::vector<std::pair<std::uint64_t, unsigned>> fields{
        {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};
    for (auto [p, m] : fields) {
        auto F = build_field(p, m);
        mpz_class q(static_cast<unsigned long>(F->q()));
        for (unsigned n = 0; n <= 4; ++n) {
            mpz_class formula = projective_space_size(n, q);
            // walk the representative stream one point at a time
            ProjectiveEnumerator en(n, F);
            std::uint64_t walked = 0;
            for (auto cur = en.cursor_at(0); !cur.done; en.next(cur)) ++walked;
            mpz_class cone = cone_count_oracle(PolynomialSystem(n, {}), F);
            std::ostringstream os;
            os << "n=" << n << " q=" << F->q();
            require(mpz_class(walked) == formula, "enumeration mismatch at " + os.str());
            require(cone == formula, "cone oracle mismatch at " + os.str());
        }
    }
}

void criterion_ax_katz_suite() {
    struct Case {
        const char* name;
        unsigned kappa;
    };
    for (const Case& c : {Case{"conic-f2", 1}, Case{"cubic-curve-f2", 0},
                          Case{"cubic-surface-f2", 1}, Case{"quadric-surface-f2", 1},
                          Case{"quadric-surface-f3", 1}, Case{"quadric4fold-f3", 2}}) {
        const CatalogEntry& e = catalog_entry(c.name);
        PolynomialSystem sys = system_from_input(e.input);
        AxKatzSection section = verify_ax_katz(sys, e.input.p, e.input.d, e.input.S);
        require(section.kappa == c.kappa,
                std::string(c.name) + ": kappa != " + std::to_string(c.kappa));
        require(section.pass, std::string(c.name) + ": congruence failed");
        for (const auto& level : section.levels)
            require(level.remainder == 0, std::string(c.name) + ": nonzero remainder");
    }
}

void criterion_sharpness_witness() {
    const CatalogEntry& e = catalog_entry("quadric4fold-f3");
    PolynomialSystem sys = system_from_input(e.input);
    PointCountSequence counts = count_tower(sys, 3, 1, e.input.S);
    require(counts.complement_counts[0] == mpz_class(243 - 9),
            "|U(F_3)| != 3^5 - 3^2, got " + counts.complement_counts[0].get_str());
    ZetaSeries u = series_from_counts(counts, true);
    require(verify_zeta_ring_membership(u, 2).pass, "ring membership fails at kappa = 2");
    require(!verify_zeta_ring_membership(u, 3).pass,
            "ring membership unexpectedly passes at kappa = 3");
}

void criterion_zeta_reconstruction() {
    // (a) P^1 and P^2 over F_2 reproduce prod (1 - q^j t)^{-1}
    for (unsigned n : {1u, 2u}) {
        PointCountSequence counts = count_tower(PolynomialSystem(n, {}), 2, 1, n + 2);
        RationalZeta z = pade_reconstruct(series_from_counts(counts, false), 0, n + 1);
        require(z.numerator == std::vector<mpz_class>{1}, "P^n numerator != 1");
        std::vector<mpz_class> expected{1};
        mpz_class qj = 1;
        for (unsigned j = 0; j <= n; ++j) {
            expected = poly_mul_z(expected, {1, -qj});
            qj *= 2;
        }
        require(z.denominator == expected, "P^n denominator mismatch");
    }

    // (b) elliptic curve over F_5: P_1 from S = 2 predicts N_3 and N_4
    {
        PolynomialSystem e5 = make_system(2, {"x1^2*x2 - x0^3 + x0*x2^2"});
        PointCountSequence counts = count_tower(e5, 5, 1, 4);
        ZetaSeries short_series = truncate_series(counts, 2);
        std::vector<mpz_class> p1 = extract_middle_factor(short_series, 1, 2);
        require(p1 == std::vector<mpz_class>{1, 2, 5},
                "elliptic middle factor != 1 + 2t + 5t^2");
        RationalZeta z;
        z.numerator = p1;
        z.denominator = poly_mul_z({1, -1}, {1, -5});
        std::vector<mpz_class> predicted = point_counts_from_zeta(z, 4);
        require(predicted[2] == counts.counts[2], "predicted N_3 mismatch");
        require(predicted[3] == counts.counts[3], "predicted N_4 mismatch");
    }

    // (c) cubic surface over F_2 with S = 6
    {
        const CatalogEntry& e = catalog_entry("cubic-surface-f2");
        PolynomialSystem sys = system_from_input(e.input);
        PointCountSequence counts = count_tower(sys, 2, 1, 6);
        ZetaSeries series = series_from_counts(counts, false);
        std::vector<mpz_class> p2 = extract_middle_factor(series, 2, 6);
        require(poly_degree_z(p2) == 6, "cubic surface middle factor degree != 6");
        require(divisibility_check(p2, 2, 1, 1), "divisibility at kappa = 1 fails");
        require(weil_symmetry_check(p2, 2, 1, 2), "functional-equation symmetry fails");
    }
}

void criterion_newton_above_hodge() {
    HodgeDiamond elliptic = hodge_numbers(CompleteIntersectionSpec(2, {3}));

    // ordinary: Newton = Hodge
    PolynomialSystem e5 = make_system(2, {"x1^2*x2 - x0^3 + x0*x2^2"});
    PointCountSequence c5 = count_tower(e5, 5, 1, 2);
    std::vector<mpz_class> p5 = extract_middle_factor(series_from_counts(c5, false), 1, 2);
    NewtonHodgeSection ord = verify_newton_above_hodge(p5, elliptic, 5, 1);
    require(ord.pass && ord.equality, "ordinary curve: Newton != Hodge");

    // supersingular: {1/2, 1/2} strictly above {0, 1}; N_1 = 8 so a = 0
    PolynomialSystem e7 = make_system(2, {"x1^2*x2 - x0^3 - x0*x2^2"});
    require(brute_force_count(e7, 7) == 8, "independent count of the F_7 curve != 8");
    PointCountSequence c7 = count_tower(e7, 7, 1, 2);
    require(c7.counts[0] == 8, "N_1 != 8 over F_7");
    std::vector<mpz_class> p7 = extract_middle_factor(series_from_counts(c7, false), 1, 2);
    require(p7 == std::vector<mpz_class>{1, 0, 7}, "supersingular numerator != 1 + 7t^2");
    NewtonHodgeSection ss = verify_newton_above_hodge(p7, elliptic, 7, 1);
    require(ss.pass, "supersingular Newton not above Hodge");
    require(!ss.equality, "supersingular polygon should lie strictly above");
    require(ss.newton.slopes.size() == 1 && ss.newton.slopes[0].first == mpq_class(1, 2),
            "supersingular slopes != {1/2, 1/2}");
}

void criterion_hodge_diamonds() {
    // plane curves d <= 6: genus formula
    for (unsigned d = 1; d <= 6; ++d) {
        HodgeDiamond dia = hodge_numbers(CompleteIntersectionSpec(2, {d}));
        mpz_class genus = mpz_class(d - 1) * (d - 2) / 2;
        require(dia.prim[1] == genus, "genus mismatch at d = " + std::to_string(d));
    }

    // quartic surface with the Jacobian-ring oracle
    {
        HodgeDiamond dia = hodge_numbers(CompleteIntersectionSpec(3, {4}));
        require(dia.h[2][0] == 1 && dia.h[1][1] == 20 && dia.h[0][2] == 1,
                "quartic surface diamond != (1, 20, 1)");
        auto hilbert = jacobian_ring_hilbert(3, 4);
        require(hilbert[4] == 19 && hilbert[0] == 1 && hilbert[8] == 1,
                "Jacobian-ring oracle disagrees");
        require(dia.prim[1] == hilbert[4], "primitive h^{1,1} != Jacobian dimension");
    }

    // symmetry and Serre duality for every spec with n <= 8, r <= 3, d_i <= 6
    std::vector<std::vector<unsigned>> degree_sets;
    for (unsigned d1 = 1; d1 <= 6; ++d1) {
        degree_sets.push_back({d1});
        for (unsigned d2 = 1; d2 <= d1; ++d2) {
            degree_sets.push_back({d1, d2});
            for (unsigned d3 = 1; d3 <= d2; ++d3) degree_sets.push_back({d1, d2, d3});
        }
    }
    for (const auto& degrees : degree_sets) {
        for (unsigned n = static_cast<unsigned>(degrees.size()); n <= 8; ++n) {
            CompleteIntersectionSpec spec(n, degrees);
            HodgeDiamond dia = hodge_numbers(spec); // negative entries already throw
            HodgeCalculator calc(spec);
            unsigned m = spec.m();
            for (unsigned p = 0; p <= m; ++p) {
                for (unsigned q = 0; q <= m; ++q) {
                    require(dia.h[p][q] == dia.h[q][p], "Hodge symmetry violated");
                    require(dia.h[p][q] == dia.h[m - p][m - q], "Lefschetz symmetry violated");
                    if (p != q && p + q != m)
                        require(dia.h[p][q] == 0, "unexpected off-structure entry");
                }
                mpz_class lhs = calc.chi_twisted(p, 0);
                mpz_class rhs = calc.chi_twisted(m - p, 0);
                require(lhs == (m % 2 == 0 ? rhs : -rhs), "Serre duality violated on chi");
            }
        }
    }
}

void criterion_kappa_agreement() {
    unsigned compared = 0;
    for (const auto& e : catalog()) {
        if (!e.input.smooth.value_or(false) || !e.input.complete_intersection.value_or(false))
            continue;
        VerificationReport r = full_report(e.input);
        if (!r.kappa_agreement || r.kappa_agreement->skipped) continue; // no primitive part
        require(r.kappa_agreement->agree,
                e.input.name + ": kappa_ax = " + std::to_string(r.kappa_agreement->kappa_ax_katz) +
                    ", kappa_hodge = " + std::to_string(*r.kappa_agreement->kappa_hodge) +
                    ", divisibility max = " +
                    std::to_string(*r.kappa_agreement->kappa_divisibility_max) + " disagree");
        ++compared;
    }
    require(compared >= 8, "too few catalog entries reached the comparison");
}

void criterion_incidence_grid() {
    for (unsigned kappa = 1; kappa <= 3; ++kappa)
        for (unsigned d = 1; d <= 5; ++d)
            for (unsigned n = kappa; n <= 8; ++n) {
                auto rep = check_incidence_vanishing(kappa, d, n);
                std::ostringstream os;
                os << "(kappa, d, n) = (" << kappa << ", " << d << ", " << n << ")";
                require(rep.pass, "vanishing grid false at " + os.str());
            }
}

void criterion_divisibility_implication() {
    for (const auto& e : catalog()) {
        if (!e.input.smooth.value_or(false) || !e.input.complete_intersection.value_or(false))
            continue;
        PolynomialSystem sys = system_from_input(e.input);
        CompleteIntersectionSpec spec(e.input.hodge_n.value_or(e.input.n),
                                      e.input.hodge_degrees ? *e.input.hodge_degrees
                                                            : sys.degrees());
        SlopesPropositionSection section =
            verify_slopes_proposition(sys, spec, e.input.p, e.input.d, e.input.S);
        require(section.pass, e.input.name + ": divisibility implication failed");
    }
}

void criterion_performance() {
    PolynomialSystem cubic = make_system(3, {"x0^3 + x1^3 + x2^3 + x3^3"});
    auto F = build_field(2, 7); // ~2.1M projective points
    CountOptions four, one;
    four.workers = 4;
    one.workers = 1;

    auto start = Clock::now();
    mpz_class with_four = count_points(cubic, F, four);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    require(elapsed.count() < 5000,
            "count over F_{2^7} took " + std::to_string(elapsed.count()) + " ms (budget 5000)");
    require(with_four == count_points(cubic, F, one), "worker count changed the result");
}

} // namespace

int main() {
    Harness h;
    h.run(1, "projective-space identity via enumeration and cone oracle (n <= 4, q <= 9)",
          criterion_projective_identity);
    h.run(2, "Ax-Katz congruence suite over the catalog", criterion_ax_katz_suite);
    h.run(3, "sharpness witness: split quadric fourfold over F_3", criterion_sharpness_witness);
    h.run(4, "zeta reconstruction: projective spaces, elliptic curve, cubic surface",
          criterion_zeta_reconstruction);
    h.run(5, "Newton above Hodge: ordinary equality, supersingular strictness",
          criterion_newton_above_hodge);
    h.run(6, "Hodge diamonds: genus formula, Jacobian oracle, symmetry and Serre duality",
          criterion_hodge_diamonds);
    h.run(7, "kappa agreement across the smooth catalog", criterion_kappa_agreement);
    h.run(8, "incidence-family vanishing grid (kappa <= 3, d <= 5, n <= 8)",
          criterion_incidence_grid);
    h.run(9, "Hodge-type divisibility implication holds on the smooth catalog",
          criterion_divisibility_implication);
    h.run(10, "performance: cubic surface over F_{2^7} under 5 s on 4 workers",
          criterion_performance);

    if (h.failures == 0)
        std::cout << "all criteria passed\n";
    else
        std::cout << h.failures << " criteria failed\n";
    return h.failures;
}
