#include "axkatz/hodge.hpp"

#include <algorithm>

#include "axkatz/integers.hpp"

namespace axkatz {

CompleteIntersectionSpec::CompleteIntersectionSpec(unsigned n_, std::vector<unsigned> degrees_)
    : n(n_), degrees(std::move(degrees_)) {
    if (degrees.empty()) throw InvalidSpec("complete intersection needs r >= 1 equations");
    for (auto d : degrees)
        if (d < 1) throw InvalidSpec("complete intersection degrees must be >= 1");
    if (degrees.size() > n) throw InvalidSpec("complete intersection needs m = n - r >= 0");
    if (degrees.size() > 24) throw InvalidSpec("too many equations for the Koszul expansion");
    std::sort(degrees.begin(), degrees.end(), std::greater<unsigned>());
}

mpz_class HodgeDiamond::b_prim() const {
    mpz_class b = 0;
    for (const auto& x : prim) b += x;
    return b;
}

bool HodgeDiamond::has_primitive() const {
    return std::any_of(prim.begin(), prim.end(), [](const mpz_class& x) { return x != 0; });
}

mpz_class chi_projective_o(unsigned n, long k) {
    // prod_{i=1..n} (k+i) / n! — exact for every integer twist
    mpz_class num = 1;
    for (unsigned i = 1; i <= n; ++i) num *= mpz_class(k + static_cast<long>(i));
    mpz_class fact = 1;
    for (unsigned i = 2; i <= n; ++i) fact *= i;
    if (!divides(fact, num)) throw InternalInconsistency("binomial polynomial not integral");
    return exact_div(num, fact);
}

HodgeCalculator::HodgeCalculator(CompleteIntersectionSpec spec) : spec_(std::move(spec)) {
    // Koszul coefficients: expand prod_i (1 - z^{d_i}) into (offset, signed count),
    // and the wedge powers of the conormal bundle: size-j subset sums of degrees.
    const unsigned r = spec_.r();
    std::map<long, mpz_class> koszul{{0, 1}};
    std::vector<std::map<long, mpz_class>> wedge(r + 1);
    wedge[0][0] = 1;
    for (unsigned i = 0; i < r; ++i) {
        long d = static_cast<long>(spec_.degrees[i]);
        std::map<long, mpz_class> next;
        for (const auto& [e, w] : koszul) {
            next[e] += w;
            next[e + d] -= w;
        }
        koszul = std::move(next);
        for (unsigned j = std::min(i + 1, r); j >= 1; --j)
            for (const auto& [e, w] : wedge[j - 1]) wedge[j][e + d] += w;
    }
    for (const auto& [e, w] : koszul)
        if (w != 0) koszul_.emplace_back(e, w);
    wedge_.resize(r + 1);
    for (unsigned j = 0; j <= r; ++j)
        for (const auto& [e, w] : wedge[j])
            if (w != 0) wedge_[j].emplace_back(e, w);
}

mpz_class HodgeCalculator::chi_o_pn(long k) const { return chi_projective_o(spec_.n, k); }

mpz_class HodgeCalculator::chi_omega_pn(unsigned p, long k) {
    if (p > spec_.n) return 0;
    if (p == 0) return chi_o_pn(k);
    auto key = std::make_pair(p, k);
    if (auto it = memo_pn_.find(key); it != memo_pn_.end()) return it->second;
    // Euler sequence: chi(Omega^p(k)) = binom(n+1, p) chi(O(k-p)) - chi(Omega^{p-1}(k))
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), spec_.n + 1, p);
    mpz_class value = binom * chi_o_pn(k - static_cast<long>(p)) - chi_omega_pn(p - 1, k);
    memo_pn_[key] = value;
    return value;
}

mpz_class HodgeCalculator::chi_restricted_omega_pn(unsigned p, long k) {
    mpz_class acc = 0;
    for (const auto& [e, w] : koszul_) acc += w * chi_omega_pn(p, k - e);
    return acc;
}

mpz_class HodgeCalculator::chi_twisted(unsigned p, long k) {
    const unsigned m = spec_.m();
    if (p > m) throw InvalidSpec("form degree exceeds the dimension");
    auto key = std::make_pair(p, k);
    if (auto it = memo_x_.find(key); it != memo_x_.end()) return it->second;

    // conormal filtration of Omega^p_{P^n}|_X, solved for chi(Omega^p_X(k))
    mpz_class value = chi_restricted_omega_pn(p, k);
    for (unsigned j = 1; j <= p && j < wedge_.size(); ++j)
        for (const auto& [e, w] : wedge_[j]) value -= w * chi_twisted(p - j, k - e);
    memo_x_[key] = value;
    return value;
}

HodgeDiamond HodgeCalculator::diamond() {
    const unsigned m = spec_.m();
    HodgeDiamond dia;
    dia.m = m;
    dia.h.assign(m + 1, std::vector<mpz_class>(m + 1, mpz_class(0)));
    dia.prim.assign(m + 1, mpz_class(0));

    for (unsigned p = 0; p <= m; ++p) {
        mpz_class chi = chi_twisted(p, 0);
        mpz_class sign_p = (p % 2 == 0) ? 1 : -1;
        mpz_class prim = chi - sign_p;
        if ((m - p) % 2 == 1) prim = -prim;
        if (prim < 0)
            throw InternalInconsistency("negative primitive Hodge number at p = " +
                                        std::to_string(p));
        dia.prim[p] = prim;
    }
    for (unsigned p = 0; p <= m; ++p) {
        if (dia.prim[p] != dia.prim[m - p])
            throw InternalInconsistency("primitive row violates Hodge symmetry");
    }

    for (unsigned p = 0; p <= m; ++p) dia.h[p][p] = 1;
    for (unsigned p = 0; p <= m; ++p) dia.h[p][m - p] += dia.prim[p];
    return dia;
}

HodgeDiamond hodge_numbers(const CompleteIntersectionSpec& spec) {
    return HodgeCalculator(spec).diamond();
}

HodgeType hodge_type(const HodgeDiamond& diamond) {
    for (unsigned p = 0; p <= diamond.m; ++p)
        if (diamond.prim[p] != 0) return HodgeType{p, false};
    return HodgeType{diamond.m + 1, true};
}

unsigned ax_katz_kappa(unsigned n, const std::vector<unsigned>& degrees_desc) {
    if (degrees_desc.empty()) throw InvalidSpec("ax_katz_kappa needs at least one degree");
    long num = static_cast<long>(n);
    for (std::size_t i = 1; i < degrees_desc.size(); ++i) num -= static_cast<long>(degrees_desc[i]);
    long d1 = static_cast<long>(degrees_desc[0]);
    if (num < 0) return 0;
    return static_cast<unsigned>(num / d1);
}

NewtonPolygon hodge_polygon(const HodgeDiamond& diamond, bool use_primitive) {
    NewtonPolygon out;
    unsigned long x = 0;
    mpq_class y = 0;
    out.vertices.emplace_back(x, y);
    for (unsigned i = 0; i <= diamond.m; ++i) {
        mpz_class mult = use_primitive ? diamond.prim[i] : diamond.h[i][diamond.m - i];
        if (mult == 0) continue;
        if (!mult.fits_ulong_p()) throw InvalidInput("Hodge polygon multiplicity too large");
        unsigned long mu = mult.get_ui();
        x += mu;
        y += mpq_class(static_cast<unsigned long>(i)) * mpq_class(mu);
        out.vertices.emplace_back(x, y);
        out.slopes.emplace_back(mpq_class(static_cast<unsigned long>(i)), mu);
    }
    if (out.vertices.size() == 1) out.vertices.clear(); // empty polygon
    return out;
}

// ---------------------------------------------------------------------------
// blow-up and incidence families

HodgeTable blowup_hodge(unsigned kappa, unsigned d, unsigned n) {
    if (kappa < 1 || d < 1) throw InvalidSpec("blowup_hodge expects kappa >= 1 and d >= 1");
    if (n < kappa) throw InvalidSpec("blowup_hodge needs n - kappa >= 0");

    HodgeTable Y;
    Y.dim = n;
    Y.h.assign(n + 1, std::vector<mpz_class>(n + 1, mpz_class(0)));
    for (unsigned a = 0; a <= n; ++a) Y.h[a][a] = 1;
    if (kappa >= 2) {
        HodgeDiamond X = hodge_numbers(CompleteIntersectionSpec(n, std::vector<unsigned>(kappa, d)));
        for (unsigned i = 1; i <= kappa - 1; ++i)
            for (unsigned a = 0; a <= X.m; ++a)
                for (unsigned b = 0; b <= X.m; ++b) Y.h[a + i][b + i] += X.h[a][b];
    }
    return Y;
}

HodgeTable incidence_hodge(unsigned kappa, unsigned d, unsigned n) {
    if (kappa < 1 || d < 1) throw InvalidSpec("incidence_hodge expects kappa >= 1 and d >= 1");
    if (n < kappa) throw InvalidSpec("incidence_hodge needs n - kappa >= 0");

    const unsigned N = n + kappa - 2; // dim Y; for kappa = 1, Y is X itself
    HodgeTable Y;
    Y.dim = N;
    Y.h.assign(N + 1, std::vector<mpz_class>(N + 1, mpz_class(0)));
    if (kappa >= 2) {
        for (unsigned i = 0; i + 2 <= kappa; ++i)
            for (unsigned a = 0; a <= n; ++a) Y.h[a + i][a + i] += 1;
    }
    HodgeDiamond X = hodge_numbers(CompleteIntersectionSpec(n, std::vector<unsigned>(kappa, d)));
    const unsigned shift = kappa - 1;
    for (unsigned a = 0; a <= X.m; ++a)
        for (unsigned b = 0; b <= X.m; ++b) Y.h[a + shift][b + shift] += X.h[a][b];
    return Y;
}

IncidenceVanishingReport check_incidence_vanishing(unsigned kappa, unsigned d, unsigned n) {
    IncidenceVanishingReport rep;
    rep.kappa = kappa;
    rep.d = d;
    rep.n = n;
    rep.fano_range = static_cast<unsigned long>(kappa) * d <= n;

    HodgeTable Y = incidence_hodge(kappa, d, n);
    std::optional<unsigned> min_level;
    for (unsigned p = 0; p <= Y.dim && !min_level; ++p)
        for (unsigned q = 0; q <= Y.dim; ++q)
            if (q != p && Y.h[p][q] != 0) {
                min_level = p;
                break;
            }
    rep.min_offdiag_level = min_level;
    if (!min_level) {
        // X carries only (p, p) classes; the level criterion is vacuous
        rep.degenerate = true;
        rep.pass = true;
    } else {
        rep.pass = (*min_level >= kappa) == rep.fano_range;
    }
    return rep;
}

} // namespace axkatz
