#include "axkatz/zeta.hpp"

#include <algorithm>

#include "axkatz/integers.hpp"

namespace axkatz {

mpz_class ZetaSeries::q() const { return upow(p, d); }

ZetaSeries series_from_counts(const PointCountSequence& counts, bool use_complement) {
    if (counts.S < 1) throw InvalidInput("series_from_counts expects S >= 1");
    const auto& N = use_complement ? counts.complement_counts : counts.counts;

    ZetaSeries series;
    series.p = counts.p;
    series.d = counts.d;
    series.from_scheme = true;
    series.coeffs.assign(counts.S + 1, mpq_class(0));
    series.coeffs[0] = 1;
    for (unsigned s = 1; s <= counts.S; ++s) {
        mpq_class acc = 0;
        for (unsigned j = 1; j <= s; ++j) acc += mpq_class(N[j - 1]) * series.coeffs[s - j];
        series.coeffs[s] = acc / static_cast<signed long>(s);
    }
    for (unsigned s = 0; s <= counts.S; ++s) {
        if (!is_integral(series.coeffs[s]))
            throw IntegralityViolation("zeta coefficient c_" + std::to_string(s) +
                                       " is not an integer; counts are inconsistent");
        if (series.coeffs[s] < 0)
            throw IntegralityViolation("zeta coefficient c_" + std::to_string(s) +
                                       " is negative; counts are inconsistent");
    }
    return series;
}

// ---------------------------------------------------------------------------
// exact polynomial helpers

std::vector<mpz_class> poly_mul_z(const std::vector<mpz_class>& a,
                                  const std::vector<mpz_class>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpz_class> out(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

unsigned poly_degree_z(const std::vector<mpz_class>& a) {
    std::size_t d = a.size();
    while (d > 0 && a[d - 1] == 0) --d;
    return d == 0 ? 0 : static_cast<unsigned>(d - 1);
}

namespace {

std::vector<mpq_class> poly_mul_q(const std::vector<mpq_class>& a,
                                  const std::vector<mpq_class>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpq_class> out(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

void trim_q(std::vector<mpq_class>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Euclidean gcd over Q[t], monic-normalized each step.
std::vector<mpq_class> poly_gcd_q(std::vector<mpq_class> a, std::vector<mpq_class> b) {
    trim_q(a);
    trim_q(b);
    while (!b.empty()) {
        // remainder of a mod b
        mpq_class lead = b.back();
        std::vector<mpq_class> r = a;
        while (r.size() >= b.size() && !r.empty()) {
            mpq_class f = r.back() / lead;
            std::size_t shift = r.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
            trim_q(r);
        }
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        mpq_class lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

// exact division a / b, b known to divide a
std::vector<mpq_class> poly_div_q(std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
    trim_q(a);
    std::vector<mpq_class> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
    mpq_class lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class f = a.back() / lead;
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim_q(a);
    }
    if (!a.empty()) throw InternalInconsistency("polynomial division left a remainder");
    return q;
}

} // namespace

RationalZeta pade_reconstruct(const ZetaSeries& series, unsigned deg_num, unsigned deg_den) {
    const unsigned S = series.order();
    if (S < deg_num + deg_den) throw InsufficientCounts(deg_num + deg_den);
    const auto& c = series.coeffs;

    // Unknowns q_1..q_b from sum_{i=0..b} q_i c_{k-i} = 0 for k = a+1 .. S.
    const unsigned a = deg_num, b = deg_den;
    const unsigned rows = S - a;
    std::vector<std::vector<mpq_class>> M(rows, std::vector<mpq_class>(b + 1, mpq_class(0)));
    for (unsigned r = 0; r < rows; ++r) {
        unsigned k = a + 1 + r;
        for (unsigned i = 1; i <= b && i <= k; ++i) M[r][i - 1] = c[k - i];
        M[r][b] = -c[k];
    }

    // exact Gauss-Jordan with partial pivoting; free variables go to zero
    std::vector<int> pivot_row_of_col(b, -1);
    unsigned rank = 0;
    for (unsigned col = 0; col < b && rank < rows; ++col) {
        unsigned sel = rank;
        while (sel < rows && M[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(M[sel], M[rank]);
        mpq_class inv = M[rank][col];
        for (auto& x : M[rank]) x /= inv;
        for (unsigned r = 0; r < rows; ++r) {
            if (r == rank || M[r][col] == 0) continue;
            mpq_class f = M[r][col];
            for (unsigned cc = col; cc <= b; ++cc) M[r][cc] -= f * M[rank][cc];
        }
        pivot_row_of_col[col] = static_cast<int>(rank);
        ++rank;
    }
    for (unsigned r = rank; r < rows; ++r)
        if (M[r][b] != 0)
            throw DegreeBoundsTooSmall("no rational function of degrees (" +
                                       std::to_string(deg_num) + ", " + std::to_string(deg_den) +
                                       ") fits the series");

    std::vector<mpq_class> Q(b + 1, mpq_class(0));
    Q[0] = 1;
    for (unsigned col = 0; col < b; ++col)
        if (pivot_row_of_col[col] >= 0) Q[col + 1] = M[pivot_row_of_col[col]][b];

    // P = (Q * Z) truncated to degree a; then verify the fit on all S coefficients
    std::vector<mpq_class> qc(Q.begin(), Q.end());
    std::vector<mpq_class> prod = poly_mul_q(qc, c);
    std::vector<mpq_class> P(prod.begin(), prod.begin() + std::min<std::size_t>(prod.size(), a + 1));
    trim_q(P);
    if (P.empty()) P.push_back(mpq_class(0));
    for (unsigned k = 0; k <= S; ++k) {
        mpq_class lhs = k < prod.size() ? prod[k] : mpq_class(0);
        mpq_class rhs = k < P.size() ? P[k] : mpq_class(0);
        if (lhs != rhs)
            throw DegreeBoundsTooSmall("reconstruction does not reproduce coefficient " +
                                       std::to_string(k));
    }

    // clear common factors (removes any shared rational roots)
    std::vector<mpq_class> qq(Q.begin(), Q.end());
    trim_q(qq);
    std::vector<mpq_class> g = poly_gcd_q(P, qq);
    if (g.size() > 1) {
        if (g[0] == 0) throw InternalInconsistency("common factor with zero constant term");
        mpq_class g0 = g[0];
        for (auto& x : g) x /= g0; // normalize g(0) = 1 to preserve constant terms
        P = poly_div_q(P, g);
        qq = poly_div_q(qq, g);
    }

    RationalZeta out;
    auto to_z = [](const std::vector<mpq_class>& v, const char* which) {
        std::vector<mpz_class> z;
        z.reserve(v.size());
        for (const auto& x : v) {
            if (!is_integral(x))
                throw IntegralityViolation(std::string(which) +
                                           " coefficient is not an integer; upstream counts are suspect");
            z.push_back(mpz_class(x.get_num()));
        }
        return z;
    };
    out.numerator = to_z(P, "numerator");
    out.denominator = to_z(qq, "denominator");
    if (out.numerator.empty()) out.numerator.push_back(mpz_class(0));
    if (out.denominator.empty() || out.denominator[0] != 1)
        throw InternalInconsistency("denominator constant term is not 1");
    return out;
}

std::vector<mpz_class> extract_middle_factor(const ZetaSeries& series, unsigned m,
                                             unsigned b_prim) {
    const unsigned S = series.order();
    if (S < b_prim) throw InsufficientCounts(b_prim);

    // A = Z(t) * prod_{j=0..m} (1 - q^j t), truncated to order S
    std::vector<mpq_class> A = series.coeffs;
    mpz_class qj = 1;
    const mpz_class q = series.q();
    for (unsigned j = 0; j <= m; ++j) {
        std::vector<mpq_class> next(A.size(), mpq_class(0));
        for (std::size_t k = 0; k < A.size(); ++k) {
            next[k] += A[k];
            if (k + 1 < A.size()) next[k + 1] -= mpq_class(qj) * A[k];
        }
        A = std::move(next);
        qj *= q;
    }

    if (m % 2 == 0) {
        // the middle factor sits in the denominator; invert the series
        if (A[0] != 1) throw InternalInconsistency("series constant term is not 1");
        std::vector<mpq_class> B(A.size(), mpq_class(0));
        B[0] = 1;
        for (std::size_t k = 1; k < A.size(); ++k) {
            mpq_class acc = 0;
            for (std::size_t j = 1; j <= k; ++j) acc += A[j] * B[k - j];
            B[k] = -acc;
        }
        A = std::move(B);
    }

    for (unsigned k = b_prim + 1; k <= S; ++k) {
        if (A[k] != 0)
            throw NotCompleteIntersectionLike(
                "series does not truncate to a degree-" + std::to_string(b_prim) +
                " polynomial at order " + std::to_string(k));
    }

    std::vector<mpz_class> P;
    for (unsigned k = 0; k <= b_prim; ++k) {
        if (!is_integral(A[k]))
            throw IntegralityViolation("middle factor coefficient " + std::to_string(k) +
                                       " is not an integer");
        P.push_back(mpz_class(A[k].get_num()));
    }
    if (P[0] != 1) throw InternalInconsistency("middle factor constant term is not 1");
    return P;
}

// ---------------------------------------------------------------------------
// Newton polygons and divisibility

mpq_class NewtonPolygon::ordinate_at(const mpq_class& x) const {
    if (vertices.empty()) throw InvalidInput("empty polygon");
    if (x < static_cast<signed long>(vertices.front().first) ||
        x > static_cast<signed long>(vertices.back().first))
        throw InvalidInput("abscissa outside polygon range");
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        mpq_class x0 = static_cast<signed long>(vertices[i].first);
        mpq_class x1 = static_cast<signed long>(vertices[i + 1].first);
        if (x > x1) continue;
        mpq_class t = (x - x0) / (x1 - x0);
        return vertices[i].second + t * (vertices[i + 1].second - vertices[i].second);
    }
    return vertices.back().second;
}

NewtonPolygon newton_polygon(const std::vector<mpz_class>& poly, std::uint64_t p, unsigned d) {
    if (poly.empty() || std::all_of(poly.begin(), poly.end(),
                                    [](const mpz_class& c) { return c == 0; }))
        throw InvalidInput("newton_polygon of the zero polynomial");
    if (poly[0] != 1) throw InvalidInput("newton_polygon expects constant term 1");

    std::vector<std::pair<unsigned long, mpq_class>> pts;
    for (std::size_t j = 0; j < poly.size(); ++j) {
        if (poly[j] == 0) continue;
        auto v = p_adic_valuation(poly[j], p);
        mpq_class ord(static_cast<unsigned long>(*v), static_cast<unsigned long>(d));
        ord.canonicalize();
        pts.emplace_back(static_cast<unsigned long>(j), ord);
    }

    // monotone lower hull, exact arithmetic
    std::vector<std::pair<unsigned long, mpq_class>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // pop b unless it lies strictly below segment a-pt
            mpq_class lhs = (b.second - a.second) *
                            (static_cast<signed long>(pt.first) - static_cast<signed long>(a.first));
            mpq_class rhs = (pt.second - a.second) *
                            (static_cast<signed long>(b.first) - static_cast<signed long>(a.first));
            if (lhs < rhs) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }

    NewtonPolygon out;
    out.vertices = std::move(hull);
    for (std::size_t i = 0; i + 1 < out.vertices.size(); ++i) {
        const auto& a = out.vertices[i];
        const auto& b = out.vertices[i + 1];
        unsigned long mult = b.first - a.first;
        mpq_class slope = (b.second - a.second) / mpq_class(mult);
        out.slopes.emplace_back(slope, mult);
    }
    return out;
}

bool divisibility_check(const std::vector<mpz_class>& poly, std::uint64_t p, unsigned d,
                        unsigned kappa) {
    if (poly.empty() || poly[0] != 1) throw InvalidInput("divisibility_check expects constant term 1");
    for (std::size_t j = 1; j < poly.size(); ++j) {
        if (poly[j] == 0) continue;
        auto v = p_adic_valuation(poly[j], p);
        if (*v < static_cast<unsigned long>(d) * kappa * j) return false;
    }
    return true;
}

bool weil_symmetry_check(const std::vector<mpz_class>& pm, std::uint64_t p, unsigned d,
                         unsigned m) {
    unsigned b = poly_degree_z(pm);
    if (b == 0) return true;
    const mpz_class q = upow(p, d);

    auto coeff = [&](unsigned j) { return j < pm.size() ? pm[j] : mpz_class(0); };

    if ((static_cast<unsigned long>(m) * b) % 2 == 0) {
        mpz_class qh = mpow(q, static_cast<unsigned long>(m) * b / 2);
        for (int sign : {+1, -1}) {
            bool ok = true;
            for (unsigned k = 0; k <= b; ++k) {
                // c_k q^{mb/2} = sign * c_{b-k} q^{mk}
                if (coeff(k) * qh != sign * coeff(b - k) * mpow(q, static_cast<unsigned long>(m) * k)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
        return false;
    }

    // m*b odd: compare squares to stay in integer arithmetic, then signs
    mpz_class qmb = mpow(q, static_cast<unsigned long>(m) * b);
    for (unsigned k = 0; k <= b; ++k) {
        mpz_class lhs = coeff(b - k) * coeff(b - k) * mpow(q, 2ul * m * k);
        mpz_class rhs = coeff(k) * coeff(k) * qmb;
        if (lhs != rhs) return false;
    }
    for (int sign : {+1, -1}) {
        bool ok = true;
        for (unsigned k = 0; k <= b; ++k) {
            if (coeff(k) == 0) {
                if (coeff(b - k) != 0) ok = false;
                continue;
            }
            int sk = sgn(coeff(k)), sbk = sgn(coeff(b - k));
            if (sbk != sign * sk) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

std::vector<mpq_class> expand_series(const RationalZeta& zeta, unsigned S) {
    // series of P/Q with Q(0) = 1: b_k = p_k - sum_{j=1..k} q_j b_{k-j}
    std::vector<mpq_class> out(S + 1, mpq_class(0));
    for (unsigned k = 0; k <= S; ++k) {
        mpq_class acc = k < zeta.numerator.size() ? mpq_class(zeta.numerator[k]) : mpq_class(0);
        for (unsigned j = 1; j <= k && j < zeta.denominator.size(); ++j)
            acc -= mpq_class(zeta.denominator[j]) * out[k - j];
        out[k] = acc;
    }
    return out;
}

namespace {

// power sums of the reciprocal roots of F(t) = prod (1 - g_i t):
// j f_j = - sum_{s=1..j} p_s f_{j-s}
std::vector<mpz_class> power_sums(const std::vector<mpz_class>& f, unsigned S) {
    std::vector<mpz_class> ps(S + 1, mpz_class(0));
    auto coeff = [&](unsigned j) { return j < f.size() ? f[j] : mpz_class(0); };
    for (unsigned j = 1; j <= S; ++j) {
        mpz_class acc = mpz_class(j) * coeff(j);
        for (unsigned s = 1; s < j; ++s) acc += ps[s] * coeff(j - s);
        ps[j] = -acc;
    }
    return ps;
}

} // namespace

std::vector<mpz_class> point_counts_from_zeta(const RationalZeta& zeta, unsigned S) {
    auto pn = power_sums(zeta.numerator, S);
    auto pd = power_sums(zeta.denominator, S);
    std::vector<mpz_class> out;
    for (unsigned s = 1; s <= S; ++s) out.push_back(pd[s] - pn[s]);
    return out;
}

} // namespace axkatz
