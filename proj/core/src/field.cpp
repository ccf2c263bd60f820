#include "axkatz/field.hpp"

#include <algorithm>
#include <sstream>

#include "axkatz/integers.hpp"

namespace axkatz {

namespace {

using Poly = std::vector<std::uint64_t>; // coeff[i] multiplies x^i, entries reduced mod p

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on integers; a != 0 mod p
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        std::int64_t quotient = r / new_r;
        std::int64_t tmp = t - quotient * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quotient * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw DivisionByZero();
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            unsigned __int128 acc = out[i + j];
            acc += static_cast<unsigned __int128>(a[i]) * b[j];
            out[i + j] = static_cast<std::uint64_t>(acc % p);
        }
    }
    trim(out);
    return out;
}

// remainder of a modulo monic f
Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
    const int df = degree(f);
    trim(a);
    while (degree(a) >= df) {
        std::uint64_t lead = a.back();
        int shift = degree(a) - df;
        if (lead != 0) {
            for (int i = 0; i <= df; ++i) {
                unsigned __int128 sub = static_cast<unsigned __int128>(lead) * f[i];
                std::uint64_t s = static_cast<std::uint64_t>(sub % p);
                std::uint64_t& c = a[static_cast<std::size_t>(i + shift)];
                c = (c + p - s) % p;
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    return poly_mod(poly_mul(a, b, p), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly result{1};
    base = poly_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

Poly poly_monic(Poly a, std::uint64_t p) {
    trim(a);
    if (a.empty()) return a;
    std::uint64_t lead = a.back();
    if (lead != 1) {
        std::uint64_t li = mod_inverse(lead, p);
        for (auto& c : a) {
            unsigned __int128 v = static_cast<unsigned __int128>(c) * li;
            c = static_cast<std::uint64_t>(v % p);
        }
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, poly_monic(b, p), p);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a, p);
}

// Bezout coefficient u with u*a + v*f = gcd(a, f); used for inversion.
Poly poly_ext_gcd_u(Poly a, Poly f, std::uint64_t p) {
    Poly u{1}, w{}; // u tracks a-coefficients of the remainder sequence
    Poly r0 = std::move(a), r1 = std::move(f);
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        // long-divide r0 by r1
        Poly q;
        Poly rem = r0;
        int d1 = degree(r1);
        std::uint64_t lead_inv = mod_inverse(r1.back(), p);
        while (degree(rem) >= d1) {
            int shift = degree(rem) - d1;
            unsigned __int128 c = static_cast<unsigned __int128>(rem.back()) * lead_inv;
            std::uint64_t coef = static_cast<std::uint64_t>(c % p);
            if (q.size() < static_cast<std::size_t>(shift + 1)) q.resize(shift + 1, 0);
            q[shift] = (q[shift] + coef) % p;
            for (int i = 0; i <= d1; ++i) {
                unsigned __int128 sub = static_cast<unsigned __int128>(coef) * r1[i];
                std::uint64_t s = static_cast<std::uint64_t>(sub % p);
                std::uint64_t& cc = rem[static_cast<std::size_t>(i + shift)];
                cc = (cc + p - s) % p;
            }
            trim(rem);
        }
        // (u, w) <- (w, u - q*w)
        Poly qw = poly_mul(q, w, p);
        Poly nu = u;
        if (nu.size() < qw.size()) nu.resize(qw.size(), 0);
        for (std::size_t i = 0; i < qw.size(); ++i) nu[i] = (nu[i] + p - qw[i]) % p;
        trim(nu);
        u = std::move(w);
        w = std::move(nu);
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    // r0 = gcd; scale u so that u*a = gcd becomes u*a = 1 when gcd is constant
    std::uint64_t g = r0.empty() ? 0 : r0[0];
    if (degree(r0) != 0) throw DivisionByZero();
    std::uint64_t gi = mod_inverse(g, p);
    for (auto& c : u) {
        unsigned __int128 v = static_cast<unsigned __int128>(c) * gi;
        c = static_cast<std::uint64_t>(v % p);
    }
    trim(u);
    return u;
}

} // namespace

bool is_irreducible(const std::vector<std::uint64_t>& f, std::uint64_t p) {
    if (!is_prime_u64(p)) throw InvalidPrime(p);
    Poly fp = f;
    trim(fp);
    int m = degree(fp);
    if (m < 1 || fp.back() != 1) throw InvalidInput("is_irreducible expects a monic polynomial of degree >= 1");
    if (m == 1) return true;

    // x^{p^i} mod f for i = 1..m via iterated p-th powers
    Poly x{0, 1};
    std::vector<Poly> frob(static_cast<std::size_t>(m) + 1);
    frob[0] = poly_mod(x, fp, p);
    for (int i = 1; i <= m; ++i) frob[i] = poly_powmod(frob[i - 1], p, fp, p);

    // x^{p^m} == x mod f
    if (frob[static_cast<std::size_t>(m)] != frob[0]) return false;

    for (std::uint64_t ell : prime_factors_u64(static_cast<std::uint64_t>(m))) {
        const Poly& g = frob[static_cast<std::size_t>(m) / ell];
        Poly h = g;
        if (h.empty()) h = Poly{0};
        if (h.size() < 2) h.resize(2, 0);
        h[1] = (h[1] + p - 1) % p; // g - x
        trim(h);
        Poly d = poly_gcd(h, fp, p);
        if (degree(d) != 0) return false;
    }
    return true;
}

FieldDescriptor::FieldDescriptor(std::uint64_t p, unsigned m, std::vector<std::uint64_t> defining,
                                 bool enable_tables)
    : p_(p), m_(m), defining_(std::move(defining)) {
    q_ = 1;
    for (unsigned i = 0; i < m_; ++i) {
        if (q_ > (1ull << 62) / p_) throw InvalidDegree(static_cast<long>(m_));
        q_ *= p_;
    }
    if (enable_tables && q_ <= kTableLimit) build_tables();
}

FieldPtr build_field(std::uint64_t p, unsigned m, bool enable_tables) {
    if (!is_prime_u64(p)) throw InvalidPrime(p);
    if (p > FieldDescriptor::kMaxPrime) throw InvalidPrime(p);
    if (m < 1) throw InvalidDegree(static_cast<long>(m));

    std::vector<std::uint64_t> defining;
    if (m == 1) {
        defining = {0, 1}; // the formal polynomial x
    } else {
        // scan lower coefficient vectors in base-p order, smallest first
        mpz_class total = upow(p, m);
        mpz_class c = 0;
        for (; c < total; ++c) {
            std::vector<std::uint64_t> f(m + 1, 0);
            mpz_class rest = c;
            for (unsigned i = 0; i < m; ++i) {
                mpz_class digit = rest % static_cast<unsigned long>(p);
                f[i] = digit.get_ui();
                rest /= static_cast<unsigned long>(p);
            }
            f[m] = 1;
            if (is_irreducible(f, p)) {
                defining = std::move(f);
                break;
            }
        }
        if (defining.empty()) throw InternalInconsistency("no irreducible polynomial found");
    }
    return FieldPtr(new FieldDescriptor(p, m, std::move(defining), enable_tables));
}

void FieldDescriptor::check(const FieldElement& a) const {
    if (a.coeffs.size() != m_)
        throw FieldMismatch("element has " + std::to_string(a.coeffs.size()) +
                            " coefficients, field F_{" + std::to_string(p_) + "^" +
                            std::to_string(m_) + "} expects " + std::to_string(m_));
    for (auto c : a.coeffs)
        if (c >= p_) throw FieldMismatch("element coefficient not reduced mod " + std::to_string(p_));
}

FieldElement FieldDescriptor::zero() const { return FieldElement{std::vector<std::uint64_t>(m_, 0)}; }

FieldElement FieldDescriptor::one() const {
    FieldElement e = zero();
    e.coeffs[0] = 1 % p_;
    return e;
}

FieldElement FieldDescriptor::from_integer(const mpz_class& value) const {
    mpz_class r = value % static_cast<unsigned long>(p_);
    if (r < 0) r += static_cast<unsigned long>(p_);
    FieldElement e = zero();
    e.coeffs[0] = r.get_ui();
    return e;
}

FieldElement FieldDescriptor::add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement out = zero();
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t s = a.coeffs[i] + b.coeffs[i];
        out.coeffs[i] = s >= p_ ? s - p_ : s;
    }
    return out;
}

FieldElement FieldDescriptor::neg(const FieldElement& a) const {
    check(a);
    FieldElement out = zero();
    for (unsigned i = 0; i < m_; ++i) out.coeffs[i] = a.coeffs[i] == 0 ? 0 : p_ - a.coeffs[i];
    return out;
}

FieldElement FieldDescriptor::sub(const FieldElement& a, const FieldElement& b) const {
    return add(a, neg(b));
}

FieldElement FieldDescriptor::mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    Poly r = poly_mulmod(a.coeffs, b.coeffs, defining_, p_);
    FieldElement out = zero();
    for (std::size_t i = 0; i < r.size(); ++i) out.coeffs[i] = r[i];
    return out;
}

bool FieldDescriptor::is_zero(const FieldElement& a) const {
    check(a);
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](std::uint64_t c) { return c == 0; });
}

FieldElement FieldDescriptor::inv(const FieldElement& a) const {
    check(a);
    if (is_zero(a)) throw DivisionByZero();
    if (m_ == 1) {
        FieldElement out = zero();
        out.coeffs[0] = mod_inverse(a.coeffs[0], p_);
        return out;
    }
    Poly ap = a.coeffs;
    trim(ap);
    Poly u = poly_ext_gcd_u(ap, defining_, p_);
    Poly r = poly_mod(std::move(u), defining_, p_);
    FieldElement out = zero();
    for (std::size_t i = 0; i < r.size(); ++i) out.coeffs[i] = r[i];
    return out;
}

FieldElement FieldDescriptor::pow(const FieldElement& a, std::uint64_t e) const {
    check(a);
    FieldElement result = one();
    FieldElement base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElement FieldDescriptor::pow(const FieldElement& a, const mpz_class& e) const {
    check(a);
    if (e < 0) return pow(inv(a), mpz_class(-e));
    FieldElement result = one();
    FieldElement base = a;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

FieldElement FieldDescriptor::frobenius(const FieldElement& a) const { return pow(a, p_); }

std::uint64_t FieldDescriptor::encode(const FieldElement& a) const {
    check(a);
    std::uint64_t idx = 0;
    for (unsigned i = m_; i-- > 0;) idx = idx * p_ + a.coeffs[i];
    return idx;
}

FieldElement FieldDescriptor::decode(std::uint64_t index) const {
    FieldElement e = zero();
    for (unsigned i = 0; i < m_; ++i) {
        e.coeffs[i] = index % p_;
        index /= p_;
    }
    if (index != 0) throw FieldMismatch("element index out of range");
    return e;
}

std::vector<FieldElement> FieldDescriptor::enumerate_elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (std::uint64_t i = 0; i < q_; ++i) out.push_back(decode(i));
    return out;
}

void FieldDescriptor::build_tables() {
    const std::uint64_t q = q_;
    digits_.resize(q * m_);
    for (std::uint64_t idx = 0; idx < q; ++idx) {
        std::uint64_t rest = idx;
        for (unsigned j = 0; j < m_; ++j) {
            digits_[idx * m_ + j] = static_cast<std::uint32_t>(rest % p_);
            rest /= p_;
        }
    }

    // find a generator of F_q^* by exhausting candidates in index order
    auto factors = prime_factors_u64(q - 1);
    FieldElement gen;
    bool found = false;
    for (std::uint64_t cand = 1; cand < q && !found; ++cand) {
        FieldElement g = decode(cand);
        bool ok = true;
        for (auto f : factors) {
            if (pow(g, (q - 1) / f) == one()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = g;
            found = true;
        }
    }
    if (!found) throw InternalInconsistency("no multiplicative generator found");

    log_.assign(q, 0);
    exp_.assign(2 * (q - 1), 0);
    FieldElement acc = one();
    for (std::uint64_t i = 0; i < q - 1; ++i) {
        std::uint64_t idx = encode(acc);
        exp_[i] = static_cast<std::uint32_t>(idx);
        exp_[i + (q - 1)] = static_cast<std::uint32_t>(idx);
        log_[idx] = static_cast<std::uint32_t>(i);
        acc = mul(acc, gen);
    }
    if (acc != one()) throw InternalInconsistency("generator order mismatch");
    has_tables_ = true;
}

std::uint64_t FieldDescriptor::mul_index(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables_) return exp_[log_[a] + log_[b]];
    if (m_ == 1) return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p_);
    return encode(mul(decode(a), decode(b)));
}

std::uint64_t FieldDescriptor::add_index(std::uint64_t a, std::uint64_t b) const {
    if (m_ == 1) {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    if (has_tables_) {
        std::uint64_t idx = 0;
        const std::uint32_t* da = &digits_[a * m_];
        const std::uint32_t* db = &digits_[b * m_];
        for (unsigned j = m_; j-- > 0;) {
            std::uint64_t s = static_cast<std::uint64_t>(da[j]) + db[j];
            if (s >= p_) s -= p_;
            idx = idx * p_ + s;
        }
        return idx;
    }
    return encode(add(decode(a), decode(b)));
}

std::uint64_t FieldDescriptor::pow_index(std::uint64_t a, std::uint64_t e) const {
    if (e == 0) return 1 % q_ == 0 ? 0 : 1;
    if (a == 0) return 0;
    if (has_tables_) {
        std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
        return exp_[l];
    }
    return encode(pow(decode(a), e));
}

std::string FieldDescriptor::element_string(const FieldElement& a) const {
    check(a);
    std::ostringstream os;
    bool first = true;
    for (unsigned i = 0; i < m_; ++i) {
        if (a.coeffs[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || a.coeffs[i] != 1) os << a.coeffs[i];
        if (i >= 1 && a.coeffs[i] != 1) os << "*";
        if (i == 1) os << "x";
        if (i > 1) os << "x^" << i;
    }
    if (first) os << "0";
    return os.str();
}

std::string FieldDescriptor::defining_poly_string() const {
    std::ostringstream os;
    if (m_ == 1)
        os << "x";
    else
        os << "x^" << m_;
    for (unsigned i = m_; i-- > 0;) {
        if (defining_[i] == 0) continue;
        os << " + ";
        if (i == 0 || defining_[i] != 1) os << defining_[i];
        if (i >= 1 && defining_[i] != 1) os << "*";
        if (i == 1) os << "x";
        if (i > 1) os << "x^" << i;
    }
    return os.str();
}

} // namespace axkatz
