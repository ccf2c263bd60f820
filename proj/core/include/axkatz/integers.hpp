#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace axkatz {

/// base^exp as an exact integer.
inline mpz_class upow(std::uint64_t base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline mpz_class mpow(const mpz_class& base, unsigned long exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// p-adic valuation v_p(x); nullopt for x = 0 (infinite).
inline std::optional<unsigned long> p_adic_valuation(const mpz_class& x, std::uint64_t p) {
    if (x == 0) return std::nullopt;
    mpz_class rem, pz(static_cast<unsigned long>(p));
    unsigned long v = mpz_remove(rem.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
    return v;
}

inline bool divides(const mpz_class& d, const mpz_class& x) {
    if (d == 0) return x == 0;
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exact quotient; the caller guarantees divisibility.
inline mpz_class exact_div(const mpz_class& x, const mpz_class& d) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline bool is_integral(const mpq_class& x) { return x.get_den() == 1; }

/// Deterministic trial-division primality check, valid for all 64-bit inputs
/// at the scales this library enumerates.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    for (std::uint64_t d = 11; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

/// Prime factors of n, ascending, without multiplicity.
inline std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Moebius function over the divisors of small arguments.
inline int moebius_u64(std::uint64_t n) {
    int mu = 1;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

} // namespace axkatz
