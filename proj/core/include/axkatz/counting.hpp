#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "axkatz/field.hpp"
#include "axkatz/poly.hpp"

namespace axkatz {

/// N_s = |X(F_{q^s})| for s = 1..S over q = p^d, with the complement sizes
/// |P^n(F_{q^s})| - N_s.
struct PointCountSequence {
    std::uint64_t p = 0;
    unsigned d = 1;
    unsigned n = 0;
    unsigned S = 0;
    std::vector<mpz_class> counts;
    std::vector<mpz_class> complement_counts;
};

/// |P^n(F_q)| = 1 + q + ... + q^n.
mpz_class projective_space_size(unsigned n, const mpz_class& q);

struct CountOptions {
    unsigned workers = 0;                    // 0 = hardware concurrency
    std::uint64_t budget = 1'000'000'000ull; // cap on kernel evaluations
    bool use_tables = true;                  // index tables when q <= 2^16
};

/// Streams one representative per point of P^n(F_q): for each pivot i, the
/// vectors with zeros before i, one at i, and arbitrary field elements after
/// i, the trailing block ordered with the last coordinate varying fastest.
class ProjectiveEnumerator {
public:
    ProjectiveEnumerator(unsigned n, FieldPtr field);

    std::uint64_t total() const { return total_; }
    /// Representative with global index r, as element indices.
    std::vector<std::uint64_t> decode(std::uint64_t r) const;

    struct Cursor {
        unsigned pivot = 0;
        std::vector<std::uint64_t> point;
        bool done = false;
    };
    Cursor cursor_at(std::uint64_t r) const;
    void next(Cursor& c) const;

private:
    unsigned n_;
    FieldPtr field_;
    std::uint64_t q_;
    std::uint64_t total_;
    std::vector<std::uint64_t> block_sizes_; // q^{n-i} for pivot i
};

/// Exhaustive |X(F_q)| over projective representatives. Deterministic and
/// independent of the worker count.
mpz_class count_points(const PolynomialSystem& system, const FieldPtr& field,
                       const CountOptions& options = {});

/// Independent verification path: counts affine solutions in A^{n+1}
/// (including the origin) and returns (count - 1)/(q - 1).
mpz_class cone_count_oracle(const PolynomialSystem& system, const FieldPtr& field,
                            const CountOptions& options = {});

/// Counts over F_{p^{d s}} for s = 1..S, each field built independently.
PointCountSequence count_tower(const PolynomialSystem& system, std::uint64_t p, unsigned d,
                               unsigned S, const CountOptions& options = {});

/// Closed-point counts a_e = (1/e) sum_{f | e} mu(e/f) N_f. Throws
/// InternalInconsistency if any fails to be a non-negative integer.
std::vector<mpz_class> closed_point_counts(const PointCountSequence& counts);

/// Estimated kernel evaluations for one level (the enumeration size).
mpz_class counting_cost_estimate(unsigned n, const mpz_class& q);

} // namespace axkatz
