#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "axkatz/errors.hpp"

namespace axkatz {

/// Element of F_{p^m}: the reduced coefficient vector (c_0 .. c_{m-1}) of a
/// residue class modulo the defining polynomial, each entry in [0, p).
/// Plain data; ownership of the field lives in FieldDescriptor.
struct FieldElement {
    std::vector<std::uint64_t> coeffs;

    bool operator==(const FieldElement& other) const { return coeffs == other.coeffs; }
    bool operator!=(const FieldElement& other) const { return !(*this == other); }
};

/// An extension field F_{p^m} with a deterministic monic defining polynomial:
/// the minimal irreducible one when the coefficient vector (c_0..c_{m-1}) is
/// read as a base-p integer. Immutable after construction; safe to share
/// across threads.
///
/// When q = p^m fits in 16 bits the descriptor precomputes discrete-log /
/// antilog and digit tables so kernels can work on element indices. Table and
/// generic arithmetic produce bit-identical results.
class FieldDescriptor {
public:
    static constexpr std::uint64_t kMaxPrime = (1ull << 31) - 1;
    static constexpr std::uint64_t kTableLimit = 1ull << 16;

    std::uint64_t p() const { return p_; }
    unsigned m() const { return m_; }
    std::uint64_t q() const { return q_; }

    /// Monic defining polynomial as coefficients (c_0 .. c_{m-1}, 1), degree m.
    const std::vector<std::uint64_t>& defining_poly() const { return defining_; }
    std::string defining_poly_string() const;

    FieldElement zero() const;
    FieldElement one() const;

    /// Embeds an integer via reduction mod p (constant polynomial).
    FieldElement from_integer(const mpz_class& value) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, const mpz_class& e) const;
    FieldElement pow(const FieldElement& a, std::uint64_t e) const;

    /// a ^ p. Applying it m times is the identity.
    FieldElement frobenius(const FieldElement& a) const;

    bool is_zero(const FieldElement& a) const;

    /// Canonical index of an element: coefficient vector read base p,
    /// constant term least significant. Index 0 is zero, index 1 is one.
    std::uint64_t encode(const FieldElement& a) const;
    FieldElement decode(std::uint64_t index) const;

    /// All q elements in canonical index order.
    std::vector<FieldElement> enumerate_elements() const;

    // Index-level arithmetic. Falls back to decode/op/encode when no tables
    // were built; with tables it is a handful of array lookups.
    bool has_tables() const { return has_tables_; }
    std::uint64_t mul_index(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow_index(std::uint64_t a, std::uint64_t e) const;

    // Raw table access for counting kernels. Valid only when has_tables().
    const std::uint32_t* log_table() const { return log_.data(); }
    const std::uint32_t* exp_table() const { return exp_.data(); }
    const std::uint32_t* digit_table() const { return digits_.data(); }

    std::string element_string(const FieldElement& a) const;

private:
    friend std::shared_ptr<const FieldDescriptor>
    build_field(std::uint64_t, unsigned, bool);

    FieldDescriptor(std::uint64_t p, unsigned m, std::vector<std::uint64_t> defining,
                    bool enable_tables);

    void check(const FieldElement& a) const;
    void build_tables();

    std::uint64_t p_;
    unsigned m_;
    std::uint64_t q_;
    std::vector<std::uint64_t> defining_;

    bool has_tables_ = false;
    std::vector<std::uint32_t> log_;    // size q, log_[0] unused
    std::vector<std::uint32_t> exp_;    // size 2(q-1)
    std::vector<std::uint32_t> digits_; // q * m, base-p digits per index
};

using FieldPtr = std::shared_ptr<const FieldDescriptor>;

/// Constructs F_{p^m} with the canonical-minimal irreducible defining
/// polynomial, found by scanning monic degree-m polynomials in base-p order.
/// Deterministic: repeated calls return identical descriptors.
FieldPtr build_field(std::uint64_t p, unsigned m, bool enable_tables = true);

/// Rabin irreducibility test for a monic polynomial over F_p, given as
/// coefficients (c_0 .. c_m) with c_m = 1.
bool is_irreducible(const std::vector<std::uint64_t>& f, std::uint64_t p);

} // namespace axkatz
