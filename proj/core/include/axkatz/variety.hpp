#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "axkatz/poly.hpp"

namespace axkatz {

/// A variety input document: defining equations over P^n plus the field and
/// tower parameters and the trusted flags that gate Hodge-side checks.
struct VarietyInput {
    std::string name;
    unsigned n = 1;
    std::vector<std::string> equations; // polynomial grammar; empty = all of P^n
    std::uint64_t p = 2;
    unsigned d = 1;
    unsigned S = 1;

    std::optional<bool> smooth;                // unknown unless asserted
    std::optional<bool> fano;
    std::optional<bool> complete_intersection;

    /// Overrides the Hodge-side spec when the counting ambient differs from
    /// the complete-intersection presentation (used for P^n itself, realized
    /// as a degree-1 hypersurface in P^{n+1}).
    std::optional<unsigned> hodge_n;
    std::optional<std::vector<unsigned>> hodge_degrees;

    std::optional<std::uint64_t> budget;
};

/// Parses and validates the equations into a PolynomialSystem.
PolynomialSystem system_from_input(const VarietyInput& input);

} // namespace axkatz
