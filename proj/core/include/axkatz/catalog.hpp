#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axkatz/variety.hpp"

namespace axkatz {

/// Built-in variety with trusted flags and fixtures established by
/// independent brute force (kept small enough to recheck in tests).
struct CatalogEntry {
    VarietyInput input;
    std::string description;

    std::optional<std::string> expected_n1;            // |X(F_q)| at level 1
    std::optional<unsigned> expected_kappa;            // Ax-Katz kappa
    std::optional<std::vector<long>> expected_middle;  // middle factor coefficients
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

} // namespace axkatz
