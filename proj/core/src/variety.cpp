#include "axkatz/variety.hpp"

#include "axkatz/errors.hpp"

namespace axkatz {

PolynomialSystem system_from_input(const VarietyInput& input) {
    if (input.n < 1) throw InvalidInput("ambient projective dimension must be >= 1");
    std::vector<MultiPoly> polys;
    polys.reserve(input.equations.size());
    for (const auto& text : input.equations) polys.push_back(parse_poly(text, input.n + 1));
    return PolynomialSystem(input.n, std::move(polys));
}

} // namespace axkatz
