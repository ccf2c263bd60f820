#include "axkatz/catalog.hpp"

#include "axkatz/errors.hpp"

namespace axkatz {

namespace {

VarietyInput make_input(std::string name, unsigned n, std::vector<std::string> equations,
                        std::uint64_t p, unsigned d, unsigned S, bool smooth, bool fano,
                        bool ci) {
    VarietyInput in;
    in.name = std::move(name);
    in.n = n;
    in.equations = std::move(equations);
    in.p = p;
    in.d = d;
    in.S = S;
    in.smooth = smooth;
    in.fano = fano;
    in.complete_intersection = ci;
    return in;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;

    // projective spaces: counted with an empty system, Hodge side presented
    // as a degree-1 hypersurface in one dimension up
    for (unsigned n : {1u, 2u, 3u}) {
        CatalogEntry e;
        e.input = make_input("p" + std::to_string(n), n, {}, 2, 1, 4, true, true, true);
        e.input.hodge_n = n + 1;
        e.input.hodge_degrees = std::vector<unsigned>{1};
        e.description = "projective space P^" + std::to_string(n) + " over F_2";
        e.expected_n1 = n == 1 ? "3" : (n == 2 ? "7" : "15");
        out.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.input = make_input("conic-f2", 2, {"x0*x1 - x2^2"}, 2, 1, 3, true, true, true);
        e.description = "smooth conic in P^2 over F_2";
        e.expected_n1 = "3";
        e.expected_kappa = 1;
        e.expected_middle = std::vector<long>{1};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.input = make_input("cubic-curve-f2", 2, {"x1^2*x2 + x1*x2^2 - x0^3"}, 2, 1, 4, true,
                             false, true);
        e.description = "supersingular plane cubic y^2 z + y z^2 = x^3 over F_2";
        e.expected_n1 = "3";
        e.expected_kappa = 0;
        e.expected_middle = std::vector<long>{1, 0, 2};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.input = make_input("elliptic-5", 2, {"x1^2*x2 - x0^3 + x0*x2^2"}, 5, 1, 4, true, false,
                             true);
        e.description = "ordinary elliptic curve y^2 z = x^3 - x z^2 over F_5";
        e.expected_n1 = "8";
        e.expected_kappa = 0;
        e.expected_middle = std::vector<long>{1, 2, 5};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.input = make_input("elliptic-7ss", 2, {"x1^2*x2 - x0^3 - x0*x2^2"}, 7, 1, 2, true,
                             false, true);
        e.description = "supersingular elliptic curve y^2 z = x^3 + x z^2 over F_7";
        e.expected_n1 = "8";
        e.expected_kappa = 0;
        e.expected_middle = std::vector<long>{1, 0, 7};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.input = make_input("klein-quartic-f2", 2, {"x0^3*x1 + x1^3*x2 + x2^3*x0"}, 2, 1, 6,
                             true, false, true);
        e.description = "Klein quartic curve in P^2 over F_2";
        e.expected_n1 = "3";
        e.expected_kappa = 0;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.input = make_input("quartic-ci-curve-f3", 3,
                             {"x0^2 + x1^2 + x2^2", "x1^2 + 2*x2^2 + x3^2"}, 3, 1, 4, true, false,
                             true);
        e.description = "smooth (2,2) complete-intersection curve in P^3 over F_3";
        e.expected_kappa = 0;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.input = make_input("quadric-surface-f2", 3, {"x0*x3 - x1*x2"}, 2, 1, 4, true, true,
                             true);
        e.description = "split quadric surface in P^3 over F_2";
        e.expected_n1 = "9";
        e.expected_kappa = 1;
        e.expected_middle = std::vector<long>{1, -2};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.input = make_input("quadric-surface-f3", 3, {"x0*x1 + x2^2 + x3^2"}, 3, 1, 4, true,
                             true, true);
        e.description = "non-split quadric surface in P^3 over F_3";
        e.expected_n1 = "10";
        e.expected_kappa = 1;
        e.expected_middle = std::vector<long>{1, 3};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.input = make_input("cubic-surface-f2", 3, {"x0^3 + x1^3 + x2^3 + x3^3"}, 2, 1, 6, true,
                             true, true);
        e.description = "cubic surface x0^3 + x1^3 + x2^3 + x3^3 in P^3 over F_2";
        e.expected_n1 = "7";
        e.expected_kappa = 1;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.input = make_input("quadric3fold-f3", 4, {"x0*x1 + x2*x3 + x4^2"}, 3, 1, 2, true, true,
                             true);
        e.description = "smooth quadric threefold in P^4 over F_3 (no primitive cohomology)";
        e.expected_n1 = "40";
        e.expected_kappa = 2;
        e.expected_middle = std::vector<long>{1};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.input = make_input("quadric4fold-f3", 5, {"x0*x1 + x2*x3 + x4*x5"}, 3, 1, 2, true, true,
                             true);
        e.description = "split quadric fourfold in P^5 over F_3";
        e.expected_n1 = "130";
        e.expected_kappa = 2;
        e.expected_middle = std::vector<long>{1, -9};
        out.push_back(std::move(e));
    }

    return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.input.name == name) return e;
    throw InvalidInput("unknown catalog entry: " + name);
}

} // namespace axkatz
