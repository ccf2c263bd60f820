#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "axkatz/catalog.hpp"
#include "axkatz/congruence.hpp"
#include "axkatz/report_json.hpp"

namespace {

using namespace axkatz;

// exit codes: 0 pass, 1 check failure, 2 input error, 3 budget exceeded
constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct CommonArgs {
    std::string input_file;
    std::string catalog_name;
    std::uint64_t p = 0; // 0 = keep source value
    unsigned d = 0;
    unsigned S = 0;
    unsigned workers = 0;
    std::uint64_t budget = 0;
    bool json = false;
    bool text = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool field_overrides = true) {
    cmd->add_option("--input", args.input_file, "variety input document (JSON)");
    cmd->add_option("--catalog", args.catalog_name, "built-in catalog entry name");
    if (field_overrides) {
        cmd->add_option("--p", args.p, "prime p (overrides the source document)");
        cmd->add_option("--d", args.d, "base extension degree d, q = p^d");
        cmd->add_option("--S", args.S, "tower height");
    }
    cmd->add_option("--workers,-w", args.workers, "worker threads (0 = auto)");
    cmd->add_option("--budget", args.budget, "kernel-evaluation budget");
    auto* json_flag = cmd->add_flag("--json", args.json, "machine-readable output");
    cmd->add_flag("--text", args.text, "human-readable output (default)")->excludes(json_flag);
}

VarietyInput load_input(const CommonArgs& args) {
    VarietyInput in;
    if (!args.catalog_name.empty()) {
        in = catalog_entry(args.catalog_name).input;
    } else if (!args.input_file.empty()) {
        std::ifstream f(args.input_file);
        if (!f) throw InvalidInput("cannot open input file: " + args.input_file);
        std::stringstream buffer;
        buffer << f.rdbuf();
        in = input_from_json(buffer.str());
    } else {
        throw InvalidInput("either --input FILE or --catalog NAME is required");
    }
    if (args.p != 0) in.p = args.p;
    if (args.d != 0) in.d = args.d;
    if (args.S != 0) in.S = args.S;
    if (args.budget != 0) in.budget = args.budget;
    return in;
}

ReportOptions make_options(const CommonArgs& args) {
    ReportOptions opts;
    opts.counting.workers = args.workers;
    if (args.budget != 0) opts.counting.budget = args.budget;
    return opts;
}

std::string poly_string(const std::vector<mpz_class>& coeffs) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << ", ";
        os << coeffs[i].get_str();
    }
    os << "]";
    return os.str();
}

std::string slopes_string(const NewtonPolygon& poly) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [slope, mult] : poly.slopes) {
        if (!first) os << ", ";
        first = false;
        os << slope.get_str() << " x" << mult;
    }
    os << "}";
    return os.str();
}

int cmd_count(const CommonArgs& args) {
    VarietyInput in = load_input(args);
    PolynomialSystem system = system_from_input(in);
    CountOptions copts = make_options(args).counting;
    if (in.budget) copts.budget = *in.budget;
    PointCountSequence counts = count_tower(system, in.p, in.d, in.S, copts);
    if (args.json) {
        std::ostringstream os;
        os << "{\n  \"name\": \"" << in.name << "\",\n  \"N\": [";
        for (unsigned s = 0; s < counts.S; ++s)
            os << (s ? ", " : "") << "\"" << counts.counts[s].get_str() << "\"";
        os << "],\n  \"complement\": [";
        for (unsigned s = 0; s < counts.S; ++s)
            os << (s ? ", " : "") << "\"" << counts.complement_counts[s].get_str() << "\"";
        os << "]\n}\n";
        std::cout << os.str();
    } else {
        std::cout << in.name << " over F_" << in.p << "^" << in.d << ", S = " << in.S << "\n";
        for (unsigned s = 1; s <= counts.S; ++s) {
            std::cout << "  s=" << s << ": N = " << counts.counts[s - 1].get_str()
                      << ", |P^n| - N = " << counts.complement_counts[s - 1].get_str() << "\n";
        }
    }
    return kExitPass;
}

int cmd_zeta(const CommonArgs& args, unsigned deg_num, unsigned deg_den, bool have_degrees) {
    VarietyInput in = load_input(args);
    PolynomialSystem system = system_from_input(in);
    CountOptions copts = make_options(args).counting;
    if (in.budget) copts.budget = *in.budget;
    PointCountSequence counts = count_tower(system, in.p, in.d, in.S, copts);
    ZetaSeries series = series_from_counts(counts, false);

    // degree bounds from the Hodge side for complete intersections, else from the user
    std::optional<HodgeDiamond> diamond;
    unsigned m = 0;
    if (!have_degrees) {
        const bool ci = in.smooth.value_or(false) && in.complete_intersection.value_or(false) &&
                        (in.hodge_degrees || !system.empty());
        if (!ci)
            throw InvalidInput(
                "degree bounds unknown: pass --deg-num/--deg-den or use a smooth "
                "complete-intersection input");
        CompleteIntersectionSpec spec(in.hodge_n.value_or(in.n),
                                      in.hodge_degrees ? *in.hodge_degrees : system.degrees());
        diamond = hodge_numbers(spec);
        m = spec.m();
        mpz_class b = diamond->b_prim();
        if (!b.fits_uint_p()) throw InvalidInput("primitive Betti number too large");
        unsigned bp = static_cast<unsigned>(b.get_ui());
        if (m % 2 == 1) {
            deg_num = bp;
            deg_den = m + 1;
        } else {
            deg_num = 0;
            deg_den = m + 1 + bp;
        }
    }

    RationalZeta zeta = pade_reconstruct(series, deg_num, deg_den);
    std::cout << "zeta(" << in.name << ") numerator:   " << poly_string(zeta.numerator) << "\n";
    std::cout << "zeta(" << in.name << ") denominator: " << poly_string(zeta.denominator) << "\n";
    if (zeta.numerator.size() > 1)
        std::cout << "numerator Newton slopes:   "
                  << slopes_string(newton_polygon(zeta.numerator, in.p, in.d)) << "\n";
    if (zeta.denominator.size() > 1)
        std::cout << "denominator Newton slopes: "
                  << slopes_string(newton_polygon(zeta.denominator, in.p, in.d)) << "\n";

    if (diamond) {
        mpz_class b = diamond->b_prim();
        unsigned bp = static_cast<unsigned>(b.get_ui());
        std::vector<mpz_class> middle = extract_middle_factor(series, m, bp);
        std::cout << "middle factor P_m:         " << poly_string(middle) << "\n";
        if (middle.size() > 1)
            std::cout << "middle factor slopes:      "
                      << slopes_string(newton_polygon(middle, in.p, in.d)) << "\n";
    }
    return kExitPass;
}

int cmd_verify(const CommonArgs& args, bool corrupt, long kappa_override) {
    VarietyInput in = load_input(args);
    ReportOptions opts = make_options(args);
    opts.corrupt_counts = corrupt;
    if (kappa_override >= 0) opts.kappa_override = static_cast<unsigned>(kappa_override);
    VerificationReport report = full_report(in, opts);
    if (args.json) {
        std::cout << report_to_json(report);
    } else {
        std::cout << "verify " << in.name << "\n";
        std::cout << "  ax-katz kappa = " << report.ax_katz.kappa
                  << (report.ax_katz.vacuous_empty_system ? " (empty system, vacuous)" : "")
                  << ": " << (report.ax_katz.pass ? "pass" : "FAIL") << "\n";
        if (report.fano)
            std::cout << "  fano congruence: " << (report.fano->pass ? "pass" : "FAIL") << "\n";
        if (report.hodge) {
            std::cout << "  hodge kappa = ";
            if (report.hodge_kappa)
                std::cout << *report.hodge_kappa;
            else
                std::cout << "m+1 (no primitive cohomology, marker " << report.hodge_marker_value
                          << ")";
            std::cout << "\n";
        }
        if (report.middle_factor)
            std::cout << "  middle factor = " << poly_string(*report.middle_factor) << "\n";
        if (report.weil_symmetric)
            std::cout << "  weil symmetry: " << (*report.weil_symmetric ? "pass" : "FAIL") << "\n";
        if (report.newton_hodge)
            std::cout << "  newton above hodge: "
                      << (report.newton_hodge->pass ? "pass" : "FAIL")
                      << (report.newton_hodge->equality ? " (equality)" : "") << "\n";
        if (report.ring_membership)
            std::cout << "  ring membership at kappa = " << report.ring_membership->kappa << ": "
                      << (report.ring_membership->pass ? "pass" : "FAIL") << " (max kappa "
                      << (report.ring_membership->kappa_max
                              ? std::to_string(*report.ring_membership->kappa_max)
                              : "-")
                      << ")\n";
        if (report.eigenvalue_divisibility)
            std::cout << "  eigenvalue divisibility at kappa = "
                      << report.eigenvalue_divisibility->kappa << ": "
                      << (report.eigenvalue_divisibility->pass ? "pass" : "FAIL") << " (max kappa "
                      << (report.eigenvalue_divisibility->kappa_max
                              ? std::to_string(*report.eigenvalue_divisibility->kappa_max)
                              : "-")
                      << ")\n";
        if (report.kappa_agreement && !report.kappa_agreement->skipped)
            std::cout << "  kappa agreement: "
                      << (report.kappa_agreement->agree ? "pass" : "FAIL") << "\n";
        for (const auto& note : report.notes) std::cout << "  note: " << note << "\n";
        std::cout << (report.overall_pass ? "PASS" : "FAIL") << "\n";
    }
    return report.overall_pass ? kExitPass : kExitCheckFailure;
}

int cmd_hodge(unsigned n, std::vector<unsigned> degrees, bool json) {
    CompleteIntersectionSpec spec(n, std::move(degrees));
    HodgeDiamond diamond = hodge_numbers(spec);
    HodgeType ht = hodge_type(diamond);
    if (json) {
        std::ostringstream os;
        os << "{\n  \"m\": " << diamond.m << ",\n  \"h\": [";
        for (unsigned p = 0; p <= diamond.m; ++p) {
            os << (p ? ", " : "") << "[";
            for (unsigned q = 0; q <= diamond.m; ++q)
                os << (q ? ", " : "") << diamond.h[p][q].get_str();
            os << "]";
        }
        os << "],\n  \"primitive_middle\": [";
        for (unsigned p = 0; p <= diamond.m; ++p)
            os << (p ? ", " : "") << diamond.prim[p].get_str();
        os << "],\n  \"kappa_hodge\": ";
        if (ht.no_primitive)
            os << "null,\n  \"no_primitive_marker\": " << ht.kappa;
        else
            os << ht.kappa;
        os << "\n}\n";
        std::cout << os.str();
    } else {
        std::cout << "complete intersection in P^" << spec.n << ", degrees (";
        for (std::size_t i = 0; i < spec.degrees.size(); ++i)
            std::cout << (i ? "," : "") << spec.degrees[i];
        std::cout << "), dimension m = " << diamond.m << "\n";
        for (unsigned p = 0; p <= diamond.m; ++p) {
            std::cout << "  ";
            for (unsigned q = 0; q <= diamond.m; ++q)
                std::cout << diamond.h[p][q].get_str() << (q < diamond.m ? " " : "");
            std::cout << "\n";
        }
        std::cout << "primitive middle row: ";
        for (unsigned p = 0; p <= diamond.m; ++p)
            std::cout << diamond.prim[p].get_str() << (p < diamond.m ? " " : "");
        std::cout << "\n";
        if (ht.no_primitive)
            std::cout << "kappa_hodge: no primitive cohomology (marker " << ht.kappa << ")\n";
        else
            std::cout << "kappa_hodge = " << ht.kappa << "\n";
        NewtonPolygon hp = hodge_polygon(diamond, true);
        std::cout << "primitive Hodge polygon slopes: " << slopes_string(hp) << "\n";
    }
    return kExitPass;
}

int cmd_12a(unsigned kappa_max, unsigned d_max, unsigned n_max, bool json) {
    bool all = true;
    std::ostringstream table;
    unsigned degenerate = 0, total = 0;
    for (unsigned kappa = 1; kappa <= kappa_max; ++kappa) {
        for (unsigned d = 1; d <= d_max; ++d) {
            for (unsigned n = kappa; n <= n_max; ++n) {
                auto rep = check_incidence_vanishing(kappa, d, n);
                ++total;
                if (rep.degenerate) ++degenerate;
                all = all && rep.pass;
                table << "  kappa=" << kappa << " d=" << d << " n=" << n << ": "
                      << (rep.pass ? "true" : "FALSE")
                      << (rep.degenerate ? " (degenerate: no off-diagonal classes)" : "") << "\n";
            }
        }
    }
    if (json) {
        std::cout << "{\"grid_pass\": " << (all ? "true" : "false")
                  << ", \"cases\": " << total << ", \"degenerate\": " << degenerate << "}\n";
    } else {
        std::cout << table.str();
        std::cout << (all ? "all true" : "SOME FALSE") << " (" << total << " cases, " << degenerate
                  << " degenerate)\n";
    }
    return all ? kExitPass : kExitCheckFailure;
}

int cmd_catalog() {
    for (const auto& e : catalog()) {
        std::cout << e.input.name << "  (n=" << e.input.n << ", p=" << e.input.p
                  << ", d=" << e.input.d << ", S=" << e.input.S << ")  " << e.description << "\n";
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"point counts, zeta functions, and congruence checks for projective varieties "
                 "over finite fields"};
    app.require_subcommand(1);

    CommonArgs count_args, zeta_args, verify_args;
    unsigned deg_num = 0, deg_den = 0;
    bool corrupt = false;
    unsigned hodge_n = 0;
    std::vector<unsigned> hodge_degrees;
    bool hodge_json = false, grid_json = false;
    unsigned grid_kappa = 3, grid_d = 5, grid_n = 8;

    auto* count = app.add_subcommand("count", "exhaustive point counts over an extension tower");
    add_common(count, count_args);

    auto* zeta = app.add_subcommand("zeta", "reconstruct the zeta function and Newton polygons");
    add_common(zeta, zeta_args);
    auto* opt_num = zeta->add_option("--deg-num", deg_num, "numerator degree bound");
    auto* opt_den = zeta->add_option("--deg-den", deg_den, "denominator degree bound");

    auto* verify = app.add_subcommand("verify", "run the full congruence verification report");
    add_common(verify, verify_args);
    long kappa_override = -1;
    verify->add_option("--kappa-override", kappa_override,
                       "check divisibility at this kappa instead of the Ax-Katz value");
    verify->add_flag("--corrupt-count", corrupt)->group(""); // test hook, hidden

    auto* hodge = app.add_subcommand("hodge", "Hodge diamond of a smooth complete intersection");
    hodge->add_option("--n", hodge_n, "ambient projective dimension")->required();
    hodge->add_option("--degrees", hodge_degrees, "hypersurface degrees")->required();
    hodge->add_flag("--json", hodge_json, "machine-readable output");

    auto* grid = app.add_subcommand("12a", "vanishing grid for the incidence-hypersurface family");
    grid->add_option("--kappa-max", grid_kappa, "largest kappa (default 3)");
    grid->add_option("--d-max", grid_d, "largest degree (default 5)");
    grid->add_option("--n-max", grid_n, "largest ambient dimension (default 8)");
    grid->add_flag("--json", grid_json, "machine-readable output");

    app.add_subcommand("catalog", "list the built-in catalog");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("count")) return cmd_count(count_args);
        if (app.got_subcommand("zeta"))
            return cmd_zeta(zeta_args, deg_num, deg_den, opt_num->count() && opt_den->count());
        if (app.got_subcommand("verify")) return cmd_verify(verify_args, corrupt, kappa_override);
        if (app.got_subcommand("hodge")) return cmd_hodge(hodge_n, hodge_degrees, hodge_json);
        if (app.got_subcommand("12a")) return cmd_12a(grid_kappa, grid_d, grid_n, grid_json);
        if (app.got_subcommand("catalog")) return cmd_catalog();
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
