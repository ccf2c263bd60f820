#include "axkatz/report_json.hpp"

#include <json.hpp>

namespace axkatz {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string str(const mpz_class& x) { return x.get_str(); }

std::string str(const mpq_class& x) {
    return x.get_den() == 1 ? x.get_num().get_str() : x.get_str();
}

ordered_json to_json(const std::vector<mpz_class>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(str(x));
    return a;
}

ordered_json to_json(const NewtonPolygon& poly) {
    ordered_json j;
    ordered_json verts = ordered_json::array();
    for (const auto& [x, y] : poly.vertices) verts.push_back({x, str(y)});
    j["vertices"] = verts;
    ordered_json slopes = ordered_json::array();
    for (const auto& [slope, mult] : poly.slopes) {
        ordered_json s;
        s["slope"] = str(slope);
        s["multiplicity"] = mult;
        slopes.push_back(s);
    }
    j["slopes"] = slopes;
    return j;
}

ordered_json to_json(const LevelCheck& level) {
    ordered_json j;
    j["s"] = level.s;
    j["modulus"] = str(level.modulus);
    j["remainder"] = str(level.remainder);
    j["pass"] = level.pass;
    j["weak_modulus"] = str(level.weak_modulus);
    j["weak_remainder"] = str(level.weak_remainder);
    j["weak_pass"] = level.weak_pass;
    return j;
}

ordered_json to_json(const AxKatzSection& s) {
    ordered_json j;
    j["kappa"] = s.kappa;
    j["vacuous_empty_system"] = s.vacuous_empty_system;
    ordered_json levels = ordered_json::array();
    for (const auto& l : s.levels) levels.push_back(to_json(l));
    j["levels"] = levels;
    j["pass"] = s.pass;
    return j;
}

ordered_json to_json(const RingMembershipSection& s) {
    ordered_json j;
    j["kappa"] = s.kappa;
    ordered_json levels = ordered_json::array();
    for (const auto& l : s.levels) {
        ordered_json lj;
        lj["s"] = l.s;
        lj["coefficient"] = str(l.coefficient);
        if (l.valuation)
            lj["valuation"] = *l.valuation;
        else
            lj["valuation"] = "inf";
        lj["required"] = l.required;
        lj["pass"] = l.pass;
        levels.push_back(lj);
    }
    j["levels"] = levels;
    j["pass"] = s.pass;
    if (s.kappa_max) j["kappa_max"] = *s.kappa_max;
    return j;
}

ordered_json to_json(const EigenvalueSection& s) {
    ordered_json j;
    j["kappa"] = s.kappa;
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : s.coefficients) {
        ordered_json cj;
        cj["j"] = c.j;
        cj["coefficient"] = str(c.coefficient);
        if (c.valuation)
            cj["valuation"] = *c.valuation;
        else
            cj["valuation"] = "inf";
        cj["required"] = c.required;
        cj["pass"] = c.pass;
        coeffs.push_back(cj);
    }
    j["coefficients"] = coeffs;
    j["pass"] = s.pass;
    if (s.kappa_max) j["kappa_max"] = *s.kappa_max;
    return j;
}

ordered_json to_json(const HodgeDiamond& d) {
    ordered_json j;
    j["m"] = d.m;
    ordered_json rows = ordered_json::array();
    for (const auto& row : d.h) rows.push_back(to_json(row));
    j["h"] = rows;
    j["primitive_middle"] = to_json(d.prim);
    return j;
}

} // namespace

std::string report_to_json(const VerificationReport& report) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["input"] = ordered_json::parse(input_to_json(report.input));

    ordered_json prov;
    prov["S_used"] = report.provenance.S_used;
    prov["budget"] = report.provenance.budget;
    prov["fields"] = report.provenance.fields;
    j["provenance"] = prov;

    ordered_json counts;
    counts["N"] = to_json(report.counts);
    counts["complement"] = to_json(report.complement_counts);
    counts["projective_sizes"] = to_json(report.projective_sizes);
    j["counts"] = counts;

    j["ax_katz"] = to_json(report.ax_katz);

    if (report.fano) {
        ordered_json f;
        ordered_json levels = ordered_json::array();
        for (const auto& l : report.fano->levels) levels.push_back(to_json(l));
        f["levels"] = levels;
        f["pass"] = report.fano->pass;
        j["fano_congruence"] = f;
    }

    if (report.hodge) {
        ordered_json h;
        h["diamond"] = to_json(*report.hodge);
        if (report.hodge_kappa)
            h["kappa_hodge"] = *report.hodge_kappa;
        else {
            h["kappa_hodge"] = nullptr;
            h["no_primitive_marker"] = report.hodge_marker_value;
        }
        h["polygon_primitive"] = to_json(hodge_polygon(*report.hodge, true));
        j["hodge"] = h;
    }

    if (report.middle_factor) j["middle_factor"] = to_json(*report.middle_factor);
    if (report.weil_symmetric) j["weil_symmetric"] = *report.weil_symmetric;

    if (report.newton_hodge) {
        ordered_json nh;
        nh["newton"] = to_json(report.newton_hodge->newton);
        nh["hodge"] = to_json(report.newton_hodge->hodge);
        nh["endpoints_match"] = report.newton_hodge->endpoints_match;
        nh["newton_above"] = report.newton_hodge->newton_above;
        nh["equality"] = report.newton_hodge->equality;
        nh["pass"] = report.newton_hodge->pass;
        j["newton_vs_hodge"] = nh;
    }

    if (report.ring_membership) j["ring_membership"] = to_json(*report.ring_membership);
    if (report.eigenvalue_divisibility)
        j["eigenvalue_divisibility"] = to_json(*report.eigenvalue_divisibility);

    if (report.slopes_proposition) {
        const auto& s = *report.slopes_proposition;
        ordered_json sp;
        sp["kappa_hodge"] = s.kappa_hodge;
        sp["no_primitive"] = s.no_primitive;
        sp["hypothesis_holds"] = s.hypothesis_holds;
        sp["applied_kappa"] = s.applied_kappa;
        sp["eigenvalue_pass"] = s.eigenvalue_pass;
        sp["ring_pass"] = s.ring_pass;
        sp["skipped"] = s.skipped;
        sp["pass"] = s.pass;
        j["hodge_divisibility_implication"] = sp;
    }

    if (report.kappa_agreement) {
        const auto& a = *report.kappa_agreement;
        ordered_json ka;
        ka["kappa_ax_katz"] = a.kappa_ax_katz;
        if (a.kappa_hodge)
            ka["kappa_hodge"] = *a.kappa_hodge;
        else
            ka["kappa_hodge"] = nullptr;
        if (a.kappa_divisibility_max)
            ka["kappa_divisibility_max"] = *a.kappa_divisibility_max;
        else
            ka["kappa_divisibility_max"] = nullptr;
        ka["agree"] = a.agree;
        ka["skipped"] = a.skipped;
        ka["note"] = a.note;
        j["kappa_agreement"] = ka;
    }

    j["notes"] = report.notes;
    j["budget_partial"] = report.budget_partial;
    j["overall_pass"] = report.overall_pass;
    return j.dump(2) + "\n";
}

std::string input_to_json(const VarietyInput& input) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["name"] = input.name;
    j["n"] = input.n;
    j["equations"] = input.equations;
    j["p"] = input.p;
    j["d"] = input.d;
    j["S"] = input.S;
    ordered_json flags;
    flags["smooth"] = input.smooth ? ordered_json(*input.smooth) : ordered_json(nullptr);
    flags["fano"] = input.fano ? ordered_json(*input.fano) : ordered_json(nullptr);
    flags["complete_intersection"] =
        input.complete_intersection ? ordered_json(*input.complete_intersection)
                                    : ordered_json(nullptr);
    j["flags"] = flags;
    if (input.hodge_n) j["hodge_n"] = *input.hodge_n;
    if (input.hodge_degrees) j["hodge_degrees"] = *input.hodge_degrees;
    if (input.budget) j["budget"] = *input.budget;
    return j.dump(2) + "\n";
}

VarietyInput input_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("input document is not valid JSON: ") + e.what());
    }
    try {
        VarietyInput in;
        if (j.contains("schema_version") && j["schema_version"].get<int>() != kSchemaVersion)
            throw InvalidInput("unsupported schema_version");
        in.name = j.value("name", std::string("unnamed"));
        if (!j.contains("n")) throw InvalidInput("input document needs \"n\"");
        in.n = j["n"].get<unsigned>();
        if (j.contains("equations"))
            in.equations = j["equations"].get<std::vector<std::string>>();
        in.p = j.value("p", 2ull);
        in.d = j.value("d", 1u);
        in.S = j.value("S", 1u);
        if (in.S < 1) throw InvalidInput("S must be >= 1");
        if (j.contains("flags")) {
            const auto& f = j["flags"];
            if (f.contains("smooth") && !f["smooth"].is_null())
                in.smooth = f["smooth"].get<bool>();
            if (f.contains("fano") && !f["fano"].is_null()) in.fano = f["fano"].get<bool>();
            if (f.contains("complete_intersection") && !f["complete_intersection"].is_null())
                in.complete_intersection = f["complete_intersection"].get<bool>();
        }
        if (j.contains("hodge_n")) in.hodge_n = j["hodge_n"].get<unsigned>();
        if (j.contains("hodge_degrees"))
            in.hodge_degrees = j["hodge_degrees"].get<std::vector<unsigned>>();
        if (j.contains("budget")) in.budget = j["budget"].get<std::uint64_t>();
        return in;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed input document: ") + e.what());
    }
}

} // namespace axkatz
