#include "trivar/io.hpp"

#include "trivar/classify.hpp"
#include "trivar/errors.hpp"
#include "trivar/relations.hpp"

namespace trivar {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

long long require_int(const json& j, const std::string& key) {
    if (!j.is_number_integer())
        throw ParseError("\"" + key + "\" must be an integer");
    return j.get<long long>();
}

} // namespace

TrinomialDatum parse_input_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("input document must be a JSON object");
    for (const char* key : {"type", "r", "m", "n", "l", "A"})
        if (!doc.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");

    TrinomialDatum d;
    if (!doc["type"].is_string() ||
        (doc["type"] != "1" && doc["type"] != "2"))
        throw ParseError("\"type\" must be the string \"1\" or \"2\"");
    d.type = doc["type"] == "1" ? VarietyType::Type1 : VarietyType::Type2;

    d.r = static_cast<int>(require_int(doc["r"], "r"));
    d.m = static_cast<int>(require_int(doc["m"], "m"));

    if (!doc["l"].is_array()) throw ParseError("\"l\" must be an array of arrays");
    for (const json& tup : doc["l"]) {
        if (!tup.is_array() ) throw ParseError("\"l\" entries must be arrays");
        std::vector<long long> exps;
        for (const json& e : tup) exps.push_back(require_int(e, "l"));
        d.exponents.push_back(std::move(exps));
    }

    if (!doc["n"].is_array() || doc["n"].size() != d.exponents.size())
        throw ParseError("\"n\" must list one tuple size per entry of \"l\"");
    for (std::size_t p = 0; p < d.exponents.size(); ++p)
        if (require_int(doc["n"][p], "n") != static_cast<long long>(d.exponents[p].size()))
            throw ParseError("\"n\"[" + std::to_string(p) + "] contradicts the length of \"l\"[" +
                             std::to_string(p) + "]");

    const json& A = doc["A"];
    if (!A.is_array()) throw ParseError("\"A\" must be an array");
    if (d.type == VarietyType::Type1) {
        for (const json& a : A) {
            if (!a.is_string()) throw ParseError("Type 1 \"A\" entries must be rational strings");
            d.constants.push_back(Rational::from_string(a.get<std::string>()));
        }
    } else {
        if (A.size() != 2 || !A[0].is_array() || !A[1].is_array())
            throw ParseError("Type 2 \"A\" must be two rows of rational strings");
        if (A[0].size() != A[1].size())
            throw ParseError("Type 2 \"A\" rows must have equal length");
        for (std::size_t c = 0; c < A[0].size(); ++c) {
            if (!A[0][c].is_string() || !A[1][c].is_string())
                throw ParseError("Type 2 \"A\" entries must be rational strings");
            d.columns.push_back({Rational::from_string(A[0][c].get<std::string>()),
                                 Rational::from_string(A[1][c].get<std::string>())});
        }
    }
    return d;
}

ordered_json datum_to_json(const TrinomialDatum& d) {
    ordered_json out;
    out["type"] = d.type == VarietyType::Type1 ? "1" : "2";
    out["r"] = d.r;
    out["m"] = d.m;
    ordered_json n = ordered_json::array(), l = ordered_json::array();
    for (const auto& tup : d.exponents) {
        n.push_back(tup.size());
        l.push_back(tup);
    }
    out["n"] = std::move(n);
    out["l"] = std::move(l);
    if (d.type == VarietyType::Type1) {
        ordered_json a = ordered_json::array();
        for (const Rational& c : d.constants) a.push_back(c.str());
        out["A"] = std::move(a);
    } else {
        ordered_json row0 = ordered_json::array(), row1 = ordered_json::array();
        for (const auto& col : d.columns) {
            row0.push_back(col[0].str());
            row1.push_back(col[1].str());
        }
        out["A"] = ordered_json::array({row0, row1});
    }
    return out;
}

ordered_json validation_to_json(const ValidationReport& rep) {
    ordered_json out;
    out["valid"] = rep.valid;
    ordered_json v = ordered_json::array();
    for (const Violation& viol : rep.violations) {
        ordered_json one;
        one["code"] = viol.code;
        one["message"] = viol.message;
        one["indices"] = viol.indices;
        v.push_back(std::move(one));
    }
    out["violations"] = std::move(v);
    return out;
}

ordered_json classification_report(const TrinomialDatum& d, bool with_witness, int bound,
                                   bool* witness_failed) {
    if (witness_failed) *witness_failed = false;
    ordered_json out;
    out["valid"] = true;

    RigidityVerdict rv = classify_rigidity(d);
    ordered_json rigidity;
    rigidity["rigid"] = rv.rigid;
    rigidity["condition"] = rigidity_condition_name(rv.fired);
    rigidity["exceptional_indices"] = rv.exceptional;
    out["rigidity"] = std::move(rigidity);

    RationalityVerdict rat = classify_rationality(d);
    ordered_json rationality;
    rationality["rational"] = rat.rational;
    rationality["case"] = rationality_case_name(rat.fired);
    out["rationality"] = std::move(rationality);

    out["ell"] = ell(d);
    out["heavy_set"] = heavy_set(d);

    ordered_json case_tag;
    if (d.type == VarietyType::Type2 && rv.rigid) {
        CaseTag tag = residual_case_tag(d);
        case_tag["tag"] = residual_tag_name(tag.tag);
        case_tag["subcase"] = tag.subcase ? std::string(1, tag.subcase) : "";
    } else {
        case_tag["tag"] = "n/a";
        case_tag["subcase"] = "";
    }
    out["case_tag"] = std::move(case_tag);

    ordered_json witness;
    witness["images"] = ordered_json::object();
    witness["depths"] = ordered_json::object();
    if (rv.rigid || !with_witness) {
        witness["status"] = "n/a";
    } else {
        bool failed = false;
        std::optional<WitnessReport> found = try_construct_witness(d, bound, &failed);
        if (witness_failed) *witness_failed = failed;
        if (found) {
            witness["status"] = "verified";
            ordered_json images = ordered_json::object(), depths = ordered_json::object();
            // Canonical variable order: datum variables first, images only for
            // moved variables, depths for every ring generator.
            for (const VariableId& v : d.all_variables()) {
                auto it = found->derivation.images.find(v);
                if (it != found->derivation.images.end() && !it->second.is_zero())
                    images[variable_name(v)] = it->second.str();
                auto dep = found->nilpotency.depths.find(v);
                if (dep != found->nilpotency.depths.end())
                    depths[variable_name(v)] = dep->second;
            }
            witness["images"] = std::move(images);
            witness["depths"] = std::move(depths);
        } else {
            witness["status"] = "not_constructed";
        }
    }
    // status first in the object would be nicer, but key order is insertion
    // order: rebuild with status leading.
    ordered_json witness_ordered;
    witness_ordered["status"] = witness["status"];
    witness_ordered["images"] = witness["images"];
    witness_ordered["depths"] = witness["depths"];
    out["witness"] = std::move(witness_ordered);
    return out;
}

std::string classification_text(const ordered_json& report) {
    std::string out;
    const auto& rig = report["rigidity"];
    const auto& rat = report["rationality"];
    out += "valid: yes\n";
    out += std::string("rigid: ") + (rig["rigid"].get<bool>() ? "yes" : "no") +
           " (condition " + rig["condition"].get<std::string>() + ")\n";
    out += "exceptional indices:";
    for (const auto& i : rig["exceptional_indices"]) out += " " + i.dump();
    out += "\n";
    out += std::string("rational: ") + (rat["rational"].get<bool>() ? "yes" : "no") + " (case " +
           rat["case"].get<std::string>() + ")\n";
    out += "ell:";
    for (const auto& e : report["ell"]) out += " " + e.dump();
    out += "\nheavy set:";
    for (const auto& h : report["heavy_set"]) out += " " + h.dump();
    out += "\ncase tag: " + report["case_tag"]["tag"].get<std::string>();
    std::string sub = report["case_tag"]["subcase"].get<std::string>();
    if (!sub.empty()) out += " subcase " + sub;
    out += "\nwitness: " + report["witness"]["status"].get<std::string>() + "\n";
    for (auto it = report["witness"]["images"].begin(); it != report["witness"]["images"].end();
         ++it)
        out += "  " + it.key() + " -> " + it.value().get<std::string>() + "\n";
    if (!report["witness"]["depths"].empty()) {
        out += "  depths:";
        for (auto it = report["witness"]["depths"].begin();
             it != report["witness"]["depths"].end(); ++it)
            out += " " + it.key() + ":" + it.value().dump();
        out += "\n";
    }
    return out;
}

} // namespace trivar
