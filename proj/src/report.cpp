#include "wgc/report.hpp"

#include <sstream>

namespace wgc {

using nlohmann::json;

namespace {

json elem_json(const ExtField::Elem& v) { return json(v); }

json omega_json(const OmegaTriple& o) {
    return json{{"omega1", o.omega1}, {"omega2", o.omega2}, {"omega", o.omega}};
}

}  // namespace

json system_to_json(const WhitemanSystem& sys, bool include_classes) {
    const auto& p = sys.params();
    json j{
        {"n1", p.n1}, {"n2", p.n2}, {"n", p.n}, {"e", p.e},
        {"g", sys.g()}, {"x", sys.x()},
    };
    json sizes = json::array();
    for (int i = 0; i < 6; ++i) sizes.push_back(sys.d_set(i).size());
    j["class_sizes"] = std::move(sizes);
    if (include_classes) {
        json classes;
        for (int i = 0; i < 6; ++i) classes["d" + std::to_string(i)] = sys.d_set(i);
        classes["n1_multiples"] = sys.n1_set();
        classes["n2_multiples"] = sys.n2_set();
        j["classes"] = std::move(classes);
    }
    return j;
}

json classification_to_json(const ClassificationReport& rep) {
    return json{
        {"q_class", to_string(rep.q_class)},
        {"omega", omega_json(rep.omegas)},
        {"omega_case", rep.omega_case},
        {"s_beta", elem_json(rep.sbeta)},
        {"t_beta", elem_json(rep.tbeta)},
        {"m_beta", elem_json(rep.mbeta)},
        {"memberships",
         json{{"s", to_string(rep.memb_s)}, {"t", to_string(rep.memb_t)}, {"m", to_string(rep.memb_m)}}},
        {"branch", rep.branch},
        {"removed_classes", rep.removed},
    };
}

json code_to_json(const WhitemanSystem& sys, const CyclicCode& code) {
    json j{
        {"n", code.n}, {"q", code.q}, {"n1", code.n1}, {"n2", code.n2},
        {"g", sys.g()}, {"x", sys.x()},
        {"k", code.k},
        {"gen", poly_to_comma(code.gen)},
        {"provenance", code.provenance},
    };
    if (code.distance) {
        j["distance"] = json{
            {"kind", code.distance->kind == DistanceMeta::Kind::Exact ? "exact" : "lower-bound"},
            {"value", code.distance->value},
        };
    }
    return j;
}

json distance_to_json(const DistanceResult& res) {
    json j{
        {"kind", to_string(res.kind)},
        {"value", res.value},
        {"method", res.method},
        {"budget_used", res.budget_used},
    };
    if (!res.note.empty()) j["note"] = res.note;
    if (res.min_weight_count != 0) j["min_weight_count"] = res.min_weight_count;
    if (!res.witness.empty()) j["witnesses"] = json::array({res.witness});
    return j;
}

json cross_check_to_json(const WhitemanSystem& sys, const DiscrepancyReport& rep) {
    json j{
        {"oracle", code_to_json(sys, rep.oracle)},
        {"classification", classification_to_json(rep.theorem.report)},
        {"match", rep.match},
        {"da_divides_gcd", rep.da_divides_gcd},
    };
    if (rep.theorem.code)
        j["theorem"] = code_to_json(sys, *rep.theorem.code);
    else
        j["theorem_diagnostic"] = rep.theorem.diagnostic;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

json checks_to_json(const std::vector<CheckResult>& checks) {
    json rows = json::array();
    for (const auto& c : checks) {
        json row{{"name", c.name}, {"ok", c.ok}};
        if (!c.detail.empty()) row["detail"] = c.detail;
        rows.push_back(std::move(row));
    }
    return json{{"checks", std::move(rows)}};
}

namespace {

void render_into(const json& j, const std::string& prefix, std::ostringstream& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            render_into(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i)
            render_into(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << " = " << j.dump() << "\n";
    }
}

}  // namespace

std::string render_table(const json& j) {
    std::ostringstream out;
    render_into(j, "", out);
    return out.str();
}

}  // namespace wgc
