#include "hamfree/report_json.hpp"

#include <json.hpp>

namespace hamfree {

namespace {

using nlohmann::json;

json params_json(const ExtremalReport& rep) {
    json p;
    p["n"] = rep.n;
    p["r"] = rep.r;
    if (rep.k) p["k"] = *rep.k;
    if (rep.t) p["t"] = *rep.t;
    p["metric"] = rep.metric;
    return p;
}

}  // namespace

std::string to_json_string(const ExtremalReport& rep, bool include_runtime) {
    json j;
    j["schema"] = 1;
    j["theorem"] = rep.theorem;
    j["params"] = params_json(rep);
    j["computed_max"] = rep.computed_max;
    j["predicted_max"] = rep.predicted_max;
    j["verdict"] = rep.verdict;
    j["extremal_graph6"] = rep.computed_extremal;
    j["predicted_graph6"] = rep.predicted_extremal;
    j["characterization_complete"] = rep.characterization_complete;
    if (!rep.note.empty()) j["note"] = rep.note;
    if (include_runtime) j["runtime_ms"] = rep.runtime_ms;
    return j.dump();
}

std::string to_json_string(const DegreeTheoremReport& rep, bool include_runtime) {
    json j;
    j["schema"] = 1;
    j["theorem"] = "degree";
    j["params"] = {{"r", rep.r}, {"ell", rep.ell}, {"n", rep.n}};
    j["bound"] = rep.bound;
    j["in_hypothesis"] = rep.in_hypothesis;
    j["graphs_checked"] = rep.graphs_checked;
    j["hypothesis_hits"] = rep.hypothesis_hits;
    j["violations"] = rep.violations;
    j["equality_graph6"] = rep.equality_set;
    j["predicted_lower_graph6"] = rep.predicted_lower;
    j["predicted_upper_graph6"] = rep.predicted_upper;
    j["verdict"] = rep.verdict;
    if (include_runtime) j["runtime_ms"] = rep.runtime_ms;
    return j.dump();
}

std::string to_json_string(const CliqueBoundReport& rep, bool include_runtime) {
    json j;
    j["schema"] = 1;
    j["theorem"] = rep.r ? "frohmader" : "kk";
    json p;
    p["t"] = rep.t;
    p["m_max"] = rep.m_max;
    if (rep.r) p["r"] = *rep.r;
    j["params"] = p;
    j["vertex_budget"] = rep.vertex_budget;
    j["graphs_checked"] = rep.graphs_checked;
    j["bounds"] = rep.bounds;
    j["bounds_attained"] = rep.bounds_attained;
    if (!rep.first_violation.empty()) j["first_violation"] = rep.first_violation;
    j["verdict"] = rep.verdict;
    if (include_runtime) j["runtime_ms"] = rep.runtime_ms;
    return j.dump();
}

std::string to_json_string(const FamilyCheckReport& rep, bool include_runtime) {
    json j;
    j["schema"] = 1;
    j["theorem"] = "family";
    j["params"] = {{"n", rep.n}, {"r", rep.r}, {"k", rep.k}};
    j["gell_in_hypothesis"] = rep.gell_in_hypothesis;
    j["prop36_in_hypothesis"] = rep.prop36_in_hypothesis;
    j["h_in_hypothesis"] = rep.h_in_hypothesis;
    j["members_checked"] = rep.members_checked;
    j["failures"] = rep.failures;
    j["verdict"] = rep.verdict;
    if (include_runtime) j["runtime_ms"] = rep.runtime_ms;
    return j.dump();
}

std::string to_json_string(const WitnessReport& rep) {
    json j;
    j["schema"] = 1;
    j["theorem"] = "witness";
    j["graph_id"] = rep.graph_id;
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json item;
        item["name"] = c.name;
        item["pass"] = c.pass;
        if (!c.detail.empty()) item["detail"] = c.detail;
        checks.push_back(item);
    }
    j["checks"] = checks;
    j["pass"] = rep.pass;
    return j.dump();
}

const char* const kExtremalCsvHeader =
    "theorem,n,r,k,t,metric,computed_max,predicted_max,verdict,extremal_count";

std::string to_csv_line(const ExtremalReport& rep) {
    std::string out = rep.theorem;
    out += ',' + std::to_string(rep.n);
    out += ',' + std::to_string(rep.r);
    out += ',';
    if (rep.k) out += std::to_string(*rep.k);
    out += ',';
    if (rep.t) out += std::to_string(*rep.t);
    out += ',' + rep.metric;
    out += ',' + std::to_string(rep.computed_max);
    out += ',' + std::to_string(rep.predicted_max);
    out += ',' + rep.verdict;
    out += ',' + std::to_string(rep.computed_extremal.size());
    return out;
}

}  // namespace hamfree
