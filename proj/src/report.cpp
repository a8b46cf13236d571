#include "tanaka/report.hpp"

#include <sstream>

namespace tanaka {

namespace {

std::string weight_key(const IntVec& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i > 0) os << ",";
        os << w[i];
    }
    return os.str();
}

nlohmann::ordered_json vec_json(const Vec& v) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const Scalar& s : v) out.push_back(scalar_to_report_string(s));
    return out;
}

nlohmann::ordered_json weight_list_json(const std::vector<IntVec>& ws) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const IntVec& w : ws) out.push_back(w);
    return out;
}

}  // namespace

std::string scalar_to_report_string(const Scalar& s) {
    if (s.is_rational()) return rational_to_string(s.as_rational());
    std::string out = rational_to_string(s.re());
    const std::string im = rational_to_string(s.im());
    if (im[0] != '-') out += "+";
    return out + im + "i";
}

nlohmann::ordered_json algebra_json(const CRAlgebra& alg, const std::string& type_label) {
    nlohmann::ordered_json out;
    out["type"] = type_label;
    out["E"] = alg.e;
    out["J"] = alg.j;
    return out;
}

nlohmann::ordered_json admissibility_json(const CRAlgebra& alg, const std::string& type_label,
                                          const AdmissibilityReport& rpt) {
    nlohmann::ordered_json out;
    out["algebra"] = algebra_json(alg, type_label);
    out["weight"] = rpt.highest;
    auto structures = nlohmann::ordered_json::array();
    for (const AdmissibleStructure& st : rpt.structures) {
        nlohmann::ordered_json sj;
        sj["shift"] = rational_to_string(st.shift);
        sj["k"] = rational_to_string(st.k);
        nlohmann::ordered_json degrees;
        for (const auto& [deg, weights] : st.by_degree)
            for (const IntVec& w : weights) degrees[weight_key(w)] = deg;
        sj["degrees"] = degrees;
        sj["partition"] = {{"p10", weight_list_json(st.p10)}, {"p01", weight_list_json(st.p01)}};
        structures.push_back(std::move(sj));
    }
    out["structures"] = std::move(structures);
    auto rejections = nlohmann::ordered_json::array();
    for (const ShiftRejection& rej : rpt.rejections)
        rejections.push_back({{"shift", rational_to_string(rej.shift)}, {"reason", rej.reason}});
    out["rejections"] = std::move(rejections);
    return out;
}

nlohmann::ordered_json prolongation_json(const Prolongation& p, const std::optional<Vec>& pi,
                                         const std::optional<Vec>& j_element,
                                         const std::vector<Rational>& k_values,
                                         const StructureSummary& structure) {
    nlohmann::ordered_json out;
    nlohmann::ordered_json degrees;
    for (const auto& [deg, dim] : p.layer_dim) degrees[std::to_string(deg)] = dim;
    out["degrees"] = std::move(degrees);
    out["total_dim"] = p.table.dim();
    out["field"] = p.table.field;
    out["truncated"] = p.truncated;
    out["pi"] = pi ? vec_json(*pi) : nlohmann::ordered_json();
    out["J_element"] = j_element ? vec_json(*j_element) : nlohmann::ordered_json();
    auto ks = nlohmann::ordered_json::array();
    for (const Rational& k : k_values) ks.push_back(rational_to_string(k));
    out["k_values"] = std::move(ks);
    out["radical_dim"] = structure.radical_dim;
    out["nilpotent_dim"] = structure.nilradical_dim;
    out["semisimple_ideal_dim"] = structure.semisimple_ideal_dim;
    out["classification"] = structure.classification;
    return out;
}

nlohmann::ordered_json prolongation_json(const ExtensionAnalysis& an) {
    const bool have_parts = !an.prolongation.truncated;
    return prolongation_json(an.prolongation,
                             have_parts ? std::optional<Vec>(an.pi) : std::nullopt, an.j_element,
                             an.k_values, an.structure);
}

std::string dump_report(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace tanaka
