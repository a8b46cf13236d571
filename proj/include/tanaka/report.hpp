#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tanaka/graded_cr.hpp"
#include "tanaka/prolong.hpp"

namespace tanaka {

/// Report builders.  All values are exact: integers stay JSON integers,
/// rationals are serialized as "p/q" strings, and no floating point value
/// ever enters a report.  Keys are emitted in a fixed order and containers
/// are iterated in deterministic order, so identical inputs produce
/// identical bytes.

/// "p/q" (or "p" for integers) for a rational; complex scalars become
/// "a+bi" / "a-bi".
std::string scalar_to_report_string(const Scalar& s);

/// {type, E: [ints], J: [ints]}; `type_label` names the input type when the
/// caller knows it ("A2", "custom", ...).
nlohmann::ordered_json algebra_json(const CRAlgebra& alg, const std::string& type_label);

/// Admissibility scan of one module:
/// {algebra, weight, structures: [{shift, k, degrees: {weight: degree},
/// partition: {p10, p01}}], rejections: [{shift, reason}]}.
nlohmann::ordered_json admissibility_json(const CRAlgebra& alg, const std::string& type_label,
                                          const AdmissibilityReport& rpt);

/// Prolongation run:
/// {degrees: {p: dim}, total_dim, field, truncated, pi, J_element, k_values,
/// radical_dim, nilpotent_dim, semisimple_ideal_dim, classification}.
/// `pi` and `J_element` are coefficient arrays over the prolongation basis
/// or null when unavailable (raw nilpotent input has no module projection).
nlohmann::ordered_json prolongation_json(const Prolongation& p, const std::optional<Vec>& pi,
                                         const std::optional<Vec>& j_element,
                                         const std::vector<Rational>& k_values,
                                         const StructureSummary& structure);
nlohmann::ordered_json prolongation_json(const ExtensionAnalysis& an);

/// Canonical byte form of a report: two-space indentation plus a trailing
/// newline.
std::string dump_report(const nlohmann::ordered_json& j);

}  // namespace tanaka
