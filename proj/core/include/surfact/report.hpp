#pragma once

#include <string>

#include "surfact/classify.hpp"

namespace surfact {

/**
 * JSON schema (stable; keys serialized alphabetically, 2-space indent):
 *
 * { "genus", "q", "lambda", "existence", "condition",
 *   "strata": [ { "signature": [h, [m...]],
 *                 "group": {"n","m","r","central","name"},
 *                 "vector_count", "orbit_count", "existence_only",
 *                 "representatives": [ [[i,j,z], ...], ... ],   // capped
 *                 "extensions": [ {"orbit","extends","via","super_orbit","witness"} ],
 *                 "extends_to", "super_orbit_count",
 *                 "full_aut": {"order","description","provenance"},
 *                 "jacobian": {"factors":[{"subgroup","genus","multiplicity"}],
 *                              "remainder","surface_genus",
 *                              "admissible_equalities","notes":[...]},
 *                 "notes": [...] } ],
 *   "computed_empty": [...],
 *   "excluded_by_citation": [ {"claim","citation","provenance"} ] }
 */
std::string report_to_json(const ClassificationReport& report);
ClassificationReport report_from_json(const std::string& text);

/// Plain-text rendering for terminals.
std::string report_to_table(const ClassificationReport& report);

/// Reduced renderings for the `vectors` and `jacobian` subcommands.
std::string vectors_to_json(const ClassificationReport& report);
std::string vectors_to_table(const ClassificationReport& report);
std::string jacobians_to_json(const ClassificationReport& report);
std::string jacobians_to_table(const ClassificationReport& report);

} // namespace surfact
