#include "surfact/report.hpp"

#include <sstream>

#include "json.hpp"

namespace surfact {

namespace {

using nlohmann::json;

json signature_json(const Signature& sig) {
    return json::array({sig.orbit_genus, json(sig.periods)});
}

Signature signature_from(const json& j) {
    return make_signature(j.at(0).get<int>(), j.at(1).get<std::vector<int>>());
}

json group_json(const GroupSpec& g) {
    return json{{"n", g.base_order()},
                {"m", g.twist_order()},
                {"r", g.twist()},
                {"central", g.has_central_involution()},
                {"name", g.description()}};
}

GroupSpec group_from(const json& j) {
    return GroupSpec(j.at("n").get<int>(), j.at("m").get<int>(), j.at("r").get<int>(),
                     j.at("central").get<bool>());
}

json vector_json(const GeneratingVector& v) {
    json arr = json::array();
    for (const auto& e : v.handles) arr.push_back(json::array({e.base, e.twist, e.central}));
    for (const auto& e : v.periods) arr.push_back(json::array({e.base, e.twist, e.central}));
    return arr;
}

GeneratingVector vector_from(const json& j, const GroupSpec& g, const Signature& sig) {
    GeneratingVector v{g, sig, {}, {}};
    size_t handles = static_cast<size_t>(2 * sig.orbit_genus);
    for (size_t i = 0; i < j.size(); ++i) {
        GroupElement e{j.at(i).at(0).get<int>(), j.at(i).at(1).get<int>(),
                       j.at(i).at(2).get<int>()};
        if (i < handles)
            v.handles.push_back(e);
        else
            v.periods.push_back(e);
    }
    return v;
}

json jacobian_json(const DecompositionReport& rep) {
    json factors = json::array();
    for (const auto& f : rep.factors)
        factors.push_back(
            json{{"subgroup", f.subgroup}, {"genus", f.genus}, {"multiplicity", f.multiplicity}});
    return json{{"factors", factors},
                {"remainder", rep.remainder_dim},
                {"surface_genus", rep.surface_genus},
                {"admissible_equalities", rep.admissible_equalities},
                {"notes", rep.notes}};
}

DecompositionReport jacobian_from(const json& j) {
    DecompositionReport rep;
    for (const auto& f : j.at("factors"))
        rep.factors.push_back({f.at("subgroup").get<std::string>(), f.at("genus").get<int>(),
                               f.at("multiplicity").get<int>()});
    rep.remainder_dim = j.at("remainder").get<int>();
    rep.surface_genus = j.at("surface_genus").get<int>();
    rep.admissible_equalities = j.at("admissible_equalities").get<bool>();
    rep.notes = j.at("notes").get<std::vector<std::string>>();
    return rep;
}

json stratum_json(const StratumReport& s) {
    json reps = json::array();
    for (const auto& v : s.representatives) reps.push_back(vector_json(v));
    json exts = json::array();
    for (const auto& e : s.extensions)
        exts.push_back(json{{"orbit", e.orbit},
                            {"extends", e.extends},
                            {"via", e.via},
                            {"super_orbit", e.super_orbit},
                            {"witness", e.witness}});
    json out{{"signature", signature_json(s.signature)},
             {"group", group_json(s.group)},
             {"vector_count", s.vector_count},
             {"orbit_count", s.orbit_count},
             {"existence_only", s.existence_only},
             {"orbit_sizes", s.orbit_sizes},
             {"representatives", reps},
             {"extensions", exts},
             {"extends_to", s.extends_to},
             {"super_orbit_count", s.super_orbit_count},
             {"full_aut", json{{"order", s.full_aut.order},
                               {"description", s.full_aut.description},
                               {"provenance", s.full_aut.provenance}}},
             {"notes", s.notes}};
    if (s.jacobian) out["jacobian"] = jacobian_json(*s.jacobian);
    return out;
}

StratumReport stratum_from(const json& j) {
    StratumReport s;
    s.signature = signature_from(j.at("signature"));
    s.group = group_from(j.at("group"));
    s.vector_count = j.at("vector_count").get<std::uint64_t>();
    s.orbit_count = j.at("orbit_count").get<std::uint64_t>();
    s.existence_only = j.at("existence_only").get<bool>();
    s.orbit_sizes = j.at("orbit_sizes").get<std::vector<std::uint64_t>>();
    for (const auto& v : j.at("representatives"))
        s.representatives.push_back(vector_from(v, s.group, s.signature));
    for (const auto& e : j.at("extensions"))
        s.extensions.push_back({e.at("orbit").get<int>(), e.at("extends").get<bool>(),
                                e.at("via").get<std::string>(), e.at("super_orbit").get<int>(),
                                e.at("witness").get<std::string>()});
    s.extends_to = j.at("extends_to").get<std::string>();
    s.super_orbit_count = j.at("super_orbit_count").get<std::uint64_t>();
    s.full_aut = {j.at("full_aut").at("order").get<long long>(),
                  j.at("full_aut").at("description").get<std::string>(),
                  j.at("full_aut").at("provenance").get<std::string>()};
    s.notes = j.at("notes").get<std::vector<std::string>>();
    if (j.contains("jacobian")) s.jacobian = jacobian_from(j.at("jacobian"));
    return s;
}

json report_json(const ClassificationReport& r) {
    json strata = json::array();
    for (const auto& s : r.strata) strata.push_back(stratum_json(s));
    json excluded = json::array();
    for (const auto& e : r.excluded_by_citation)
        excluded.push_back(
            json{{"claim", e.claim}, {"citation", e.citation}, {"provenance", e.provenance}});
    return json{{"genus", r.genus},
                {"q", r.q},
                {"lambda", r.lambda},
                {"existence", r.existence},
                {"condition", r.condition},
                {"strata", strata},
                {"computed_empty", r.computed_empty},
                {"excluded_by_citation", excluded}};
}

std::string signature_text(const Signature& sig) { return sig.str(); }

void stratum_header(std::ostringstream& os, const StratumReport& s) {
    os << "  " << signature_text(s.signature) << "  " << s.group.description()
       << "  vectors=" << s.vector_count << "  orbits=" << s.orbit_count;
    if (s.existence_only) os << "  (existence only)";
    os << "\n";
}

} // namespace

std::string report_to_json(const ClassificationReport& report) {
    return report_json(report).dump(2) + "\n";
}

ClassificationReport report_from_json(const std::string& text) {
    json j = json::parse(text);
    ClassificationReport r;
    r.genus = j.at("genus").get<int>();
    r.q = j.at("q").get<int>();
    r.lambda = j.at("lambda").get<int>();
    r.existence = j.at("existence").get<bool>();
    r.condition = j.at("condition").get<std::string>();
    for (const auto& s : j.at("strata")) r.strata.push_back(stratum_from(s));
    r.computed_empty = j.at("computed_empty").get<std::vector<std::string>>();
    for (const auto& e : j.at("excluded_by_citation"))
        r.excluded_by_citation.push_back({e.at("claim").get<std::string>(),
                                          e.at("citation").get<std::string>(),
                                          e.at("provenance").get<std::string>()});
    return r;
}

std::string report_to_table(const ClassificationReport& report) {
    std::ostringstream os;
    os << "genus " << report.genus << "  q=" << report.q << "  |G|=" << report.lambda
       << "(g-1)\n";
    os << "existence: " << (report.existence ? "yes" : "no") << "  (" << report.condition
       << ")\n";
    if (!report.strata.empty()) os << "strata:\n";
    for (const auto& s : report.strata) {
        stratum_header(os, s);
        for (size_t i = 0; i < s.representatives.size(); ++i) {
            os << "    rep[" << i << "] =";
            const auto& v = s.representatives[i];
            for (const auto& e : v.handles)
                os << " (" << e.base << "," << e.twist << "," << e.central << ")";
            for (const auto& e : v.periods)
                os << " (" << e.base << "," << e.twist << "," << e.central << ")";
            os << "\n";
        }
        for (const auto& e : s.extensions) {
            os << "    orbit " << e.orbit << (e.extends ? " extends via " : " fails ") << e.via;
            if (e.extends) os << " -> super orbit " << e.super_orbit;
            if (!e.witness.empty()) os << "  [" << e.witness << "]";
            os << "\n";
        }
        if (!s.extends_to.empty())
            os << "    extends to: " << s.extends_to << " (" << s.super_orbit_count
               << " super orbits)\n";
        if (s.full_aut.order > 0)
            os << "    full automorphism group: " << s.full_aut.description << " of order "
               << s.full_aut.order << "  [" << s.full_aut.provenance << "]\n";
        if (s.jacobian) {
            os << "    JS ~";
            bool first = true;
            for (const auto& f : s.jacobian->factors) {
                os << (first ? " " : " x ") << "J(S/" << f.subgroup << ")";
                if (f.multiplicity > 1) os << "^" << f.multiplicity;
                os << " [genus " << f.genus << "]";
                first = false;
            }
            os << "  remainder " << s.jacobian->remainder_dim << "\n";
            for (const auto& n : s.jacobian->notes) os << "      note: " << n << "\n";
        }
        for (const auto& n : s.notes) os << "    note: " << n << "\n";
    }
    if (!report.computed_empty.empty()) {
        os << "computed empty:\n";
        for (const auto& line : report.computed_empty) os << "  " << line << "\n";
    }
    if (!report.excluded_by_citation.empty()) {
        os << "literature records:\n";
        for (const auto& e : report.excluded_by_citation)
            os << "  [" << e.provenance << "] " << e.claim << " -- " << e.citation << "\n";
    }
    return os.str();
}

std::string vectors_to_json(const ClassificationReport& report) {
    json cases = json::array();
    for (const auto& s : report.strata) {
        json reps = json::array();
        for (const auto& v : s.representatives) reps.push_back(vector_json(v));
        cases.push_back(json{{"signature", signature_json(s.signature)},
                             {"group", group_json(s.group)},
                             {"vector_count", s.vector_count},
                             {"orbit_count", s.orbit_count},
                             {"existence_only", s.existence_only},
                             {"orbit_sizes", s.orbit_sizes},
                             {"representatives", reps}});
    }
    return json{{"genus", report.genus},
                {"q", report.q},
                {"lambda", report.lambda},
                {"existence", report.existence},
                {"cases", cases},
                {"computed_empty", report.computed_empty}}
               .dump(2) +
           "\n";
}

std::string vectors_to_table(const ClassificationReport& report) {
    std::ostringstream os;
    os << "genus " << report.genus << "  lambda=" << report.lambda << "\n";
    for (const auto& s : report.strata) stratum_header(os, s);
    for (const auto& line : report.computed_empty) os << "  " << line << "\n";
    return os.str();
}

std::string jacobians_to_json(const ClassificationReport& report) {
    json entries = json::array();
    for (const auto& s : report.strata) {
        if (!s.jacobian) continue;
        entries.push_back(json{{"signature", signature_json(s.signature)},
                               {"group", group_json(s.group)},
                               {"jacobian", jacobian_json(*s.jacobian)}});
    }
    return json{{"genus", report.genus},
                {"q", report.q},
                {"lambda", report.lambda},
                {"existence", report.existence},
                {"decompositions", entries}}
               .dump(2) +
           "\n";
}

std::string jacobians_to_table(const ClassificationReport& report) {
    std::ostringstream os;
    os << "genus " << report.genus << "  lambda=" << report.lambda << "\n";
    for (const auto& s : report.strata) {
        if (!s.jacobian) continue;
        os << "  " << signature_text(s.signature) << "  " << s.group.description() << ": JS ~";
        bool first = true;
        for (const auto& f : s.jacobian->factors) {
            os << (first ? " " : " x ") << "J(S/" << f.subgroup << ")";
            if (f.multiplicity > 1) os << "^" << f.multiplicity;
            os << " [genus " << f.genus << "]";
            first = false;
        }
        os << "  remainder " << s.jacobian->remainder_dim
           << (s.jacobian->admissible_equalities ? "  (equalities hold)" : "") << "\n";
        for (const auto& n : s.jacobian->notes) os << "      note: " << n << "\n";
    }
    return os.str();
}

} // namespace surfact
