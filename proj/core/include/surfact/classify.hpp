#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfact/extensions.hpp"
#include "surfact/jacobian.hpp"

namespace surfact {

struct ExtensionVerdict {
    int orbit = 0;          // orbit index within the stratum
    bool extends = false;
    std::string via;        // word table name
    int super_orbit = -1;   // orbit index within the supergroup reduction
    std::string witness;    // e.g. "Theta_2" or "theta_{3,m}, m=4, l=7"
};

struct FullAutVerdict {
    long long order = 0;
    std::string description;
    std::string provenance; // "computed" or "computed; maximality cited ..."
};

struct StratumReport {
    Signature signature;
    GroupSpec group;
    std::uint64_t vector_count = 0;
    std::uint64_t orbit_count = 0;
    bool existence_only = false;
    std::vector<std::uint64_t> orbit_sizes;        // sums to vector_count
    std::vector<GeneratingVector> representatives; // capped at orbit_cap
    std::vector<ExtensionVerdict> extensions;
    std::string extends_to;
    std::uint64_t super_orbit_count = 0;
    FullAutVerdict full_aut;
    std::optional<DecompositionReport> jacobian;
    std::vector<std::string> notes;
};

struct CitationRecord {
    std::string claim;
    std::string citation;
    std::string provenance; // "cited" or "computed"
};

struct ClassificationReport {
    int genus = 0;
    int q = 0;
    int lambda = 0;
    bool existence = false;
    std::string condition;
    std::vector<StratumReport> strata;
    std::vector<std::string> computed_empty;
    std::vector<CitationRecord> excluded_by_citation;
};

struct ClassifyOptions {
    int workers = 0;
    std::uint64_t max_vectors = 32'000'000;
    int orbit_cap = 8;
    int aut_bound = 4096;
    bool with_extensions = true;
    bool with_jacobians = true;
};

/// Candidate groups of order lambda*(g-1), from the Sylow analysis of the
/// family (the normal Sylow-q forces a semidirect product C_q x| H).
std::vector<GroupSpec> candidate_groups(int q, int lambda);

/**
 * Full per-genus classification for lambda in {3,5,6}: signatures, orbit
 * reduction for every candidate group, extension checks against the
 * relevant supergroup, full-automorphism verdicts, Jacobian decompositions.
 * Throws GenusTooSmall (g < 8), NotPrime (g-1 composite), UnsupportedOrder.
 */
ClassificationReport classify_genus(int genus, int lambda, const ClassifyOptions& opts = {});

} // namespace surfact
