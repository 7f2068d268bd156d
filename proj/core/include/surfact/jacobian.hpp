#pragma once

#include <span>
#include <string>
#include <vector>

#include "surfact/actions.hpp"
#include "surfact/representations.hpp"

namespace surfact {

struct JacobianFactor {
    std::string subgroup; // label, e.g. "<a>", "<c>", "<cz>"
    int genus = 0;
    int multiplicity = 0;

    friend auto operator<=>(const JacobianFactor&, const JacobianFactor&) = default;
};

/// Isogeny decomposition JS ~ prod J(S/H_i) x P, conjugate factors merged.
struct DecompositionReport {
    std::vector<JacobianFactor> factors;
    int remainder_dim = 0;
    int surface_genus = 0;
    bool admissible_equalities = false; // equality held on every V in the J-set
    std::vector<std::string> notes;     // deviations from stated expectations
};

struct LabeledSubgroup {
    std::string label;
    Subgroup subgroup;
};

/**
 * The set J of representations with nonzero isotypic factor in the Jacobian:
 * the trivial one iff the quotient genus is nonzero, a non-trivial V iff
 * d_V (gamma - 1) + 1/2 sum_i (d_V - d_V^<theta(x_i)>) != 0.
 */
std::vector<Irrep> relevant_representations(const GeneratingVector& v);

/// sum_i d_V^{H_i} <= d_V for every V in the J-set.
bool check_admissible(const GeneratingVector& v, std::span<const LabeledSubgroup> subgroups);

struct GenusExpectation {
    std::string label;
    int genus = 0;
};

/**
 * Quotient genera come from coset monodromy, never from stated values;
 * `expected` entries are compared and any mismatch is recorded in notes
 * (not asserted).  Throws NotAdmissible when the collection fails the
 * admissibility inequality.
 */
DecompositionReport decompose_jacobian(const GeneratingVector& v,
                                       std::span<const LabeledSubgroup> subgroups,
                                       std::span<const GenusExpectation> expected = {});

} // namespace surfact
