#include "surfact/jacobian.hpp"

#include <algorithm>

#include "surfact/geometry.hpp"

namespace surfact {

std::vector<Irrep> relevant_representations(const GeneratingVector& v) {
    const GroupSpec& g = v.group;
    int gamma = v.signature.orbit_genus;
    std::vector<Irrep> out;
    for (const auto& rep : irreducible_representations(g)) {
        bool trivial = rep.kind == Irrep::Kind::Linear && rep.linear_label == 0 && rep.tensor_sign > 0;
        if (trivial) {
            if (gamma != 0) out.push_back(rep);
            continue;
        }
        // 2 * [ d_V (gamma-1) + 1/2 sum (d_V - d_V^<theta(x_i)>) ]
        long long twice = 2LL * rep.degree * (gamma - 1);
        for (const auto& x : v.periods)
            twice += rep.degree - fixed_subspace_dim(g, rep, cyclic_subgroup(g, x));
        if (twice != 0) out.push_back(rep);
    }
    return out;
}

namespace {

bool admissible_impl(const GeneratingVector& v, std::span<const LabeledSubgroup> subgroups,
                     bool& all_equal) {
    const GroupSpec& g = v.group;
    all_equal = true;
    for (const auto& rep : relevant_representations(v)) {
        long long sum = 0;
        for (const auto& ls : subgroups) sum += fixed_subspace_dim(g, rep, ls.subgroup);
        if (sum > rep.degree) return false;
        if (sum != rep.degree) all_equal = false;
    }
    return true;
}

} // namespace

bool check_admissible(const GeneratingVector& v, std::span<const LabeledSubgroup> subgroups) {
    for (const auto& ls : subgroups)
        if (ls.subgroup.order() == 0 || v.group.order() % ls.subgroup.order() != 0)
            throw NotASubgroup("collection member is not a subgroup of the acting group");
    bool all_equal = false;
    return admissible_impl(v, subgroups, all_equal);
}

DecompositionReport decompose_jacobian(const GeneratingVector& v,
                                       std::span<const LabeledSubgroup> subgroups,
                                       std::span<const GenusExpectation> expected) {
    bool all_equal = false;
    if (!admissible_impl(v, subgroups, all_equal))
        throw NotAdmissible("subgroup collection violates the admissibility inequality");

    DecompositionReport report;
    report.admissible_equalities = all_equal;
    report.surface_genus = quotient_genus(v, trivial_subgroup(v.group));

    // bucket conjugate subgroups
    std::vector<int> bucket_of(subgroups.size(), -1);
    std::vector<std::vector<size_t>> buckets;
    for (size_t i = 0; i < subgroups.size(); ++i) {
        if (bucket_of[i] >= 0) continue;
        int b = static_cast<int>(buckets.size());
        buckets.push_back({i});
        bucket_of[i] = b;
        for (size_t j = i + 1; j < subgroups.size(); ++j) {
            if (bucket_of[j] >= 0) continue;
            if (are_conjugate_subgroups(v.group, subgroups[i].subgroup, subgroups[j].subgroup)) {
                bucket_of[j] = b;
                buckets[static_cast<size_t>(b)].push_back(j);
            }
        }
    }

    long long claimed = 0;
    for (const auto& bucket : buckets) {
        int genus = quotient_genus(v, subgroups[bucket.front()].subgroup);
        for (size_t k = 1; k < bucket.size(); ++k) {
            int other = quotient_genus(v, subgroups[bucket[k]].subgroup);
            if (other != genus)
                throw std::logic_error("conjugate subgroups with different quotient genera");
        }
        JacobianFactor f{subgroups[bucket.front()].label, genus, static_cast<int>(bucket.size())};
        claimed += static_cast<long long>(genus) * f.multiplicity;
        report.factors.push_back(std::move(f));
    }

    int gamma = v.signature.orbit_genus;
    bool trivial_in_jset = gamma != 0;
    long long remainder = report.surface_genus - claimed - (trivial_in_jset ? gamma : 0);
    if (remainder < 0)
        throw std::logic_error("decomposition dimensions exceed the surface genus");
    report.remainder_dim = static_cast<int>(remainder);

    for (const auto& exp : expected) {
        for (const auto& f : report.factors) {
            if (f.subgroup == exp.label && f.genus != exp.genus)
                report.notes.push_back("factor " + f.subgroup + ": computed genus " +
                                       std::to_string(f.genus) + " deviates from stated " +
                                       std::to_string(exp.genus));
        }
    }
    return report;
}

} // namespace surfact
