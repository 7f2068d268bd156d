#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "surfact/geometry.hpp"
#include "surfact/group.hpp"

namespace surfact {

/**
 * One group action: images of the canonical Fuchsian generators.  For
 * signature (h; m_1..m_l) this is 2h handle images plus l period images with
 * the defining relation
 *
 *   prod [handles_{2i}, handles_{2i+1}] * prod periods_i = 1,
 *
 * period image orders matching the signature periods as a multiset (braid
 * moves may permute the order sequence away from the sorted one), and all
 * images together generating the group.
 */
struct GeneratingVector {
    GroupSpec group;
    Signature signature;
    std::vector<GroupElement> handles;
    std::vector<GroupElement> periods;
};

bool is_valid_vector(const GeneratingVector& v);
/// Sequence of element orders of the period images.
std::vector<int> period_orders(const GeneratingVector& v);

struct EnumerationOptions {
    int workers = 0;                        // 0 = hardware default
    std::uint64_t max_vectors = 32'000'000; // BoundExceeded beyond this
    int aut_bound = 4096;
};

/**
 * Complete list of generating vectors whose period-image orders follow the
 * signature's (sorted) period sequence, ordered lexicographically.
 * Genus 0 and 1 quotients only (UnsupportedGenus otherwise).
 */
std::vector<GeneratingVector> enumerate_generating_vectors(const GroupSpec& g, const Signature& sig,
                                                           const EnumerationOptions& opts = {});

/// Count of the above without materializing elements.
std::uint64_t count_generating_vectors(const GroupSpec& g, const Signature& sig,
                                       const EnumerationOptions& opts = {});

/// Braid transformation Phi_{i,i+1} (0-based i): x_i -> x_{i+1},
/// x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}.  Quotient genus 0 only.
GeneratingVector braid_move(const GeneratingVector& v, int i);
GeneratingVector braid_move_inverse(const GeneratingVector& v, int i);

GeneratingVector apply_automorphism(const GeneratingVector& v, const GroupAutomorphism& phi);

struct ActionOrbit {
    GeneratingVector representative; // lexicographic minimum over the orbit
    std::uint64_t size = 0;          // vectors with sorted period sequence
    bool existence_only = false;     // h = 1 pseudo-orbit (no reduction defined)
};

/// Result of the topological-equivalence reduction for one (group, signature).
class OrbitSet {
public:
    const std::vector<ActionOrbit>& orbits() const { return orbits_; }
    std::uint64_t total_vectors() const { return total_; }
    std::uint64_t orbit_count() const { return orbits_.size(); }
    bool empty() const { return orbits_.empty(); }
    bool existence_only() const { return existence_only_; }
    const GroupSpec& group() const { return group_; }
    const Signature& signature() const { return sig_; }
    std::size_t aut_count() const { return auts_ ? auts_->size() : 0; }

    /// Index of the orbit containing v (same group and signature required).
    int orbit_of(const GeneratingVector& v) const;

private:
    friend OrbitSet equivalence_orbits(const GroupSpec&, const Signature&, const EnumerationOptions&);
    OrbitSet(GroupSpec g, Signature s) : group_(std::move(g)), sig_(std::move(s)) {}

    GroupSpec group_;
    Signature sig_;
    std::vector<ActionOrbit> orbits_;
    std::uint64_t total_ = 0;
    bool existence_only_ = false;
    std::shared_ptr<const std::vector<GroupAutomorphism>> auts_;
    // Aut-class minimum key -> orbit index, sorted by key.
    std::vector<std::pair<std::uint64_t, std::uint32_t>> class_to_orbit_;
};

/**
 * Orbits of the equivalence group generated by all braid moves and all group
 * automorphisms.  Vectors are partitioned into Aut(G)-classes first (the
 * action of Aut(G) on generating vectors is free, so classes have size
 * exactly |Aut(G)|), then classes are merged by braid closure across all
 * period orderings; an orbit's size counts its sorted-ordering vectors.
 *
 * h = 0 only; h = 1 returns one flagged existence-only pseudo-orbit when the
 * enumeration is nonempty.
 */
OrbitSet equivalence_orbits(const GroupSpec& g, const Signature& sig,
                            const EnumerationOptions& opts = {});

/// Same orbit under the equivalence group (h = 0 only).
bool are_equivalent(const GeneratingVector& v1, const GeneratingVector& v2,
                    const EnumerationOptions& opts = {});

} // namespace surfact
