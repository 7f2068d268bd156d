#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "surfact/errors.hpp"

namespace surfact {

/// Element of (C_n x| C_m) x C_2^eps, written a^base c^twist z^central with
/// 0 <= base < n, 0 <= twist < m, central in {0,1}.
struct GroupElement {
    int base = 0;
    int twist = 0;
    int central = 0;

    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/**
 * The metacyclic family (C_n x|_r C_m) x C_2^eps that houses every group in
 * scope: presentation
 *
 *   < a, c, z : a^n = c^m = z^2 = 1, c a c^-1 = a^r, [a,z] = [c,z] = 1 >
 *
 * (no z when eps = 0).  Requires r^m = 1 mod n and gcd(r, n) = 1; n need not
 * be prime (D_{3q} and C_q x D_3 are encoded with n = 3q, m = 2).
 *
 * Multiplication law: (i1,j1,z1)(i2,j2,z2) = (i1 + r^j1 i2, j1+j2, z1^z2).
 */
class GroupSpec {
public:
    GroupSpec() : GroupSpec(2, 1, 1, false) {} // inert default: C_2
    GroupSpec(int base_order, int twist_order, int twist, bool central_involution);

    int base_order() const { return n_; }
    int twist_order() const { return m_; }
    int twist() const { return r_; }
    bool has_central_involution() const { return central_; }
    int order() const { return n_ * m_ * (central_ ? 2 : 1); }
    /// Multiplicative order of the twist r in (Z/n)^*.
    int twist_exact_order() const { return r_order_; }
    /// r^j mod n for 0 <= j < m.
    int twist_pow(int j) const { return rpow_[static_cast<size_t>(j)]; }

    GroupElement identity() const { return {0, 0, 0}; }
    GroupElement gen_a() const { return {n_ > 1 ? 1 : 0, 0, 0}; }
    GroupElement gen_c() const { return {0, m_ > 1 ? 1 : 0, 0}; }
    GroupElement gen_z() const { return {0, 0, central_ ? 1 : 0}; }

    /// Coordinates reduced into canonical ranges.
    GroupElement make(long long base, long long twist, long long central = 0) const;

    GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
    GroupElement inverse(const GroupElement& x) const;
    GroupElement power(GroupElement x, long long e) const;
    /// g x g^-1
    GroupElement conjugate(const GroupElement& g, const GroupElement& x) const;
    int element_order(const GroupElement& x) const;

    /// Dense index in [0, order): used for closure bitmaps and coset tables.
    int element_index(const GroupElement& x) const;
    GroupElement element_at(int index) const;

    bool same_presentation(const GroupSpec& other) const {
        return n_ == other.n_ && m_ == other.m_ && r_ == other.r_ && central_ == other.central_;
    }

    /// All elements of the given exact order, sorted.
    std::vector<GroupElement> elements_of_order(int k) const;

    /// "C11:5C5", "C42", "D21", "C7xD3", "(C7:6C6)xC2", ...
    std::string description() const;

private:
    int n_, m_, r_;
    bool central_;
    int r_order_;
    std::vector<int> rpow_;
};

bool is_prime(int n);

/// Smallest u in [2, n-1] of multiplicative order exactly m mod n (n prime).
int root_of_order(int n, int m);

/// Validated constructor for the family; throws InvalidTwist.
GroupSpec build_group(int n, int m, int r, bool central_involution);

struct Subgroup {
    std::vector<GroupElement> elements;   // sorted, closed, contains identity
    std::vector<GroupElement> generators;

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(const GroupElement& x) const;
};

Subgroup generated_subgroup(const GroupSpec& g, std::span<const GroupElement> gens);
Subgroup cyclic_subgroup(const GroupSpec& g, const GroupElement& x);
Subgroup whole_group(const GroupSpec& g);
Subgroup trivial_subgroup(const GroupSpec& g);

/// Conjugacy classes, each sorted, classes ordered by smallest member.
std::vector<std::vector<GroupElement>> conjugacy_classes(const GroupSpec& g);

bool are_conjugate_subgroups(const GroupSpec& g, const Subgroup& h1, const Subgroup& h2);

/// Center of the group (as a sorted element list).
std::vector<GroupElement> center(const GroupSpec& g);

/// Automorphism given by generator images; images determine phi(a^i c^j z^k)
/// = A^i C^j Z^k.
struct GroupAutomorphism {
    GroupElement image_a;
    GroupElement image_c;
    GroupElement image_z;
};

GroupElement apply(const GroupSpec& g, const GroupAutomorphism& phi, const GroupElement& x);
GroupAutomorphism compose(const GroupSpec& g, const GroupAutomorphism& f,
                          const GroupAutomorphism& h); // f after h

/**
 * Full automorphism group by brute force over candidate generator images
 * (filtered by exact element order, then relation and generation checks).
 * Throws BoundExceeded when |G| exceeds order_bound.
 */
std::vector<GroupAutomorphism> automorphism_group(const GroupSpec& g, int order_bound = 4096);

/// Generator images of an isomorphism `from` -> `to`, if one exists.
std::optional<GroupAutomorphism> find_isomorphism(const GroupSpec& from, const GroupSpec& to);

} // namespace surfact
