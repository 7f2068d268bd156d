#pragma once

#include <string>
#include <vector>

#include "surfact/cyclotomic.hpp"
#include "surfact/group.hpp"

namespace surfact {

/**
 * Complex irreducible representation of C_q x|_r C_m (q prime, twist of
 * exact order m), optionally tensored with a character of the central C_2.
 *
 *   linear  U_i     : a -> 1, c -> w_m^i                          (degree 1)
 *   induced V_{k_j} : a -> diag(w_q^{k_j}, w_q^{k_j r}, ...),
 *                     c -> cyclic shift                           (degree m)
 *
 * k_j runs over the minimal representatives of the <r>-orbits on (Z/q)^*.
 */
struct Irrep {
    enum class Kind { Linear, Induced };
    Kind kind = Kind::Linear;
    int linear_label = 0; // i
    int orbit_label = 0;  // k_j
    int tensor_sign = 1;  // z -> +-1 (only meaningful with a central factor)
    int degree = 1;

    std::string name() const; // "U3", "V2-", ...
    friend auto operator<=>(const Irrep&, const Irrep&) = default;
};

/// Smallest N with all character values in Z[w_N].
int character_field_order(const GroupSpec& g);

/// All complex irreducibles up to equivalence; UnsupportedGroup unless the
/// base order is prime and the twist has exact order m.
std::vector<Irrep> irreducible_representations(const GroupSpec& g);

/// Exact character value as a sum of roots of unity of order
/// character_field_order(g).
CycloSum character_value(const GroupSpec& g, const Irrep& rep, const GroupElement& x);

/// dim V^H = (1/|H|) sum over H of the character, reduced exactly;
/// NonIntegralDimension signals an arithmetic bug.
int fixed_subspace_dim(const GroupSpec& g, const Irrep& rep, const Subgroup& sub);

/// <chi_V, chi_W> by exact cyclotomic arithmetic.
long long character_inner_product(const GroupSpec& g, const Irrep& v, const Irrep& w);

} // namespace surfact
