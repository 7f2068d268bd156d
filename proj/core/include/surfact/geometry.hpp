#pragma once

#include <string>
#include <vector>

#include "surfact/errors.hpp"
#include "surfact/group.hpp"

namespace surfact {

/// Exact rational, reduced, used for hyperbolic areas.
struct Rational {
    long long num = 0;
    long long den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(long long num, long long den);

/// Fuchsian signature (h; m_1, ..., m_l), periods sorted ascending.
struct Signature {
    int orbit_genus = 0;
    std::vector<int> periods;

    friend auto operator<=>(const Signature&, const Signature&) = default;

    int period_count() const { return static_cast<int>(periods.size()); }
    std::string str() const; // "(0; 2,5,10)"
};

/// Validated constructor: sorts periods, rejects non-hyperbolic data.
Signature make_signature(int orbit_genus, std::vector<int> periods);

/// Normalized area 2h - 2 + sum(1 - 1/m_i); throws NotHyperbolic if <= 0.
Rational hyperbolic_area(const Signature& sig);

/// Complex dimension 3h - 3 + l of the associated Teichmueller space.
int teichmuller_dimension(const Signature& sig);

/**
 * All signatures a group of order lambda*(g-1) acting on a genus-g surface
 * can have: area = 2/lambda by Riemann-Hurwitz, every period divides
 * lambda*q, bounded search over h <= 2, l <= 8.  q = g-1 must be prime,
 * lambda in {3,5,6,10,12}.
 */
std::vector<Signature> enumerate_signatures(int genus, int lambda);

struct GeneratingVector; // actions.hpp

/**
 * Genus of S/H from the cycle counts of the vector's images acting on the
 * cosets G/H:
 *
 *   2 genus - 2 = [G:H](2h - 2) + sum_i ([G:H] - #cycles of theta(x_i))
 *
 * Throws NotASubgroup if H does not sit inside the vector's group.
 */
int quotient_genus(const GeneratingVector& vec, const Subgroup& sub);

} // namespace surfact
