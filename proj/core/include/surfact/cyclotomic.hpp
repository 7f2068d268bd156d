#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "surfact/errors.hpp"

namespace surfact {

/// Sparse element of Z[w_N]: sum of coeff * w_N^exp terms.
struct CycloSum {
    int modulus = 1;
    std::vector<std::pair<int, long long>> terms; // (exponent mod N, coefficient)
};

CycloSum cyclo_zero(int modulus);
CycloSum cyclo_root(int modulus, long long exponent, long long coefficient = 1);
CycloSum cyclo_conjugate(const CycloSum& v);

/// Coefficients of the N-th cyclotomic polynomial, ascending degree.
std::vector<long long> cyclotomic_polynomial(int N);

/**
 * Dense accumulator over Z[x]/(x^N - 1); exact integer detection reduces the
 * residue modulo Phi_N (the power basis 1, w, ..., w^(phi(N)-1) is integral,
 * so the reduced form is constant iff the value is a rational integer).
 */
class CycloAccumulator {
public:
    explicit CycloAccumulator(int modulus);

    int modulus() const { return modulus_; }
    void add(const CycloSum& v, long long scale = 1);
    void add_product(const CycloSum& a, const CycloSum& b);
    /// True iff the accumulated value is a rational integer; sets `out`.
    bool reduce_to_integer(long long& out) const;

private:
    int modulus_;
    std::vector<long long> coeff_;
};

} // namespace surfact
