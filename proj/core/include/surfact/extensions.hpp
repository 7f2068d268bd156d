#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "surfact/actions.hpp"

namespace surfact {

/// c0 + cl*l + cm*m + clr*(l*r), evaluated over the integers.
struct ExponentExpr {
    long long c0 = 0;
    long long cl = 0;
    long long cm = 0;
    long long clr = 0;
};

struct EvalParams {
    long long l = 0;
    long long m = 0;
    long long r = 0; // the twist value the parametric exponents refer to
};

long long eval_exponent(const ExponentExpr& e, const EvalParams& p);

/// Product of factors atom^exponent; an atom is a canonical generator y_i
/// (0-based) or a nested word.
struct Word {
    struct Term {
        int generator = -1;
        std::shared_ptr<const Word> sub;
        ExponentExpr exp{1, 0, 0, 0};
    };
    std::vector<Term> terms;
};

Word word_gen(int generator, ExponentExpr exp = {1, 0, 0, 0});
Word word_pow(Word base, ExponentExpr exp);
Word word_prod(std::vector<Word> parts);

GroupElement eval_word(const GroupSpec& g, const Word& w,
                       std::span<const GroupElement> images, const EvalParams& p);

/**
 * Parametric words expressing canonical generators of a Fuchsian subgroup in
 * terms of the canonical generators of a supergroup (genus-0 signatures).
 */
struct WordTable {
    std::string name;
    Signature super_signature;
    Signature sub_signature;
    int index = 1;
    bool needs_l = false;
    bool needs_m = false;
    std::vector<Word> words;
};

/// The six built-in inclusions: T1 (0;5,5,5) < (0;2,5,10); T2a and T2b
/// (0;3,6,6) < (0;2,6,6); T3 (0;2,2,3,3) < (0;2,6,6); T4a and T4b
/// (0;3,3,3,3) < (0;2,2,3,3).
std::vector<WordTable> builtin_word_tables();
const WordTable& word_table(const std::string& name);

struct EvaluatedWords {
    std::vector<GroupElement> images; // supergroup coordinates
    Subgroup subgroup;                // generated by the images
};

/// Evaluate and validate orders/product against the sub signature; the
/// supergroup vector must be in canonical (sorted) period order.
/// OrderMismatch signals a wrong table/vector pairing.
EvaluatedWords evaluate_word_table_raw(const WordTable& table, const GeneratingVector& super,
                                       const EvalParams& params = {});

/// Coordinate map from a subgroup of `super` onto the family spec `target`.
struct SubgroupEmbedding {
    GroupSpec target;
    std::vector<GroupElement> to_target; // by super element index
    std::vector<char> member;

    GroupElement map(const GroupSpec& super, const GroupElement& x) const;
};

std::optional<SubgroupEmbedding> match_subgroup(const GroupSpec& super, const Subgroup& s,
                                                const GroupSpec& target);

/// Table evaluation followed by identification of the generated subgroup
/// with a canonical family spec.
GeneratingVector evaluate_word_table(const WordTable& table, const GeneratingVector& super,
                                     const EvalParams& params = {});

/// Same, but mapped onto the given target spec (UnsupportedGroup if the
/// generated subgroup is not isomorphic to it).
GeneratingVector evaluate_into(const WordTable& table, const GeneratingVector& super,
                               const GroupSpec& target, const EvalParams& params = {});

/**
 * True iff the table-restricted supergroup action is topologically
 * equivalent to `sub` (after matching the word subgroup with sub's group by
 * an isomorphism; any choice works since equivalence includes Aut).
 * DimensionMismatch when the two signatures have different Teichmueller
 * dimensions.  Pass `sub_orbits` (the orbit set of sub's (group, signature))
 * to reuse a precomputed reduction.
 */
bool check_extension(const GeneratingVector& sub, const GeneratingVector& super,
                     const WordTable& table, const EvalParams& params = {},
                     const OrbitSet* sub_orbits = nullptr);

// ---------------------------------------------------------------------------
// Normal-form actions used as extension witnesses.  Convention: in a family
// spec with twist generator c of order m, the order-3 and order-2 letters of
// the presentations are b = c^(2m/3... ) -- concretely b = c^6, s = c^5 for
// m = 10 and b = c^4, s = c^3 for m = 6.
// ---------------------------------------------------------------------------

/// (a^{-r^i} b^i, a b^j, b^k) on (0;5,5,5); needs i+j+k = 0 mod 5.
GeneratingVector theta_ijk_555(const GroupSpec& g5, int i, int j, int k);
/// (a s, a b^{2n}, b^{-2n} s) on (0;2,5,10), n in 1..4.
GeneratingVector Theta_n_2510(const GroupSpec& g10, int n);
/// (b^i, a^{-r^i} b^i s, a b^i s) on (0;3,6,6) for the order-3 twist group.
GeneratingVector theta_1i_366(const GroupSpec& g6_twist3, int i);
/// (a b, b s, a^r b s) on (0;3,6,6) for the order-6 twist group.
GeneratingVector theta_2_366(const GroupSpec& g6_twist6);
/// (s, a s, a^{1+(1+r)m} b^2, a^m b) on (0;2,2,3,3).
GeneratingVector theta_3m_2233(const GroupSpec& g6_twist6, long long m);
/// (a s, b s z, a^{-r^2} b^2 z) / (a s, b^2 s z, a^{-r} b z) on (0;2,6,6).
GeneratingVector Theta_i_266(const GroupSpec& g12, int which);
/// Case A (b^2, a b^2, a^{-r(n+1)} b, a^n b) on (0;3,3,3,3).
GeneratingVector caseA_3333(const GroupSpec& g3, long long n);
/// Case B (a^l b^2, a^{-1-lr} b^2, b, a b) on (0;3,3,3,3).
GeneratingVector caseB_3333(const GroupSpec& g3, long long l);

} // namespace surfact
