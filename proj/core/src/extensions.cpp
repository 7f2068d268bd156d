#include "surfact/extensions.hpp"

#include <algorithm>

#include "surfact/geometry.hpp"

namespace surfact {

long long eval_exponent(const ExponentExpr& e, const EvalParams& p) {
    return e.c0 + e.cl * p.l + e.cm * p.m + e.clr * p.l * p.r;
}

Word word_gen(int generator, ExponentExpr exp) {
    Word w;
    w.terms.push_back({generator, nullptr, exp});
    return w;
}

Word word_pow(Word base, ExponentExpr exp) {
    if (base.terms.size() == 1 && base.terms[0].exp.c0 == 1 && base.terms[0].exp.cl == 0 &&
        base.terms[0].exp.cm == 0 && base.terms[0].exp.clr == 0) {
        base.terms[0].exp = exp;
        return base;
    }
    Word w;
    w.terms.push_back({-1, std::make_shared<const Word>(std::move(base)), exp});
    return w;
}

Word word_prod(std::vector<Word> parts) {
    Word w;
    for (auto& p : parts)
        for (auto& t : p.terms) w.terms.push_back(std::move(t));
    return w;
}

GroupElement eval_word(const GroupSpec& g, const Word& w,
                       std::span<const GroupElement> images, const EvalParams& p) {
    GroupElement acc = g.identity();
    for (const auto& term : w.terms) {
        GroupElement base = term.sub ? eval_word(g, *term.sub, images, p)
                                     : images[static_cast<size_t>(term.generator)];
        acc = g.multiply(acc, g.power(base, eval_exponent(term.exp, p)));
    }
    return acc;
}

namespace {

constexpr ExponentExpr kOne{1, 0, 0, 0};
constexpr ExponentExpr kTwo{2, 0, 0, 0};
constexpr ExponentExpr kFive{5, 0, 0, 0};
constexpr ExponentExpr kInv{-1, 0, 0, 0};

std::vector<WordTable> make_tables() {
    std::vector<WordTable> tables;

    { // T1: (0;5,5,5) inside (0;2,5,10), index 2
        WordTable t;
        t.name = "T1";
        t.super_signature = make_signature(0, {2, 5, 10});
        t.sub_signature = make_signature(0, {5, 5, 5});
        t.index = 2;
        t.words.push_back(word_pow(word_prod({word_gen(0), word_gen(2)}), kInv));
        t.words.push_back(word_gen(1));
        t.words.push_back(word_gen(2, kTwo));
        tables.push_back(std::move(t));
    }
    { // T2a: (0;3,6,6) inside (0;2,6,6) via x' = (y2^2, y3, (y2^2 y3)^-1)
        WordTable t;
        t.name = "T2a";
        t.super_signature = make_signature(0, {2, 6, 6});
        t.sub_signature = make_signature(0, {3, 6, 6});
        t.index = 2;
        t.words.push_back(word_gen(1, kTwo));
        t.words.push_back(word_gen(2));
        t.words.push_back(word_pow(word_prod({word_gen(1, kTwo), word_gen(2)}), kInv));
        tables.push_back(std::move(t));
    }
    { // T2b: (0;3,6,6) inside (0;2,6,6) via x'' = (y3^2, y2, (y3^2 y2)^-1)
        WordTable t;
        t.name = "T2b";
        t.super_signature = make_signature(0, {2, 6, 6});
        t.sub_signature = make_signature(0, {3, 6, 6});
        t.index = 2;
        t.words.push_back(word_gen(2, kTwo));
        t.words.push_back(word_gen(1));
        t.words.push_back(word_pow(word_prod({word_gen(2, kTwo), word_gen(1)}), kInv));
        tables.push_back(std::move(t));
    }
    { // T3: (0;2,2,3,3) inside (0;2,6,6) via xhat
        WordTable t;
        t.name = "T3";
        t.super_signature = make_signature(0, {2, 6, 6});
        t.sub_signature = make_signature(0, {2, 2, 3, 3});
        t.index = 2;
        t.words.push_back(word_pow(
            word_prod({word_gen(0), word_gen(1, kTwo), word_gen(2, kTwo)}), kInv));
        t.words.push_back(word_gen(0));
        t.words.push_back(word_gen(1, kTwo));
        t.words.push_back(word_gen(2, kTwo));
        tables.push_back(std::move(t));
    }
    { // T4a: (0;3,3,3,3) inside (0;2,2,3,3): (y3, y4^2, y4, y3^2)
        WordTable t;
        t.name = "T4a";
        t.super_signature = make_signature(0, {2, 2, 3, 3});
        t.sub_signature = make_signature(0, {3, 3, 3, 3});
        t.index = 2;
        t.words.push_back(word_gen(2));
        t.words.push_back(word_gen(3, kTwo));
        t.words.push_back(word_gen(3));
        t.words.push_back(word_gen(2, kTwo));
        tables.push_back(std::move(t));
    }
    { // T4b: (0;3,3,3,3) inside (0;2,2,3,3), parametric in l, m, r:
      //   A = y2 y1,  B = A^-m y4
      //   (A^l B^2, A^(-1-lr) B^5, B, (x1 x2 x3)^-1)
        WordTable t;
        t.name = "T4b";
        t.super_signature = make_signature(0, {2, 2, 3, 3});
        t.sub_signature = make_signature(0, {3, 3, 3, 3});
        t.index = 2;
        t.needs_l = true;
        t.needs_m = true;
        Word A = word_prod({word_gen(1), word_gen(0)});
        Word B = word_prod({word_pow(A, {0, 0, -1, 0}), word_gen(3)});
        Word x1 = word_prod({word_pow(A, {0, 1, 0, 0}), word_pow(B, kTwo)});
        Word x2 = word_prod({word_pow(A, {-1, 0, 0, -1}), word_pow(B, kFive)});
        Word x3 = B;
        Word x4 = word_pow(word_prod({x1, x2, x3}), kInv);
        t.words = {x1, x2, x3, x4};
        tables.push_back(std::move(t));
    }
    return tables;
}

const std::vector<WordTable>& tables_singleton() {
    static const std::vector<WordTable> tables = make_tables();
    return tables;
}

} // namespace

std::vector<WordTable> builtin_word_tables() { return tables_singleton(); }

const WordTable& word_table(const std::string& name) {
    for (const auto& t : tables_singleton())
        if (t.name == name) return t;
    throw std::invalid_argument("unknown word table " + name);
}

EvaluatedWords evaluate_word_table_raw(const WordTable& table, const GeneratingVector& super,
                                       const EvalParams& params) {
    if (super.signature != table.super_signature)
        throw OrderMismatch("vector signature " + super.signature.str() +
                            " does not match table " + table.name);
    if (period_orders(super) != table.super_signature.periods)
        throw OrderMismatch("supergroup vector must be in canonical period order");
    const GroupSpec& g = super.group;
    EvaluatedWords out;
    out.images.reserve(table.words.size());
    for (const auto& w : table.words)
        out.images.push_back(eval_word(g, w, super.periods, params));

    GroupElement prod = g.identity();
    for (size_t i = 0; i < out.images.size(); ++i) {
        int want = table.sub_signature.periods[i];
        if (g.element_order(out.images[i]) != want)
            throw OrderMismatch("word image " + std::to_string(i) + " has wrong order for " +
                                table.name);
        prod = g.multiply(prod, out.images[i]);
    }
    if (prod != g.identity())
        throw OrderMismatch("word images violate the product-one relation for " + table.name);

    out.subgroup = generated_subgroup(g, out.images);
    if (out.subgroup.order() * table.index != g.order())
        throw OrderMismatch("word images generate index " +
                            std::to_string(g.order() / out.subgroup.order()) + ", table " +
                            table.name + " expects " + std::to_string(table.index));
    return out;
}

GroupElement SubgroupEmbedding::map(const GroupSpec& super, const GroupElement& x) const {
    int idx = super.element_index(x);
    if (!member[static_cast<size_t>(idx)])
        throw NotASubgroup("element outside the matched subgroup");
    return to_target[static_cast<size_t>(idx)];
}

namespace {

bool relations_hold(const GroupSpec& super, const GroupSpec& target, const GroupElement& A,
                    const GroupElement& C, const GroupElement& Z) {
    if (super.power(A, target.base_order()) != super.identity()) return false;
    if (super.power(C, target.twist_order()) != super.identity()) return false;
    if (super.conjugate(C, A) != super.power(A, target.twist())) return false;
    if (target.has_central_involution()) {
        if (super.power(Z, 2) != super.identity()) return false;
        if (super.multiply(A, Z) != super.multiply(Z, A)) return false;
        if (super.multiply(C, Z) != super.multiply(Z, C)) return false;
    }
    return true;
}

std::optional<SubgroupEmbedding> try_embedding(const GroupSpec& super, const Subgroup& s,
                                               const GroupSpec& target, const GroupElement& A,
                                               const GroupElement& C, const GroupElement& Z) {
    std::vector<GroupElement> gens{A, C};
    if (target.has_central_involution()) gens.push_back(Z);
    if (generated_subgroup(super, gens).elements != s.elements) return std::nullopt;

    SubgroupEmbedding emb{target, {}, {}};
    emb.to_target.resize(static_cast<size_t>(super.order()));
    emb.member.assign(static_cast<size_t>(super.order()), 0);
    int filled = 0;
    GroupElement ai = super.identity();
    for (int i = 0; i < target.base_order(); ++i) {
        GroupElement aicj = ai;
        for (int j = 0; j < target.twist_order(); ++j) {
            for (int z = 0; z < (target.has_central_involution() ? 2 : 1); ++z) {
                GroupElement e = z ? super.multiply(aicj, Z) : aicj;
                int idx = super.element_index(e);
                if (emb.member[static_cast<size_t>(idx)])
                    throw std::logic_error("subgroup embedding is not injective");
                emb.member[static_cast<size_t>(idx)] = 1;
                emb.to_target[static_cast<size_t>(idx)] = target.make(i, j, z);
                ++filled;
            }
            aicj = super.multiply(aicj, C);
        }
        ai = super.multiply(ai, A);
    }
    if (filled != s.order()) throw std::logic_error("subgroup embedding misses elements");
    return emb;
}

} // namespace

std::optional<SubgroupEmbedding> match_subgroup(const GroupSpec& super, const Subgroup& s,
                                                const GroupSpec& target) {
    if (s.order() != target.order()) return std::nullopt;
    int a_order = target.element_order(target.gen_a());
    int c_order = target.element_order(target.gen_c());
    std::vector<GroupElement> a_candidates, c_candidates, z_candidates;
    for (const auto& x : s.elements) {
        int o = super.element_order(x);
        if (o == a_order) a_candidates.push_back(x);
        if (o == c_order) c_candidates.push_back(x);
    }
    if (target.twist_order() == 1) c_candidates = {super.identity()};
    if (target.has_central_involution()) {
        for (const auto& x : s.elements) {
            if (super.element_order(x) != 2) continue;
            bool central = true;
            for (const auto& y : s.generators)
                if (super.multiply(x, y) != super.multiply(y, x)) {
                    central = false;
                    break;
                }
            if (central) z_candidates.push_back(x);
        }
    } else {
        z_candidates.push_back(super.identity());
    }
    for (const auto& A : a_candidates)
        for (const auto& C : c_candidates)
            for (const auto& Z : z_candidates) {
                if (!relations_hold(super, target, A, C, Z)) continue;
                auto emb = try_embedding(super, s, target, A, C, Z);
                if (emb) return emb;
            }
    return std::nullopt;
}

namespace {

/// Canonical family spec isomorphic to the subgroup s of `super`.
GroupSpec identify_subgroup_spec(const GroupSpec& super, const Subgroup& s) {
    int n = super.base_order();
    if (s.order() % n != 0)
        throw UnsupportedGroup("word subgroup does not contain the base subgroup");
    for (int eps = 0; eps <= 1; ++eps) {
        int m = s.order() / n / (eps ? 2 : 1);
        if (m < 1 || s.order() != n * m * (eps ? 2 : 1)) continue;
        std::vector<GroupElement> a_cands, c_cands;
        for (const auto& x : s.elements) {
            int o = super.element_order(x);
            if (o == n) a_cands.push_back(x);
            if (o == m) c_cands.push_back(x);
        }
        if (m == 1) c_cands = {super.identity()};
        for (const auto& A : a_cands)
            for (const auto& C : c_cands) {
                // realized twist: C A C^-1 = A^k
                GroupElement conj = super.conjugate(C, A);
                GroupElement ak = super.identity();
                int k = -1;
                for (int cand = 0; cand < n; ++cand) {
                    if (ak == conj) {
                        k = cand;
                        break;
                    }
                    ak = super.multiply(ak, A);
                }
                if (k <= 0) continue;
                GroupSpec candidate = [&]() -> GroupSpec {
                    try {
                        return GroupSpec(n, m, k, eps == 1);
                    } catch (const InvalidTwist&) {
                        return GroupSpec(2, 1, 1, false); // placeholder, rejected below
                    }
                }();
                if (candidate.base_order() != n) continue;
                // canonical twist representative for the same cyclic subgroup
                int d = candidate.twist_exact_order();
                int canonical = d == 1 ? 1 : (is_prime(n) ? root_of_order(n, d) : k);
                GroupSpec target(n, m, canonical, eps == 1);
                if (match_subgroup(super, s, target)) return target;
            }
    }
    throw UnsupportedGroup("word subgroup is not a recognizable family group");
}

} // namespace

GeneratingVector evaluate_into(const WordTable& table, const GeneratingVector& super,
                               const GroupSpec& target, const EvalParams& params) {
    EvaluatedWords raw = evaluate_word_table_raw(table, super, params);
    auto emb = match_subgroup(super.group, raw.subgroup, target);
    if (!emb)
        throw UnsupportedGroup("word subgroup is not isomorphic to " + target.description());
    GeneratingVector out{target, table.sub_signature, {}, {}};
    out.periods.reserve(raw.images.size());
    for (const auto& x : raw.images) out.periods.push_back(emb->map(super.group, x));
    if (!is_valid_vector(out)) throw std::logic_error("mapped word images are not a valid vector");
    return out;
}

GeneratingVector evaluate_word_table(const WordTable& table, const GeneratingVector& super,
                                     const EvalParams& params) {
    EvaluatedWords raw = evaluate_word_table_raw(table, super, params);
    GroupSpec target = identify_subgroup_spec(super.group, raw.subgroup);
    auto emb = match_subgroup(super.group, raw.subgroup, target);
    GeneratingVector out{target, table.sub_signature, {}, {}};
    out.periods.reserve(raw.images.size());
    for (const auto& x : raw.images) out.periods.push_back(emb->map(super.group, x));
    if (!is_valid_vector(out)) throw std::logic_error("mapped word images are not a valid vector");
    return out;
}

bool check_extension(const GeneratingVector& sub, const GeneratingVector& super,
                     const WordTable& table, const EvalParams& params,
                     const OrbitSet* sub_orbits) {
    if (teichmuller_dimension(sub.signature) != teichmuller_dimension(super.signature))
        throw DimensionMismatch("Teichmueller dimensions differ: " + sub.signature.str() +
                                " vs " + super.signature.str());
    if (sub.signature != table.sub_signature)
        throw OrderMismatch("sub vector signature does not match table " + table.name);
    EvaluatedWords raw = evaluate_word_table_raw(table, super, params);
    auto emb = match_subgroup(super.group, raw.subgroup, sub.group);
    if (!emb) return false;
    GeneratingVector mapped{sub.group, table.sub_signature, {}, {}};
    for (const auto& x : raw.images) mapped.periods.push_back(emb->map(super.group, x));
    if (!is_valid_vector(mapped))
        throw std::logic_error("mapped word images are not a valid vector");
    if (sub_orbits) {
        int a = sub_orbits->orbit_of(mapped), b = sub_orbits->orbit_of(sub);
        if (a < 0 || b < 0) throw std::logic_error("extension check: vector missing from orbits");
        return a == b;
    }
    return are_equivalent(mapped, sub);
}

// ---------------------------------------------------------------------------
// Normal-form actions
// ---------------------------------------------------------------------------

namespace {

GeneratingVector finish(const GroupSpec& g, const Signature& sig,
                        std::vector<GroupElement> periods) {
    GeneratingVector v{g, sig, {}, std::move(periods)};
    if (!is_valid_vector(v))
        throw std::logic_error("normal-form action formula produced an invalid vector");
    return v;
}

void require_twist(const GroupSpec& g, int m, int exact_order, bool central) {
    if (g.twist_order() != m || g.twist_exact_order() != exact_order ||
        g.has_central_involution() != central)
        throw GroupMismatch("group " + g.description() + " has the wrong shape for this action");
}

} // namespace

GeneratingVector theta_ijk_555(const GroupSpec& g5, int i, int j, int k) {
    require_twist(g5, 5, 5, false);
    if (i < 1 || i > 4 || j < 1 || j > 4 || k < 1 || k > 4 || (i + j + k) % 5 != 0)
        throw std::invalid_argument("need i,j,k in 1..4 with i+j+k = 0 mod 5");
    return finish(g5, make_signature(0, {5, 5, 5}),
                  {g5.make(-g5.twist_pow(i), i), g5.make(1, j), g5.make(0, k)});
}

GeneratingVector Theta_n_2510(const GroupSpec& g10, int n) {
    require_twist(g10, 10, 10, false);
    // b = c^6, s = c^5: (a s, a b^{2n}, b^{-2n} s)
    return finish(g10, make_signature(0, {2, 5, 10}),
                  {g10.make(1, 5), g10.make(1, 12 * n), g10.make(0, 5 - 12 * n)});
}

GeneratingVector theta_1i_366(const GroupSpec& g6, int i) {
    require_twist(g6, 6, 3, false);
    if (i != 1 && i != 2) throw std::invalid_argument("i must be 1 or 2");
    // b = c^4, s = c^3: (b^i, a^{-r^i} b^i s, a b^i s), r = twist
    long long r_i = g6.twist_pow(i);
    return finish(g6, make_signature(0, {3, 6, 6}),
                  {g6.make(0, 4 * i), g6.make(-r_i, 4 * i + 3), g6.make(1, 4 * i + 3)});
}

GeneratingVector theta_2_366(const GroupSpec& g6) {
    require_twist(g6, 6, 6, false);
    // r = n^4 is the cube root in the (a, b, s) presentation
    return finish(g6, make_signature(0, {3, 6, 6}),
                  {g6.make(1, 4), g6.make(0, 1), g6.make(g6.twist_pow(4), 1)});
}

GeneratingVector theta_3m_2233(const GroupSpec& g6, long long m) {
    require_twist(g6, 6, 6, false);
    long long r = g6.twist_pow(4);
    return finish(g6, make_signature(0, {2, 2, 3, 3}),
                  {g6.make(0, 3), g6.make(1, 3), g6.make(1 + (1 + r) * m, 2), g6.make(m, 4)});
}

GeneratingVector Theta_i_266(const GroupSpec& g12, int which) {
    require_twist(g12, 6, 6, true);
    long long n2 = g12.twist_pow(2), n4 = g12.twist_pow(4);
    Signature sig = make_signature(0, {2, 6, 6});
    if (which == 1)
        return finish(g12, sig, {g12.make(1, 3, 0), g12.make(0, 1, 1), g12.make(-n2, 2, 1)});
    if (which == 2)
        return finish(g12, sig, {g12.make(1, 3, 0), g12.make(0, 5, 1), g12.make(-n4, 4, 1)});
    throw std::invalid_argument("which must be 1 or 2");
}

GeneratingVector caseA_3333(const GroupSpec& g3, long long n) {
    require_twist(g3, 3, 3, false);
    long long r = g3.twist();
    return finish(g3, make_signature(0, {3, 3, 3, 3}),
                  {g3.make(0, 2), g3.make(1, 2), g3.make(-r * (n + 1), 1), g3.make(n, 1)});
}

GeneratingVector caseB_3333(const GroupSpec& g3, long long l) {
    require_twist(g3, 3, 3, false);
    long long r = g3.twist();
    return finish(g3, make_signature(0, {3, 3, 3, 3}),
                  {g3.make(l, 2), g3.make(-1 - l * r, 2), g3.make(0, 1), g3.make(1, 1)});
}

} // namespace surfact
