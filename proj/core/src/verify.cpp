#include "surfact/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "surfact/geometry.hpp"

namespace surfact {

namespace {

struct Checker {
    VerifyResult& result;
    int q;
    int lambda;

    void expect(bool ok, const std::string& what) {
        if (!ok)
            result.failures.push_back("q=" + std::to_string(q) + " lambda=" +
                                      std::to_string(lambda) + ": " + what);
    }
    void flag(const std::string& what) {
        result.flags.push_back("q=" + std::to_string(q) + " lambda=" + std::to_string(lambda) +
                               ": " + what);
    }
};

void check_sizes(Checker& ck, const StratumReport* s, std::uint64_t expected_total,
                 std::uint64_t expected_orbit_size) {
    if (!s) return;
    std::uint64_t total = 0;
    for (std::uint64_t size : s->orbit_sizes) {
        total += size;
        if (expected_orbit_size)
            ck.expect(size == expected_orbit_size,
                      "orbit size " + std::to_string(size) + " != expected " +
                          std::to_string(expected_orbit_size));
    }
    ck.expect(total == s->vector_count, "orbit sizes do not sum to the vector count");
    if (expected_total)
        ck.expect(s->vector_count == expected_total,
                  "vector count " + std::to_string(s->vector_count) + " != derived " +
                      std::to_string(expected_total));
}

const StratumReport* find_stratum(const ClassificationReport& rep, const std::vector<int>& periods,
                                  int twist_exact_order, bool central = false) {
    for (const auto& s : rep.strata)
        if (s.signature.periods == periods && s.group.twist_exact_order() == twist_exact_order &&
            s.group.has_central_involution() == central)
            return &s;
    return nullptr;
}

int count_strata_at(const ClassificationReport& rep, const std::vector<int>& periods) {
    int n = 0;
    for (const auto& s : rep.strata)
        if (s.signature.periods == periods) ++n;
    return n;
}

void check_jacobian(Checker& ck, const StratumReport* s, int expected_twist_genus,
                    const std::string& twist_label, int genus, bool flag_only_twist_genus) {
    ck.expect(s && s->jacobian.has_value(), "missing jacobian decomposition");
    if (!s || !s->jacobian) return;
    const DecompositionReport& jac = *s->jacobian;
    ck.expect(jac.surface_genus == genus, "decomposition surface genus != g");
    long long total = jac.remainder_dim;
    int a_genus = -1, t_genus = -1, t_mult = 0;
    for (const auto& f : jac.factors) {
        total += static_cast<long long>(f.genus) * f.multiplicity;
        if (f.subgroup == "<a>") a_genus = f.genus;
        if (f.subgroup == twist_label) {
            t_genus = f.genus;
            t_mult = f.multiplicity;
        }
    }
    ck.expect(total == genus, "dimension bookkeeping: sum of factors + remainder != g");
    ck.expect(a_genus == 2, "genus of S/<a> != 2");
    ck.expect(t_mult == (twist_label == "<c>" && ck.lambda == 5 ? 10 : 6),
              "wrong multiplicity for " + twist_label);
    ck.expect(jac.remainder_dim == 0, "nonzero remainder");
    ck.expect(jac.admissible_equalities, "admissibility inequalities not all tight");
    if (t_genus != expected_twist_genus) {
        if (flag_only_twist_genus)
            ck.flag("genus of S/" + twist_label + " computed " + std::to_string(t_genus) +
                    ", stated " + std::to_string(expected_twist_genus));
        else
            ck.expect(false, "genus of S/" + twist_label + " != " +
                                 std::to_string(expected_twist_genus));
    }
}

void verify_lambda5(VerifyResult& result, int q, const ClassifyOptions& copts) {
    Checker ck{result, q, 5};
    int g = q + 1;
    ClassificationReport rep = classify_genus(g, 5, copts);
    ++result.reports;

    EnumerationOptions eopts{copts.workers, copts.max_vectors, copts.aut_bound};
    GroupSpec c5q(q, 5, 1, false);
    ck.expect(count_generating_vectors(c5q, make_signature(0, {5, 5, 5}), eopts) == 0,
              "C_{5q} admits (0;5,5,5) vectors");

    bool congruent = (q - 1) % 5 == 0;
    ck.expect(rep.existence == congruent, "existence disagrees with g = 2 mod 5");
    if (!congruent) {
        ck.expect(rep.strata.empty(), "strata for a non-congruent genus");
        return;
    }

    ck.expect(rep.strata.size() == 1, "expected exactly one stratum");
    const StratumReport* s = find_stratum(rep, {5, 5, 5}, 5);
    ck.expect(s != nullptr, "missing (0;5,5,5) stratum");
    if (!s) return;
    ck.expect(s->orbit_count == 4, "expected 4 orbits, got " + std::to_string(s->orbit_count));
    ck.expect(s->super_orbit_count == 4, "expected 4 supergroup orbits");
    // derived counts: 12 twist patterns x q(q-1) vectors, 4 equal orbits
    std::uint64_t qq = static_cast<std::uint64_t>(q);
    check_sizes(ck, s, 12 * qq * (qq - 1), 3 * qq * (qq - 1));
    ck.expect(s->extensions.size() == 4, "expected 4 extension verdicts");
    std::set<int> sub_orbits, super_orbits;
    for (const auto& e : s->extensions) {
        ck.expect(e.extends && e.via == "T1", "orbit fails to extend via T1");
        sub_orbits.insert(e.orbit);
        super_orbits.insert(e.super_orbit);
    }
    ck.expect(sub_orbits.size() == 4 && super_orbits.size() == 4,
              "extension matching is not a bijection");
    ck.expect(s->full_aut.order == 10LL * q, "full automorphism group order != 10(g-1)");
    check_jacobian(ck, s, (q - 1) / 10, "<c>", g, false);

    // admissibility equalities on every extended action
    GroupSpec g10(q, 10, root_of_order(q, 10), false);
    for (int n = 1; n <= 4; ++n) {
        GeneratingVector action = Theta_n_2510(g10, n);
        std::vector<LabeledSubgroup> collection;
        collection.push_back({"<a>", cyclic_subgroup(g10, g10.gen_a())});
        for (int t = 1; t <= 10; ++t)
            collection.push_back({"<c>", cyclic_subgroup(g10, g10.make(t, 1))});
        DecompositionReport dec = decompose_jacobian(action, collection);
        ck.expect(dec.admissible_equalities && dec.remainder_dim == 0,
                  "Theta_" + std::to_string(n) + " decomposition not tight");
    }
}

void verify_lambda6(VerifyResult& result, int q, const ClassifyOptions& copts) {
    Checker ck{result, q, 6};
    int g = q + 1;
    ClassificationReport rep = classify_genus(g, 6, copts);
    ++result.reports;

    bool congruent = (q - 1) % 3 == 0;
    ck.expect(rep.existence == congruent, "existence disagrees with g = 2 mod 3");
    if (!congruent) {
        ck.expect(rep.strata.empty(), "strata for a non-congruent genus");
        return;
    }

    ck.expect(count_strata_at(rep, {2, 2, 2, 6}) == 0, "unexpected (0;2,2,2,6) stratum");
    if (g == 8) ck.expect(count_strata_at(rep, {2, 7, 42}) == 0, "unexpected (0;2,7,42) stratum");

    std::uint64_t qq = static_cast<std::uint64_t>(q);
    const StratumReport* family = find_stratum(rep, {2, 2, 3, 3}, 6);
    ck.expect(count_strata_at(rep, {2, 2, 3, 3}) == 1 && family, "expected one (0;2,2,3,3) stratum");
    if (family) {
        ck.expect(family->orbit_count == 1, "family stratum should be a single orbit, got " +
                                                std::to_string(family->orbit_count));
        // derived count: two twist patterns, q^3 tuples each, minus the 2q
        // complement-trapped ones
        check_sizes(ck, family, 2 * qq * (qq * qq - 1), 2 * qq * (qq * qq - 1));
    }

    const StratumReport* s366_3 = find_stratum(rep, {3, 6, 6}, 3);
    const StratumReport* s366_6 = find_stratum(rep, {3, 6, 6}, 6);
    ck.expect(count_strata_at(rep, {3, 6, 6}) == 2 && s366_3 && s366_6,
              "expected (0;3,6,6) strata for both twist shapes");
    if (s366_3) {
        ck.expect(s366_3->orbit_count == 2, "order-3 twist group should have 2 orbits at (0;3,6,6)");
        check_sizes(ck, s366_3, 2 * qq * (qq - 1), qq * (qq - 1));
        std::set<std::pair<int, int>> matches;
        for (const auto& e : s366_3->extensions) {
            ck.expect(e.extends && e.via == "T2a", "theta_{1,i} should extend via T2a");
            matches.insert({e.orbit, e.super_orbit});
        }
        std::set<int> supers;
        for (auto& [o, so] : matches) supers.insert(so);
        ck.expect(matches.size() == 2 && supers.size() == 2,
                  "theta_{1,1}/theta_{1,2} should reach the two surfaces separately");
    }
    if (s366_6) {
        // two classes: theta_2 and its conjugate pattern (the braid/Aut
        // closure preserves the conjugacy-class multiset of the images)
        ck.expect(s366_6->orbit_count == 2, "order-6 twist group should have 2 orbits at (0;3,6,6)");
        check_sizes(ck, s366_6, 2 * qq * (qq - 1), qq * (qq - 1));
        std::set<std::pair<int, int>> matches;
        for (const auto& e : s366_6->extensions) {
            ck.expect(e.extends && e.via == "T2b", "theta_2-type orbits should extend via T2b");
            matches.insert({e.orbit, e.super_orbit});
        }
        std::set<int> supers;
        for (auto& [o, so] : matches) supers.insert(so);
        ck.expect(matches.size() == 2 && supers.size() == 2,
                  "the two theta_2-type orbits should reach the two surfaces separately");
    }

    const StratumReport* xs = find_stratum(rep, {2, 6, 6}, 6, true);
    ck.expect(xs != nullptr, "missing (0;2,6,6) supergroup stratum");
    if (xs) {
        ck.expect(xs->orbit_count == 2, "expected 2 orbits for the order-12(g-1) group");
        check_sizes(ck, xs, 0, 0); // sizes must still sum to the count
        int t3_ok = 0;
        for (const auto& e : xs->extensions)
            if (e.via == "T3" && e.extends) ++t3_ok;
        ck.expect(t3_ok == 2, "T3 restrictions should land on theta_{3,0} for both surfaces");
        check_jacobian(ck, xs, (q - 1) / 6, "<cz>", g, /*flag_only_twist_genus=*/true);
    }
    check_jacobian(ck, family, (q - 1) / 6, "<c>", g, false);
}

void verify_lambda3(VerifyResult& result, int q, const ClassifyOptions& copts,
                    bool lambda6_existence) {
    Checker ck{result, q, 3};
    int g = q + 1;
    ClassificationReport rep = classify_genus(g, 3, copts);
    ++result.reports;

    bool congruent = (q - 1) % 3 == 0;
    ck.expect(rep.existence == congruent, "existence disagrees with g = 2 mod 3");
    ck.expect(rep.existence == lambda6_existence, "corollary: 3(g-1) and 6(g-1) existence differ");

    EnumerationOptions eopts{copts.workers, copts.max_vectors, copts.aut_bound};
    Signature torus = make_signature(1, {3});
    for (const auto& gr : candidate_groups(q, 3))
        ck.expect(count_generating_vectors(gr, torus, eopts) == 0,
                  gr.description() + " admits a (1;3) action");
    if (g == 8) {
        Signature s77 = make_signature(0, {7, 7, 21});
        for (const auto& gr : candidate_groups(q, 3))
            ck.expect(count_generating_vectors(gr, s77, eopts) == 0,
                      gr.description() + " admits a (0;7,7,21) action");
    }
    if (!congruent) {
        ck.expect(rep.strata.empty(), "strata for a non-congruent genus");
        return;
    }

    ck.expect(count_strata_at(rep, {3, 3, 3, 3}) == 1, "expected one (0;3,3,3,3) stratum");
    const StratumReport* s = find_stratum(rep, {3, 3, 3, 3}, 3);
    ck.expect(s != nullptr, "missing C_q x|_3 C_3 stratum");
    if (!s) return;
    ck.expect(s->orbit_count >= 1, "empty stratum reported");
    // derived count: 6 twist patterns, q^3 tuples each, minus the q
    // complement-trapped tuples per pattern
    std::uint64_t qq = static_cast<std::uint64_t>(q);
    check_sizes(ck, s, 6 * qq * (qq * qq - 1), 0);
    ck.expect(s->extensions.size() == s->orbit_count, "missing extension verdicts");
    for (const auto& e : s->extensions)
        ck.expect(e.extends && (e.via == "T4a" || e.via == "T4b"),
                  "orbit " + std::to_string(e.orbit) + " fails to extend via T4a/T4b");
    std::set<int> supers;
    for (const auto& e : s->extensions) supers.insert(e.super_orbit);
    ck.expect(supers.size() == 1 && s->super_orbit_count == 1,
              "extensions should land in the single family orbit");
}

} // namespace

VerifyResult run_verify(const VerifyOptions& opts) {
    if (opts.q_hi > opts.q_ceiling)
        throw BoundExceeded("q range exceeds the configured ceiling " +
                            std::to_string(opts.q_ceiling));
    VerifyResult result;
    for (int q = std::max(7, opts.q_lo); q <= opts.q_hi; ++q) {
        if (!is_prime(q)) continue;
        result.primes.push_back(q);
        verify_lambda5(result, q, opts.classify);
        verify_lambda6(result, q, opts.classify);
        bool lambda6_existence = (q - 1) % 3 == 0;
        verify_lambda3(result, q, opts.classify, lambda6_existence);
    }
    return result;
}

std::string verify_summary(const VerifyResult& result) {
    std::ostringstream os;
    os << "primes checked:";
    for (int q : result.primes) os << " " << q;
    os << "\nreports: " << result.reports << "\n";
    for (const auto& f : result.flags) os << "flagged: " << f << "\n";
    if (result.failures.empty()) {
        os << "all assertions passed\n";
    } else {
        for (const auto& f : result.failures) os << "FAILED: " << f << "\n";
        os << result.failures.size() << " assertion(s) failed\n";
    }
    return os.str();
}

} // namespace surfact
