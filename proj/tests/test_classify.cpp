#include <algorithm>
#include <set>

#include "doctest.h"
#include "surfact/classify.hpp"

using namespace surfact;

namespace {

const StratumReport* stratum_at(const ClassificationReport& rep, const std::vector<int>& periods,
                                int twist_exact_order, bool central = false) {
    for (const auto& s : rep.strata)
        if (s.signature.periods == periods && s.group.twist_exact_order() == twist_exact_order &&
            s.group.has_central_involution() == central)
            return &s;
    return nullptr;
}

} // namespace

TEST_CASE("candidate group inventories") {
    auto g5 = candidate_groups(11, 5);
    CHECK(g5.size() == 2);
    auto g5bad = candidate_groups(13, 5); // 13 != 1 mod 5
    CHECK(g5bad.size() == 1);
    auto g6 = candidate_groups(7, 6);
    CHECK(g6.size() == 6);
    auto g6bad = candidate_groups(11, 6); // 11 != 1 mod 3
    CHECK(g6bad.size() == 4);
    auto g3 = candidate_groups(7, 3);
    CHECK(g3.size() == 2);
}

TEST_CASE("classify guards") {
    CHECK_THROWS_AS(classify_genus(9, 5), NotPrime);      // q = 8
    CHECK_THROWS_AS(classify_genus(7, 5), GenusTooSmall); // g < 8
    CHECK_THROWS_AS(classify_genus(12, 7), UnsupportedOrder);
}

TEST_CASE("classify (12, 5): the order-55 story") {
    ClassificationReport rep = classify_genus(12, 5);
    CHECK(rep.existence);
    CHECK(rep.q == 11);
    REQUIRE(rep.strata.size() == 1);
    const StratumReport& s = rep.strata[0];
    CHECK(s.signature == make_signature(0, {5, 5, 5}));
    CHECK(s.group.description() == "C11:5C5");
    CHECK(s.orbit_count == 4);
    CHECK(s.vector_count == 1320);
    CHECK(s.super_orbit_count == 4);
    REQUIRE(s.extensions.size() == 4);
    std::set<int> subs, supers;
    for (const auto& e : s.extensions) {
        CHECK(e.extends);
        CHECK(e.via == "T1");
        subs.insert(e.orbit);
        supers.insert(e.super_orbit);
    }
    CHECK(subs.size() == 4);
    CHECK(supers.size() == 4);
    CHECK(s.full_aut.order == 110);
    REQUIRE(s.jacobian.has_value());
    CHECK(s.jacobian->remainder_dim == 0);

    // C_{55} is checked empty, and the 15q route is closed
    bool c55_empty = false, route335 = false;
    for (const auto& line : rep.computed_empty) {
        if (line.find("C55") != std::string::npos) c55_empty = true;
        if (line.find("(0; 3,3,5)") != std::string::npos) route335 = true;
    }
    CHECK(c55_empty);
    CHECK(route335);
}

TEST_CASE("classify (14, 5): congruence failure") {
    ClassificationReport rep = classify_genus(14, 5);
    CHECK_FALSE(rep.existence);
    CHECK(rep.strata.empty());
}

TEST_CASE("classify (8, 6): the worked genus-8 case") {
    ClassificationReport rep = classify_genus(8, 6);
    CHECK(rep.existence);

    const StratumReport* family = stratum_at(rep, {2, 2, 3, 3}, 6);
    REQUIRE(family);
    CHECK(family->orbit_count == 1);
    REQUIRE(family->jacobian.has_value());
    CHECK(family->jacobian->remainder_dim == 0);

    const StratumReport* s366_3 = stratum_at(rep, {3, 6, 6}, 3);
    REQUIRE(s366_3);
    CHECK(s366_3->orbit_count == 2);
    const StratumReport* s366_6 = stratum_at(rep, {3, 6, 6}, 6);
    REQUIRE(s366_6);
    CHECK(s366_6->orbit_count == 2); // theta_2 and its conjugate class

    const StratumReport* xs = stratum_at(rep, {2, 6, 6}, 6, true);
    REQUIRE(xs);
    CHECK(xs->orbit_count == 2);
    CHECK(xs->group.description() == "(C7:6C6)xC2");

    // nothing at (0;2,2,2,6) and (0;2,7,42)
    CHECK(stratum_at(rep, {2, 2, 2, 6}, 1) == nullptr);
    for (const auto& s : rep.strata) {
        CHECK(s.signature.periods != std::vector<int>{2, 2, 2, 6});
        CHECK(s.signature.periods != std::vector<int>{2, 7, 42});
    }
    int empty2226 = 0, empty2742 = 0;
    for (const auto& line : rep.computed_empty) {
        if (line.find("(0; 2,2,2,6)") != std::string::npos) ++empty2226;
        if (line.find("(0; 2,7,42)") != std::string::npos) ++empty2742;
    }
    CHECK(empty2226 == 6); // all six candidate groups
    CHECK(empty2742 == 6);

    // every (0;3,6,6) orbit extends, and the T3 restrictions land on the family
    for (const StratumReport* s : {s366_3, s366_6}) {
        std::set<int> covered;
        for (const auto& e : s->extensions) {
            CHECK(e.extends);
            covered.insert(e.orbit);
        }
        CHECK(covered.size() == s->orbit_count);
    }
    int t3 = 0;
    for (const auto& e : xs->extensions)
        if (e.via == "T3") {
            CHECK(e.extends);
            ++t3;
        }
    CHECK(t3 == 2);
}

TEST_CASE("classify (14, 6) carries the genus-14 caveat") {
    ClassificationReport rep = classify_genus(14, 6);
    CHECK(rep.existence);
    bool caveat = false;
    for (const auto& e : rep.excluded_by_citation)
        if (e.claim.find("genus 14") != std::string::npos &&
            e.claim.find("PSL(2,13)") != std::string::npos)
            caveat = true;
    CHECK(caveat);
}

TEST_CASE("classify (8, 3): the corollary at q=7") {
    ClassificationReport rep = classify_genus(8, 3);
    CHECK(rep.existence);
    const StratumReport* s = stratum_at(rep, {3, 3, 3, 3}, 3);
    REQUIRE(s);
    CHECK(s->orbit_count >= 1);
    CHECK(s->extensions.size() == s->orbit_count);
    for (const auto& e : s->extensions) {
        CHECK(e.extends);
        CHECK((e.via == "T4a" || e.via == "T4b"));
    }
    CHECK(s->super_orbit_count == 1);

    // (1;3) is empty for both groups, and C_{21} everywhere
    int torus_empty = 0;
    for (const auto& line : rep.computed_empty)
        if (line.find("(1; 3)") != std::string::npos) ++torus_empty;
    CHECK(torus_empty == 2);

    // no stratum for C_{3q}
    for (const auto& st : rep.strata) CHECK(st.group.twist_exact_order() != 1);
}

TEST_CASE("classify (12, 3): existence fails off the congruence") {
    ClassificationReport rep = classify_genus(12, 3); // q = 11, 11 != 1 mod 3
    CHECK_FALSE(rep.existence);
    CHECK(rep.strata.empty());
}

TEST_CASE("vectors-only options skip extensions and jacobians") {
    ClassifyOptions opts;
    opts.with_extensions = false;
    opts.with_jacobians = false;
    ClassificationReport rep = classify_genus(12, 5, opts);
    REQUIRE(rep.strata.size() == 1);
    CHECK(rep.strata[0].extensions.empty());
    CHECK_FALSE(rep.strata[0].jacobian.has_value());
}

TEST_CASE("jacobians attach independently of the extension phase") {
    ClassifyOptions opts;
    opts.with_extensions = false;
    for (auto [g, lambda] : {std::pair{8, 6}, std::pair{8, 3}}) {
        ClassificationReport rep = classify_genus(g, lambda, opts);
        bool family_jacobian = false;
        for (const auto& s : rep.strata) {
            CHECK(s.extensions.empty());
            if (s.signature.periods == std::vector<int>{2, 2, 3, 3} && s.jacobian)
                family_jacobian = true;
            if (lambda == 3 && s.signature.periods == std::vector<int>{3, 3, 3, 3})
                CHECK(s.jacobian.has_value());
        }
        if (lambda == 6) CHECK(family_jacobian);
    }
}

TEST_CASE("orbit sizes are reported and sum to the vector count") {
    ClassificationReport rep = classify_genus(12, 5);
    REQUIRE(rep.strata.size() == 1);
    const StratumReport& s = rep.strata[0];
    REQUIRE(s.orbit_sizes.size() == 4);
    std::uint64_t total = 0;
    for (std::uint64_t n : s.orbit_sizes) {
        CHECK(n == 330);
        total += n;
    }
    CHECK(total == s.vector_count);
}
