#include <algorithm>

#include "doctest.h"
#include "surfact/extensions.hpp"
#include "surfact/jacobian.hpp"

using namespace surfact;

namespace {

std::vector<LabeledSubgroup> decomposition_collection(const GroupSpec& g, bool with_z,
                                              const std::string& label) {
    std::vector<LabeledSubgroup> out;
    out.push_back({"<a>", cyclic_subgroup(g, g.gen_a())});
    for (int t = 1; t <= g.twist_order(); ++t)
        out.push_back({label, cyclic_subgroup(g, g.make(t, 1, with_z ? 1 : 0))});
    return out;
}

} // namespace

TEST_CASE("the J-set of the order-10q action") {
    GroupSpec g(11, 10, root_of_order(11, 10), false);
    GeneratingVector action = Theta_n_2510(g, 1);
    auto jset = relevant_representations(action);

    // gamma = 0: the trivial representation is excluded
    for (const auto& rep : jset)
        CHECK(!(rep.kind == Irrep::Kind::Linear && rep.linear_label == 0));
    // the induced representation contributes
    bool induced_in = false;
    for (const auto& rep : jset)
        if (rep.kind == Irrep::Kind::Induced) induced_in = true;
    CHECK(induced_in);
    // U_i with i odd, i != 5 are exactly the linear members
    std::vector<int> linear_labels;
    for (const auto& rep : jset)
        if (rep.kind == Irrep::Kind::Linear) linear_labels.push_back(rep.linear_label);
    std::sort(linear_labels.begin(), linear_labels.end());
    CHECK(linear_labels == std::vector<int>{1, 3, 7, 9});

    // total dimension bookkeeping: sum over J of d_V * (criterion value) = g
    // (the isotypic dimensions of the Jacobian sum to g); here just check
    // the headline: 4 linear + 1 induced
    CHECK(jset.size() == 5);
}

TEST_CASE("the trivial representation enters the J-set iff the quotient genus is nonzero") {
    // a genuine genus-1 quotient: C7:3C3 acting with signature (1;7)
    GroupSpec g(7, 3, root_of_order(7, 3), false);
    OrbitSet torus = equivalence_orbits(g, make_signature(1, {7}));
    REQUIRE(!torus.empty());
    const GeneratingVector& v = torus.orbits().front().representative;
    CHECK(quotient_genus(v, trivial_subgroup(g)) == 10); // 2g-2 = 21 * 6/7
    bool trivial_in = false;
    for (const auto& rep : relevant_representations(v))
        if (rep.kind == Irrep::Kind::Linear && rep.linear_label == 0 && rep.tensor_sign > 0)
            trivial_in = true;
    CHECK(trivial_in);
}

TEST_CASE("admissibility of the worked collections") {
    GroupSpec g(11, 10, root_of_order(11, 10), false);
    GeneratingVector action = Theta_n_2510(g, 1);

    auto collection = decomposition_collection(g, false, "<c>");
    CHECK(check_admissible(action, collection));

    std::vector<LabeledSubgroup> single{{"<a>", cyclic_subgroup(g, g.gen_a())}};
    CHECK(check_admissible(action, single));

    // eleven copies of <c> overflow the induced representation
    std::vector<LabeledSubgroup> eleven;
    for (int t = 0; t < 11; ++t) eleven.push_back({"<c>", cyclic_subgroup(g, g.gen_c())});
    CHECK_FALSE(check_admissible(action, eleven));

    Subgroup alien = cyclic_subgroup(GroupSpec(7, 6, 3, false), GroupElement{1, 0, 0});
    std::vector<LabeledSubgroup> bad{{"<x>", alien}};
    CHECK_THROWS_AS(check_admissible(action, bad), NotASubgroup);
}

TEST_CASE("Jacobian decomposition of the order-10q actions") {
    GroupSpec g(11, 10, root_of_order(11, 10), false);
    for (int n = 1; n <= 4; ++n) {
        GeneratingVector action = Theta_n_2510(g, n);
        auto collection = decomposition_collection(g, false, "<c>");
        std::vector<GenusExpectation> expected{{"<a>", 2}, {"<c>", 1}};
        DecompositionReport rep = decompose_jacobian(action, collection, expected);
        REQUIRE(rep.factors.size() == 2);
        CHECK(rep.factors[0].subgroup == "<a>");
        CHECK(rep.factors[0].genus == 2);
        CHECK(rep.factors[0].multiplicity == 1);
        CHECK(rep.factors[1].subgroup == "<c>");
        CHECK(rep.factors[1].genus == 1); // alpha = (11-1)/10
        CHECK(rep.factors[1].multiplicity == 10);
        CHECK(rep.remainder_dim == 0);
        CHECK(rep.surface_genus == 12);
        CHECK(rep.admissible_equalities);
        CHECK(rep.notes.empty());
    }
}

TEST_CASE("Jacobian decomposition of the order-6q family at q=7") {
    GroupSpec g(7, 6, root_of_order(7, 6), false);
    GeneratingVector action = theta_3m_2233(g, 0);
    auto collection = decomposition_collection(g, false, "<c>");
    std::vector<GenusExpectation> expected{{"<a>", 2}, {"<c>", 1}};
    DecompositionReport rep = decompose_jacobian(action, collection, expected);
    REQUIRE(rep.factors.size() == 2);
    CHECK(rep.factors[0] == JacobianFactor{"<a>", 2, 1});
    CHECK(rep.factors[1] == JacobianFactor{"<c>", 1, 6});
    CHECK(rep.remainder_dim == 0);
    CHECK(rep.surface_genus == 8);
    CHECK(rep.admissible_equalities);
}

TEST_CASE("Jacobian decomposition of the order-12q surfaces at q=7") {
    GroupSpec g(7, 6, root_of_order(7, 6), true);
    for (int which : {1, 2}) {
        GeneratingVector action = Theta_i_266(g, which);
        auto collection = decomposition_collection(g, true, "<cz>");
        DecompositionReport rep = decompose_jacobian(action, collection);
        REQUIRE(rep.factors.size() == 2);
        CHECK(rep.factors[0] == JacobianFactor{"<a>", 2, 1});
        // the computed genus of S/<cz>: beta = (q-1)/6 = 1
        CHECK(rep.factors[1] == JacobianFactor{"<cz>", 1, 6});
        CHECK(rep.remainder_dim == 0);
        CHECK(rep.surface_genus == 8);
        CHECK(rep.admissible_equalities);
    }
}

TEST_CASE("whole-group collection leaves the full remainder") {
    GroupSpec g(11, 10, root_of_order(11, 10), false);
    GeneratingVector action = Theta_n_2510(g, 1);
    std::vector<LabeledSubgroup> whole{{"<G>", whole_group(g)}};
    DecompositionReport rep = decompose_jacobian(action, whole);
    REQUIRE(rep.factors.size() == 1);
    CHECK(rep.factors[0].genus == 0);
    CHECK(rep.remainder_dim == 12);
}

TEST_CASE("inadmissible collections are rejected") {
    GroupSpec g(11, 10, root_of_order(11, 10), false);
    GeneratingVector action = Theta_n_2510(g, 1);
    std::vector<LabeledSubgroup> eleven;
    for (int t = 0; t < 11; ++t) eleven.push_back({"<c>", cyclic_subgroup(g, g.gen_c())});
    CHECK_THROWS_AS(decompose_jacobian(action, eleven), NotAdmissible);
}

TEST_CASE("deviation notes fire on wrong expectations") {
    GroupSpec g(7, 6, root_of_order(7, 6), false);
    GeneratingVector action = theta_3m_2233(g, 0);
    auto collection = decomposition_collection(g, false, "<c>");
    std::vector<GenusExpectation> wrong{{"<c>", 5}};
    DecompositionReport rep = decompose_jacobian(action, collection, wrong);
    REQUIRE(rep.notes.size() == 1);
    CHECK(rep.notes[0].find("deviates") != std::string::npos);
}
