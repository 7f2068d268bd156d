#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "surfact/group.hpp"

using namespace surfact;

TEST_CASE("build_group validates the family presentations") {
    GroupSpec g55(11, 5, 3, false);
    CHECK(g55.order() == 55);
    CHECK(g55.description() == "C11:5C5");

    GroupSpec c42(7, 6, 1, false);
    CHECK(c42.order() == 42);
    CHECK(c42.description() == "C42");

    // r = 8 is 1 mod 7 and -1 mod 3: the C7 x D3 shape, order 42
    GroupSpec cxd(21, 2, 8, false);
    CHECK(cxd.order() == 42);
    CHECK(cxd.twist_exact_order() == 2);
    CHECK(cxd.description() == "C7xD3");

    CHECK_THROWS_AS(build_group(11, 5, 2, false), InvalidTwist); // 2^5 = 32 != 1 mod 11
    CHECK_THROWS_AS(build_group(10, 2, 5, false), InvalidTwist); // gcd(5,10) != 1
}

TEST_CASE("root_of_order picks the smallest root of exact order") {
    CHECK(root_of_order(11, 5) == 3);
    CHECK(root_of_order(7, 6) == 3);
    CHECK(root_of_order(7, 3) == 2);
    CHECK(root_of_order(13, 6) == 4);
    CHECK(root_of_order(31, 6) == 6);
    CHECK_THROWS_AS(root_of_order(7, 5), NoSuchRoot);
}

TEST_CASE("multiplication law, inverses and element orders") {
    GroupSpec g(7, 6, 3, false);
    GroupElement a{1, 0, 0}, b{0, 1, 0};
    CHECK(g.conjugate(b, a) == GroupElement{3, 0, 0});
    CHECK(g.element_order(a) == 7);
    // (1,3)^2 = (1 + 3^3, 0) = (28 mod 7, 0) = identity
    CHECK(g.element_order(g.make(1, 3)) == 2);
    CHECK(g.multiply(g.make(1, 3), g.make(1, 3)) == g.identity());

    GroupSpec g12(7, 6, 3, true);
    CHECK(g12.order() == 84);
    CHECK(g12.element_order(g12.gen_z()) == 2);
    CHECK(g12.element_order(g12.make(0, 1, 1)) == 6);
    CHECK(g12.element_order(g12.make(0, 3, 1)) == 2);
}

TEST_CASE("group axioms hold exhaustively on small groups") {
    // exhaustive associativity below order 500, randomized above
    for (const GroupSpec& g : {GroupSpec(11, 5, 3, false), GroupSpec(7, 6, 3, true),
                               GroupSpec(21, 2, 20, false), GroupSpec(5, 4, 2, false)}) {
        int n = g.order();
        REQUIRE(n <= 500);
        for (int i = 0; i < n; ++i) {
            GroupElement x = g.element_at(i);
            CHECK(g.multiply(x, g.inverse(x)) == g.identity());
            CHECK(n % g.element_order(x) == 0);
            CHECK(g.element_index(x) == i);
        }
        size_t bad = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    GroupElement x = g.element_at(i), y = g.element_at(j), z = g.element_at(k);
                    if (g.multiply(g.multiply(x, y), z) != g.multiply(x, g.multiply(y, z))) ++bad;
                }
        CHECK(bad == 0);
    }
    GroupSpec big(61, 6, root_of_order(61, 6), true); // order 732
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, big.order() - 1);
    for (int trial = 0; trial < 5000; ++trial) {
        GroupElement x = big.element_at(pick(rng)), y = big.element_at(pick(rng)),
                     z = big.element_at(pick(rng));
        CHECK(big.multiply(big.multiply(x, y), z) == big.multiply(x, big.multiply(y, z)));
    }
}

TEST_CASE("conjugacy classes of C11:5C5") {
    GroupSpec g(11, 5, 3, false);
    auto classes = conjugacy_classes(g);
    CHECK(classes.size() == 7);
    int order5_classes = 0, size5 = 0, size11 = 0, total = 0;
    for (const auto& cls : classes) {
        total += static_cast<int>(cls.size());
        CHECK(g.order() % cls.size() == 0);
        if (cls.size() == 5) ++size5;
        if (cls.size() == 11) ++size11;
        if (g.element_order(cls.front()) == 5) ++order5_classes;
    }
    CHECK(total == 55);
    CHECK(size5 == 2);   // the two <r>-orbits inside <a>
    CHECK(size11 == 4);  // {a^l b^j}, j = 1..4
    CHECK(order5_classes == 4);
}

TEST_CASE("C_q:3C3 has exactly two classes of order-3 elements") {
    for (int q : {7, 13}) {
        GroupSpec g(q, 3, root_of_order(q, 3), false);
        int order3_classes = 0;
        for (const auto& cls : conjugacy_classes(g))
            if (g.element_order(cls.front()) == 3) ++order3_classes;
        CHECK(order3_classes == 2);
    }
}

TEST_CASE("generated subgroups") {
    GroupSpec g(11, 5, 3, false);
    CHECK(cyclic_subgroup(g, g.gen_a()).order() == 11);
    std::vector<GroupElement> two{g.gen_c(), g.gen_a()};
    CHECK(generated_subgroup(g, two).order() == 55);
    CHECK(cyclic_subgroup(g, g.gen_c()).order() == 5);
    CHECK(cyclic_subgroup(g, g.make(1, 1)).order() == 5);
    std::vector<GroupElement> both{g.make(0, 1), g.make(1, 1)};
    CHECK(generated_subgroup(g, both).order() == 55);

    Subgroup s = generated_subgroup(g, two);
    Subgroup again = generated_subgroup(g, std::span<const GroupElement>(s.elements));
    CHECK(again.elements == s.elements); // idempotent
}

TEST_CASE("automorphism groups by brute force") {
    GroupSpec g55(11, 5, 3, false);
    auto auts = automorphism_group(g55);
    CHECK(auts.size() == 110); // a -> a^u, b -> a^v b

    GroupSpec c7(7, 1, 1, false);
    CHECK(automorphism_group(c7).size() == 6);

    GroupSpec g42(7, 6, 3, false);
    CHECK(automorphism_group(g42).size() == 42);

    GroupSpec g12(7, 6, 3, true);
    CHECK(automorphism_group(g12).size() == 84); // 2 q (q-1)

    CHECK_THROWS_AS(automorphism_group(GroupSpec(11, 5, 3, false), 10), BoundExceeded);
}

TEST_CASE("automorphisms form a group under composition") {
    GroupSpec g(11, 5, 3, false);
    auto auts = automorphism_group(g);
    auto key = [&](const GroupAutomorphism& phi) {
        return std::tuple(phi.image_a, phi.image_c, phi.image_z);
    };
    std::set<std::tuple<GroupElement, GroupElement, GroupElement>> all;
    for (const auto& phi : auts) all.insert(key(phi));
    CHECK(all.size() == auts.size());

    std::mt19937 rng(7);
    std::uniform_int_distribution<size_t> pick(0, auts.size() - 1);
    bool has_identity = false;
    for (const auto& phi : auts)
        if (phi.image_a == g.gen_a() && phi.image_c == g.gen_c()) has_identity = true;
    CHECK(has_identity);
    for (int trial = 0; trial < 50; ++trial) {
        const auto& f = auts[pick(rng)];
        const auto& h = auts[pick(rng)];
        CHECK(all.count(key(compose(g, f, h))) == 1);
    }
    // contains inverses: some power of each element is its inverse
    for (int trial = 0; trial < 20; ++trial) {
        const auto& f = auts[pick(rng)];
        GroupAutomorphism acc = f;
        bool inverted = false;
        for (int k = 0; k < 2 * g.order() && !inverted; ++k) {
            if (apply(g, acc, g.gen_a()) == g.gen_a() && apply(g, acc, g.gen_c()) == g.gen_c()) {
                inverted = true; // acc = f^(k+1) is the identity, so f^k was f^-1
            }
            acc = compose(g, acc, f);
        }
        CHECK(inverted);
    }
    // automorphisms preserve multiplication
    std::uniform_int_distribution<int> elem(0, g.order() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        const auto& f = auts[pick(rng)];
        GroupElement x = g.element_at(elem(rng)), y = g.element_at(elem(rng));
        CHECK(apply(g, f, g.multiply(x, y)) == g.multiply(apply(g, f, x), apply(g, f, y)));
    }
}

TEST_CASE("twists generating the same cyclic subgroup give isomorphic groups") {
    // the four primitive 5th roots mod 11 all generate <3>
    GroupSpec base(11, 5, 3, false);
    for (int r : {4, 5, 9}) {
        GroupSpec other(11, 5, r, false);
        CHECK(find_isomorphism(base, other).has_value());
        CHECK(find_isomorphism(other, base).has_value());
    }
    // but C55 differs from C11:5C5
    CHECK_FALSE(find_isomorphism(GroupSpec(11, 5, 1, false), base).has_value());
}

TEST_CASE("center of the central product") {
    GroupSpec g12(7, 6, 3, true);
    auto z = center(g12);
    CHECK(z.size() == 2);
    CHECK(z[0] == g12.identity());
    CHECK(z[1] == g12.gen_z());
}
