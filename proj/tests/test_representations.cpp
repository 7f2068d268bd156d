#include <complex>
#include <vector>

#include "doctest.h"
#include "surfact/representations.hpp"

using namespace surfact;

namespace {

// test-only oracle: explicit matrices over complex doubles, fixed dimension
// as the trace of the averaging projector
using Matrix = std::vector<std::vector<std::complex<double>>>;

Matrix mat_identity(int d) {
    Matrix m(static_cast<size_t>(d), std::vector<std::complex<double>>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1.0;
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    size_t d = a.size();
    Matrix out(d, std::vector<std::complex<double>>(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t k = 0; k < d; ++k)
            for (size_t j = 0; j < d; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

std::complex<double> root(int N, long long e) {
    double arg = 2.0 * 3.141592653589793238462643 * static_cast<double>(((e % N) + N) % N) / N;
    return {std::cos(arg), std::sin(arg)};
}

struct MatrixRep {
    Matrix rho_a, rho_c, rho_z;
    int degree;
};

MatrixRep matrix_rep(const GroupSpec& g, const Irrep& rep) {
    int q = g.base_order(), m = g.twist_order();
    if (rep.kind == Irrep::Kind::Linear) {
        MatrixRep out{mat_identity(1), mat_identity(1), mat_identity(1), 1};
        out.rho_c[0][0] = root(m, rep.linear_label);
        out.rho_z[0][0] = rep.tensor_sign;
        return out;
    }
    MatrixRep out{mat_identity(m), Matrix(static_cast<size_t>(m),
                                          std::vector<std::complex<double>>(static_cast<size_t>(m))),
                  mat_identity(m), m};
    for (int t = 0; t < m; ++t)
        out.rho_a[static_cast<size_t>(t)][static_cast<size_t>(t)] =
            root(q, static_cast<long long>(rep.orbit_label) * g.twist_pow(t));
    for (int t = 0; t < m; ++t)
        out.rho_c[static_cast<size_t>(t)][static_cast<size_t>((t + 1) % m)] = 1.0;
    for (int t = 0; t < m; ++t)
        out.rho_z[static_cast<size_t>(t)][static_cast<size_t>(t)] = rep.tensor_sign;
    return out;
}

Matrix rep_matrix_of(const GroupSpec& g, const MatrixRep& rep, const GroupElement& x) {
    Matrix out = mat_identity(rep.degree);
    for (int k = 0; k < x.base; ++k) out = mat_mul(out, rep.rho_a);
    for (int k = 0; k < x.twist; ++k) out = mat_mul(out, rep.rho_c);
    if (x.central) out = mat_mul(out, rep.rho_z);
    return out;
}

int fixed_dim_matrix_oracle(const GroupSpec& g, const Irrep& rep, const Subgroup& sub) {
    MatrixRep mats = matrix_rep(g, rep);
    Matrix avg(static_cast<size_t>(mats.degree),
               std::vector<std::complex<double>>(static_cast<size_t>(mats.degree)));
    for (const auto& h : sub.elements) {
        Matrix m = rep_matrix_of(g, mats, h);
        for (size_t i = 0; i < avg.size(); ++i)
            for (size_t j = 0; j < avg.size(); ++j) avg[i][j] += m[i][j];
    }
    std::complex<double> trace = 0.0;
    for (size_t i = 0; i < avg.size(); ++i) trace += avg[i][i] / static_cast<double>(sub.order());
    REQUIRE(std::abs(trace.imag()) < 1e-8);
    double rounded = std::round(trace.real());
    REQUIRE(std::abs(trace.real() - rounded) < 1e-8);
    return static_cast<int>(rounded);
}

} // namespace

TEST_CASE("irreducible representation inventories") {
    GroupSpec g110(11, 10, root_of_order(11, 10), false);
    auto reps110 = irreducible_representations(g110);
    int linear = 0, induced = 0;
    for (const auto& r : reps110) (r.kind == Irrep::Kind::Linear ? linear : induced)++;
    CHECK(linear == 10);
    CHECK(induced == 1);

    GroupSpec g42(7, 6, root_of_order(7, 6), false);
    auto reps42 = irreducible_representations(g42);
    linear = induced = 0;
    for (const auto& r : reps42) (r.kind == Irrep::Kind::Linear ? linear : induced)++;
    CHECK(linear == 6);
    CHECK(induced == 1);

    GroupSpec g84(7, 6, root_of_order(7, 6), true);
    auto reps84 = irreducible_representations(g84);
    linear = induced = 0;
    for (const auto& r : reps84) (r.kind == Irrep::Kind::Linear ? linear : induced)++;
    CHECK(linear == 12);
    CHECK(induced == 2);

    CHECK_THROWS_AS(irreducible_representations(GroupSpec(21, 2, 20, false)), UnsupportedGroup);
    CHECK_THROWS_AS(irreducible_representations(GroupSpec(7, 6, root_of_order(7, 3), false)),
                    UnsupportedGroup);
}

TEST_CASE("completeness over the in-scope groups") {
    for (int q : {7, 13, 31, 61, 97}) {
        if ((q - 1) % 6 == 0) {
            // sum of degree^2 = |G| is asserted inside the constructor path
            CHECK(!irreducible_representations(GroupSpec(q, 6, root_of_order(q, 6), false)).empty());
            CHECK(!irreducible_representations(GroupSpec(q, 6, root_of_order(q, 6), true)).empty());
        }
        if ((q - 1) % 10 == 0)
            CHECK(!irreducible_representations(GroupSpec(q, 10, root_of_order(q, 10), false)).empty());
    }
}

TEST_CASE("character values") {
    GroupSpec g(11, 10, root_of_order(11, 10), false);
    auto reps = irreducible_representations(g);
    const Irrep* u1 = nullptr;
    const Irrep* v = nullptr;
    for (const auto& r : reps) {
        if (r.kind == Irrep::Kind::Linear && r.linear_label == 1) u1 = &r;
        if (r.kind == Irrep::Kind::Induced) v = &r;
    }
    REQUIRE(u1 != nullptr);
    REQUIRE(v != nullptr);

    // chi_{U_1}(c) = w_10 inside Z[w_110]
    CycloSum val = character_value(g, *u1, g.gen_c());
    REQUIRE(val.terms.size() == 1);
    CHECK(val.terms[0].first == 11); // 110/10
    CHECK(val.terms[0].second == 1);

    // induced character vanishes off the base subgroup
    for (int k = 1; k < 10; ++k)
        CHECK(character_value(g, *v, g.make(0, k)).terms.empty());
    // chi_V(identity) = degree
    CycloSum at_id = character_value(g, *v, g.identity());
    long long total = 0;
    for (auto& [e, c] : at_id.terms) {
        CHECK(e == 0);
        total += c;
    }
    CHECK(total == 10);
}

TEST_CASE("character orthogonality by exact cyclotomic arithmetic") {
    for (const GroupSpec& g :
         {GroupSpec(11, 10, root_of_order(11, 10), false),
          GroupSpec(7, 6, root_of_order(7, 6), false), GroupSpec(7, 6, root_of_order(7, 6), true),
          GroupSpec(7, 3, root_of_order(7, 3), false)}) {
        auto reps = irreducible_representations(g);
        for (size_t i = 0; i < reps.size(); ++i)
            for (size_t j = i; j < reps.size(); ++j) {
                long long ip = character_inner_product(g, reps[i], reps[j]);
                CHECK(ip == (i == j ? 1 : 0));
            }
    }
}

TEST_CASE("fixed subspace dimensions: the worked identities") {
    GroupSpec g(11, 10, root_of_order(11, 10), false);
    auto reps = irreducible_representations(g);
    Subgroup H = cyclic_subgroup(g, g.gen_a());
    Subgroup C = cyclic_subgroup(g, g.gen_c());

    for (const auto& rep : reps) {
        if (rep.kind == Irrep::Kind::Linear && rep.linear_label == 0) {
            CHECK(fixed_subspace_dim(g, rep, H) == 1);
            CHECK(fixed_subspace_dim(g, rep, C) == 1);
            CHECK(fixed_subspace_dim(g, rep, whole_group(g)) == 1);
        }
        if (rep.kind == Irrep::Kind::Induced) {
            CHECK(fixed_subspace_dim(g, rep, C) == 1);
            CHECK(fixed_subspace_dim(g, rep, H) == 0);
            // d^H + sum_t d^{H_t} = 10 = d
            int total = fixed_subspace_dim(g, rep, H);
            for (int t = 1; t <= 10; ++t)
                total += fixed_subspace_dim(g, rep, cyclic_subgroup(g, g.make(t, 1)));
            CHECK(total == 10);
        }
    }
}

TEST_CASE("fixed dimensions agree with the matrix-projector oracle") {
    for (const GroupSpec& g : {GroupSpec(11, 10, root_of_order(11, 10), false),
                               GroupSpec(7, 6, root_of_order(7, 6), true)}) {
        REQUIRE(g.order() <= 500);
        auto reps = irreducible_representations(g);
        std::vector<Subgroup> subs{cyclic_subgroup(g, g.gen_a()), cyclic_subgroup(g, g.gen_c()),
                                   cyclic_subgroup(g, g.make(1, 1)), whole_group(g),
                                   trivial_subgroup(g)};
        if (g.has_central_involution()) {
            subs.push_back(cyclic_subgroup(g, g.make(0, 1, 1)));
            subs.push_back(cyclic_subgroup(g, g.gen_z()));
        }
        for (const auto& rep : reps)
            for (const auto& sub : subs)
                CHECK(fixed_subspace_dim(g, rep, sub) == fixed_dim_matrix_oracle(g, rep, sub));
    }
}
