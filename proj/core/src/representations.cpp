#include "surfact/representations.hpp"

#include <algorithm>
#include <numeric>

namespace surfact {

std::string Irrep::name() const {
    std::string s = kind == Kind::Linear ? "U" + std::to_string(linear_label)
                                         : "V" + std::to_string(orbit_label);
    if (tensor_sign < 0) s += "-";
    return s;
}

int character_field_order(const GroupSpec& g) {
    long long N = std::lcm(static_cast<long long>(g.base_order()),
                           static_cast<long long>(g.twist_order()));
    if (g.has_central_involution()) N = std::lcm(N, 2LL);
    return static_cast<int>(N);
}

namespace {

void require_representable(const GroupSpec& g) {
    if (!is_prime(g.base_order()))
        throw UnsupportedGroup("representations need a prime base order, got " +
                               std::to_string(g.base_order()));
    if (g.twist_exact_order() != g.twist_order())
        throw UnsupportedGroup("representations need a twist of exact order m in " +
                               g.description());
}

} // namespace

std::vector<Irrep> irreducible_representations(const GroupSpec& g) {
    require_representable(g);
    int q = g.base_order(), m = g.twist_order();
    std::vector<int> signs = g.has_central_involution() ? std::vector<int>{1, -1}
                                                        : std::vector<int>{1};
    std::vector<Irrep> out;
    for (int sign : signs)
        for (int i = 0; i < m; ++i)
            out.push_back({Irrep::Kind::Linear, i, 0, sign, 1});

    // minimal representatives of the <r>-orbits on (Z/q)^*
    std::vector<char> seen(static_cast<size_t>(q), 0);
    for (int k = 1; k < q; ++k) {
        if (seen[static_cast<size_t>(k)]) continue;
        int v = k;
        for (int t = 0; t < m; ++t) {
            seen[static_cast<size_t>(v)] = 1;
            v = static_cast<int>(static_cast<long long>(v) * g.twist() % q);
        }
        for (int sign : signs) out.push_back({Irrep::Kind::Induced, 0, k, sign, m});
    }

    long long sum_sq = 0;
    for (const auto& rep : out) sum_sq += static_cast<long long>(rep.degree) * rep.degree;
    if (sum_sq != g.order())
        throw std::logic_error("irreducible representations: sum of degree^2 != |G|");
    return out;
}

CycloSum character_value(const GroupSpec& g, const Irrep& rep, const GroupElement& x) {
    int N = character_field_order(g);
    int q = g.base_order(), m = g.twist_order();
    long long sign_exp = (rep.tensor_sign < 0 && x.central) ? N / 2 : 0;
    if (rep.kind == Irrep::Kind::Linear) {
        long long e = static_cast<long long>(rep.linear_label) * x.twist * (N / m) + sign_exp;
        return cyclo_root(N, e);
    }
    if (x.twist != 0) return cyclo_zero(N); // induced character vanishes off the base
    CycloSum v{N, {}};
    v.terms.reserve(static_cast<size_t>(m));
    for (int t = 0; t < m; ++t) {
        long long e = static_cast<long long>(rep.orbit_label) * g.twist_pow(t) % q * x.base % q;
        v.terms.emplace_back(static_cast<int>((e * (N / q) + sign_exp) % N), 1);
    }
    return v;
}

int fixed_subspace_dim(const GroupSpec& g, const Irrep& rep, const Subgroup& sub) {
    CycloAccumulator acc(character_field_order(g));
    for (const auto& h : sub.elements) acc.add(character_value(g, rep, h));
    long long total = 0;
    if (!acc.reduce_to_integer(total))
        throw NonIntegralDimension("character sum over subgroup is not a rational integer");
    if (total % sub.order() != 0)
        throw NonIntegralDimension("fixed dimension is not integral");
    return static_cast<int>(total / sub.order());
}

long long character_inner_product(const GroupSpec& g, const Irrep& v, const Irrep& w) {
    CycloAccumulator acc(character_field_order(g));
    for (int idx = 0; idx < g.order(); ++idx) {
        GroupElement x = g.element_at(idx);
        acc.add_product(character_value(g, v, x), cyclo_conjugate(character_value(g, w, x)));
    }
    long long total = 0;
    if (!acc.reduce_to_integer(total))
        throw NonIntegralDimension("character inner product is not a rational integer");
    if (total % g.order() != 0)
        throw NonIntegralDimension("character inner product is not integral");
    return total / g.order();
}

} // namespace surfact
