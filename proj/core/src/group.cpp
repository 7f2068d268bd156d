#include "surfact/group.hpp"

#include <algorithm>
#include <numeric>

namespace surfact {

namespace {

long long mod_ll(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

int mulmod(int a, int b, int n) {
    return static_cast<int>((static_cast<long long>(a) * b) % n);
}

int mult_order(int u, int n) {
    int k = 1, v = u % n;
    while (v != 1) {
        v = mulmod(v, u, n);
        ++k;
        if (k > n) throw InvalidTwist("twist is not a unit mod n");
    }
    return k;
}

} // namespace

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int root_of_order(int n, int m) {
    if (!is_prime(n)) throw NoSuchRoot("root_of_order requires a prime modulus");
    if (m < 1 || (n - 1) % m != 0)
        throw NoSuchRoot("order " + std::to_string(m) + " does not divide " + std::to_string(n - 1));
    for (int u = 2; u < n; ++u)
        if (mult_order(u, n) == m) return u;
    throw NoSuchRoot("no element of order " + std::to_string(m) + " mod " + std::to_string(n));
}

GroupSpec::GroupSpec(int base_order, int twist_order, int twist, bool central_involution)
    : n_(base_order), m_(twist_order), r_(twist), central_(central_involution) {
    if (n_ < 2 || m_ < 1 || r_ < 1 || r_ >= n_)
        throw InvalidTwist("require n >= 2, m >= 1, 1 <= r < n");
    if (std::gcd(r_, n_) != 1) throw InvalidTwist("gcd(r, n) != 1");
    rpow_.resize(static_cast<size_t>(m_));
    rpow_[0] = 1 % n_;
    for (int j = 1; j < m_; ++j) rpow_[static_cast<size_t>(j)] = mulmod(rpow_[static_cast<size_t>(j - 1)], r_, n_);
    if (mulmod(rpow_[static_cast<size_t>(m_ - 1)], r_, n_) != 1 % n_)
        throw InvalidTwist("r^m != 1 mod n");
    r_order_ = mult_order(r_, n_);
}

GroupSpec build_group(int n, int m, int r, bool central_involution) {
    return GroupSpec(n, m, r, central_involution);
}

GroupElement GroupSpec::make(long long base, long long twist, long long central) const {
    return {static_cast<int>(mod_ll(base, n_)), static_cast<int>(mod_ll(twist, m_)),
            central_ ? static_cast<int>(mod_ll(central, 2)) : 0};
}

GroupElement GroupSpec::multiply(const GroupElement& x, const GroupElement& y) const {
    GroupElement out;
    out.base = static_cast<int>((x.base + static_cast<long long>(rpow_[static_cast<size_t>(x.twist)]) * y.base) % n_);
    out.twist = x.twist + y.twist;
    if (out.twist >= m_) out.twist -= m_;
    out.central = x.central ^ y.central;
    return out;
}

GroupElement GroupSpec::inverse(const GroupElement& x) const {
    // (i,j,z)^-1 = (-r^(m-j) i, -j, z)
    int jinv = x.twist == 0 ? 0 : m_ - x.twist;
    int binv = static_cast<int>(mod_ll(-static_cast<long long>(rpow_[static_cast<size_t>(jinv)]) * x.base, n_));
    return {binv, jinv, x.central};
}

GroupElement GroupSpec::power(GroupElement x, long long e) const {
    if (e < 0) {
        x = inverse(x);
        e = -e;
    }
    GroupElement acc = identity();
    while (e > 0) {
        if (e & 1) acc = multiply(acc, x);
        x = multiply(x, x);
        e >>= 1;
    }
    return acc;
}

GroupElement GroupSpec::conjugate(const GroupElement& g, const GroupElement& x) const {
    return multiply(multiply(g, x), inverse(g));
}

int GroupSpec::element_order(const GroupElement& x) const {
    int t = m_ / std::gcd(x.twist, m_); // additive order of the twist part
    long long s = 0;                    // sum of r^(j k) for k < t
    for (int k = 0; k < t; ++k) s += rpow_[static_cast<size_t>(static_cast<long long>(x.twist) * k % m_)];
    int b = static_cast<int>(mod_ll(s * x.base, n_)); // base part of x^t
    int ord = t * (n_ / std::gcd(b, n_));
    if (x.central && ord % 2 != 0) ord *= 2;
    return ord;
}

int GroupSpec::element_index(const GroupElement& x) const {
    int zbits = central_ ? 2 : 1;
    return (x.base * m_ + x.twist) * zbits + x.central;
}

GroupElement GroupSpec::element_at(int index) const {
    int zbits = central_ ? 2 : 1;
    GroupElement e;
    e.central = index % zbits;
    index /= zbits;
    e.twist = index % m_;
    e.base = index / m_;
    return e;
}

std::vector<GroupElement> GroupSpec::elements_of_order(int k) const {
    std::vector<GroupElement> out;
    for (int idx = 0; idx < order(); ++idx) {
        GroupElement e = element_at(idx);
        if (element_order(e) == k) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string GroupSpec::description() const {
    std::string core;
    if (r_order_ == 1) {
        core = "C" + std::to_string(n_ * m_); // direct product of coprime cyclics in scope
    } else if (m_ == 2 && r_ == n_ - 1) {
        core = "D" + std::to_string(n_);
    } else if (m_ == 2 && n_ % 3 == 0 && r_ % 3 == 2 && r_ % (n_ / 3) == 1) {
        // twist 1 on the C_{n/3} factor and -1 on the C_3 factor
        core = "C" + std::to_string(n_ / 3) + "xD3";
    } else {
        core = "C" + std::to_string(n_) + ":" + std::to_string(r_order_) + "C" + std::to_string(m_);
    }
    return central_ ? "(" + core + ")xC2" : core;
}

bool Subgroup::contains(const GroupElement& x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

Subgroup generated_subgroup(const GroupSpec& g, std::span<const GroupElement> gens) {
    std::vector<char> seen(static_cast<size_t>(g.order()), 0);
    std::vector<GroupElement> frontier{g.identity()};
    seen[static_cast<size_t>(g.element_index(g.identity()))] = 1;
    std::vector<GroupElement> all{g.identity()};
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& x : frontier) {
            for (const auto& gen : gens) {
                GroupElement y = g.multiply(x, gen);
                int idx = g.element_index(y);
                if (!seen[static_cast<size_t>(idx)]) {
                    seen[static_cast<size_t>(idx)] = 1;
                    all.push_back(y);
                    next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end());
    Subgroup s;
    s.elements = std::move(all);
    s.generators.assign(gens.begin(), gens.end());
    return s;
}

Subgroup cyclic_subgroup(const GroupSpec& g, const GroupElement& x) {
    GroupElement gen = x;
    return generated_subgroup(g, std::span<const GroupElement>(&gen, 1));
}

Subgroup whole_group(const GroupSpec& g) {
    std::vector<GroupElement> gens{g.gen_a(), g.gen_c()};
    if (g.has_central_involution()) gens.push_back(g.gen_z());
    return generated_subgroup(g, gens);
}

Subgroup trivial_subgroup(const GroupSpec& g) {
    GroupElement id = g.identity();
    return generated_subgroup(g, std::span<const GroupElement>(&id, 1));
}

std::vector<std::vector<GroupElement>> conjugacy_classes(const GroupSpec& g) {
    int ord = g.order();
    std::vector<char> seen(static_cast<size_t>(ord), 0);
    std::vector<std::vector<GroupElement>> classes;
    for (int idx = 0; idx < ord; ++idx) {
        if (seen[static_cast<size_t>(idx)]) continue;
        GroupElement x = g.element_at(idx);
        std::vector<GroupElement> cls;
        for (int gi = 0; gi < ord; ++gi) {
            GroupElement y = g.conjugate(g.element_at(gi), x);
            int yi = g.element_index(y);
            if (!seen[static_cast<size_t>(yi)]) {
                seen[static_cast<size_t>(yi)] = 1;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

bool are_conjugate_subgroups(const GroupSpec& g, const Subgroup& h1, const Subgroup& h2) {
    if (h1.order() != h2.order()) return false;
    for (int gi = 0; gi < g.order(); ++gi) {
        GroupElement t = g.element_at(gi);
        bool all = true;
        for (const auto& x : h1.elements) {
            if (!h2.contains(g.conjugate(t, x))) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

std::vector<GroupElement> center(const GroupSpec& g) {
    std::vector<GroupElement> out;
    std::vector<GroupElement> gens{g.gen_a(), g.gen_c()};
    if (g.has_central_involution()) gens.push_back(g.gen_z());
    for (int idx = 0; idx < g.order(); ++idx) {
        GroupElement x = g.element_at(idx);
        bool commutes = true;
        for (const auto& h : gens) {
            if (g.multiply(x, h) != g.multiply(h, x)) {
                commutes = false;
                break;
            }
        }
        if (commutes) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

GroupElement apply(const GroupSpec& g, const GroupAutomorphism& phi, const GroupElement& x) {
    GroupElement out = g.power(phi.image_a, x.base);
    out = g.multiply(out, g.power(phi.image_c, x.twist));
    if (x.central) out = g.multiply(out, phi.image_z);
    return out;
}

GroupAutomorphism compose(const GroupSpec& g, const GroupAutomorphism& f, const GroupAutomorphism& h) {
    return {apply(g, f, h.image_a), apply(g, f, h.image_c), apply(g, f, h.image_z)};
}

namespace {

// Images of (a, c, z) of `from` inside `to`: check defining relations of
// `from` and that the images generate `to`.
bool images_define_epimorphism(const GroupSpec& from, const GroupSpec& to, const GroupElement& A,
                               const GroupElement& C, const GroupElement& Z) {
    if (to.power(A, from.base_order()) != to.identity()) return false;
    if (to.power(C, from.twist_order()) != to.identity()) return false;
    if (to.conjugate(C, A) != to.power(A, from.twist())) return false;
    if (from.has_central_involution()) {
        if (to.power(Z, 2) != to.identity()) return false;
        if (to.multiply(A, Z) != to.multiply(Z, A)) return false;
        if (to.multiply(C, Z) != to.multiply(Z, C)) return false;
    }
    std::vector<GroupElement> gens{A, C};
    if (from.has_central_involution()) gens.push_back(Z);
    return generated_subgroup(to, gens).order() == to.order();
}

std::vector<GroupAutomorphism> generator_image_search(const GroupSpec& from, const GroupSpec& to) {
    std::vector<GroupAutomorphism> found;
    auto a_candidates = to.elements_of_order(from.element_order(from.gen_a()));
    auto c_candidates = from.twist_order() > 1
                            ? to.elements_of_order(from.element_order(from.gen_c()))
                            : std::vector<GroupElement>{to.identity()};
    std::vector<GroupElement> z_candidates;
    if (from.has_central_involution()) {
        for (const auto& x : center(to))
            if (to.element_order(x) == 2) z_candidates.push_back(x);
    } else {
        z_candidates.push_back(to.identity());
    }
    for (const auto& A : a_candidates)
        for (const auto& C : c_candidates)
            for (const auto& Z : z_candidates)
                if (images_define_epimorphism(from, to, A, C, Z)) found.push_back({A, C, Z});
    return found;
}

} // namespace

std::vector<GroupAutomorphism> automorphism_group(const GroupSpec& g, int order_bound) {
    if (g.order() > order_bound)
        throw BoundExceeded("automorphism_group: |G| = " + std::to_string(g.order()) +
                            " exceeds bound " + std::to_string(order_bound));
    return generator_image_search(g, g);
}

std::optional<GroupAutomorphism> find_isomorphism(const GroupSpec& from, const GroupSpec& to) {
    if (from.order() != to.order()) return std::nullopt;
    auto a_candidates = to.elements_of_order(from.element_order(from.gen_a()));
    auto c_candidates = from.twist_order() > 1
                            ? to.elements_of_order(from.element_order(from.gen_c()))
                            : std::vector<GroupElement>{to.identity()};
    std::vector<GroupElement> z_candidates;
    if (from.has_central_involution()) {
        for (const auto& x : center(to))
            if (to.element_order(x) == 2) z_candidates.push_back(x);
    } else {
        z_candidates.push_back(to.identity());
    }
    for (const auto& A : a_candidates)
        for (const auto& C : c_candidates)
            for (const auto& Z : z_candidates)
                if (images_define_epimorphism(from, to, A, C, Z))
                    return GroupAutomorphism{A, C, Z};
    return std::nullopt;
}

} // namespace surfact
