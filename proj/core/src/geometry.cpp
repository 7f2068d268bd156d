#include "surfact/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "surfact/actions.hpp"

namespace surfact {

Rational make_rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

std::string Signature::str() const {
    std::string s = "(" + std::to_string(orbit_genus) + ";";
    for (size_t i = 0; i < periods.size(); ++i)
        s += (i ? "," : " ") + std::to_string(periods[i]);
    if (periods.empty()) s += " -";
    return s + ")";
}

Signature make_signature(int orbit_genus, std::vector<int> periods) {
    if (orbit_genus < 0) throw NotHyperbolic("negative orbit genus");
    for (int m : periods)
        if (m < 2) throw NotHyperbolic("period < 2");
    std::sort(periods.begin(), periods.end());
    Signature sig{orbit_genus, std::move(periods)};
    hyperbolic_area(sig); // validates positivity
    return sig;
}

Rational hyperbolic_area(const Signature& sig) {
    // 2h - 2 + sum (1 - 1/m_i), over a common denominator
    long long den = 1;
    for (int m : sig.periods) den = std::lcm(den, static_cast<long long>(m));
    long long num = (2LL * sig.orbit_genus - 2) * den;
    for (int m : sig.periods) num += den - den / m;
    if (num <= 0) throw NotHyperbolic("signature " + sig.str() + " is not hyperbolic");
    return make_rational(num, den);
}

int teichmuller_dimension(const Signature& sig) {
    return 3 * sig.orbit_genus - 3 + sig.period_count();
}

namespace {

void search_periods(int h, long long order, const std::vector<int>& divisors, size_t from,
                    std::vector<int>& current, long long num, long long den, long long target_num,
                    long long target_den, int max_periods, std::vector<Signature>& out) {
    // exact comparison of num/den with the target area
    if (num * target_den == target_num * den) out.push_back(Signature{h, current});
    if (static_cast<int>(current.size()) >= max_periods) return;
    for (size_t i = from; i < divisors.size(); ++i) {
        int m = divisors[i];
        // adding (1 - 1/m) = (m-1)/m
        long long nnum = num * m + (m - 1) * den;
        long long nden = den * m;
        long long g = std::gcd(nnum < 0 ? -nnum : nnum, nden);
        if (g > 1) {
            nnum /= g;
            nden /= g;
        }
        // terms only grow with m and with extra periods
        if (nnum * target_den > target_num * nden) break;
        current.push_back(m);
        search_periods(h, order, divisors, i, current, nnum, nden, target_num, target_den,
                       max_periods, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Signature> enumerate_signatures(int genus, int lambda) {
    if (lambda != 3 && lambda != 5 && lambda != 6 && lambda != 10 && lambda != 12)
        throw UnsupportedOrder("lambda = " + std::to_string(lambda) + " out of scope");
    if (genus < 8) throw GenusTooSmall("genus >= 8 required");
    int q = genus - 1;
    if (!is_prime(q)) throw NotPrime("g - 1 = " + std::to_string(q) + " is not prime");

    long long order = static_cast<long long>(lambda) * q;
    std::vector<int> divisors;
    for (int d = 2; d <= order; ++d)
        if (order % d == 0) divisors.push_back(d);

    // Riemann-Hurwitz: area = 2(g-1) / |G| = 2/lambda.
    long long target_num = 2, target_den = lambda;
    std::vector<Signature> out;
    for (int h = 0; h <= 2; ++h) {
        std::vector<int> current;
        long long num = 2LL * h - 2, den = 1;
        search_periods(h, order, divisors, 0, current, num, den, target_num, target_den, 8, out);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int quotient_genus(const GeneratingVector& vec, const Subgroup& sub) {
    const GroupSpec& g = vec.group;
    int gorder = g.order();
    int horder = sub.order();
    if (horder == 0 || gorder % horder != 0) throw NotASubgroup("order does not divide group order");
    for (const auto& x : sub.elements) {
        if (x.base < 0 || x.base >= g.base_order() || x.twist < 0 || x.twist >= g.twist_order())
            throw NotASubgroup("element outside the group");
        for (const auto& y : sub.generators)
            if (!sub.contains(g.multiply(x, y))) throw NotASubgroup("set not closed");
    }

    int index = gorder / horder;
    // left cosets tH, labelled in element-index order
    std::vector<int> coset(static_cast<size_t>(gorder), -1);
    std::vector<GroupElement> rep;
    rep.reserve(static_cast<size_t>(index));
    for (int idx = 0; idx < gorder; ++idx) {
        if (coset[static_cast<size_t>(idx)] >= 0) continue;
        GroupElement t = g.element_at(idx);
        int label = static_cast<int>(rep.size());
        rep.push_back(t);
        for (const auto& hmem : sub.elements)
            coset[static_cast<size_t>(g.element_index(g.multiply(t, hmem)))] = label;
    }
    if (static_cast<int>(rep.size()) != index) throw NotASubgroup("coset partition failed");

    // 2 genus - 2 = [G:H](2h-2) + sum_i ([G:H] - cycles(theta(x_i)))
    long long total = static_cast<long long>(index) * (2LL * vec.signature.orbit_genus - 2);
    std::vector<char> seen(static_cast<size_t>(index));
    for (const auto& x : vec.periods) {
        std::fill(seen.begin(), seen.end(), 0);
        int cycles = 0;
        for (int c = 0; c < index; ++c) {
            if (seen[static_cast<size_t>(c)]) continue;
            ++cycles;
            int cur = c;
            while (!seen[static_cast<size_t>(cur)]) {
                seen[static_cast<size_t>(cur)] = 1;
                cur = coset[static_cast<size_t>(g.element_index(g.multiply(x, rep[static_cast<size_t>(cur)])))];
            }
        }
        total += index - cycles;
    }
    if (total % 2 != 0 || total + 2 < 0)
        throw std::logic_error("quotient_genus: non-integral genus, monodromy bug");
    return static_cast<int>((total + 2) / 2);
}

} // namespace surfact
