#include "surfact/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace surfact {

namespace {

int mod_exp_index(long long e, int N) {
    long long r = e % N;
    return static_cast<int>(r < 0 ? r + N : r);
}

/// x^N - 1 divided by the product of Phi_d over proper divisors d of N.
std::vector<long long> compute_cyclotomic(int N,
                                          std::map<int, std::vector<long long>>& cache) {
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    std::vector<long long> num(static_cast<size_t>(N + 1), 0);
    num[0] = -1;
    num[static_cast<size_t>(N)] = 1;
    for (int d = 1; d < N; ++d) {
        if (N % d != 0) continue;
        std::vector<long long> phi_d = compute_cyclotomic(d, cache);
        // exact long division num /= phi_d (both monic up to sign)
        std::vector<long long> quot(num.size() - phi_d.size() + 1, 0);
        std::vector<long long> rem = num;
        for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
            long long c = rem[static_cast<size_t>(k) + phi_d.size() - 1] / phi_d.back();
            quot[static_cast<size_t>(k)] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < phi_d.size(); ++j)
                rem[static_cast<size_t>(k) + j] -= c * phi_d[j];
        }
        for (long long c : rem)
            if (c != 0) throw std::logic_error("cyclotomic polynomial division not exact");
        num = std::move(quot);
    }
    cache[N] = num;
    return num;
}

std::mutex cyclo_mutex;
std::map<int, std::vector<long long>> cyclo_cache;

} // namespace

std::vector<long long> cyclotomic_polynomial(int N) {
    if (N < 1) throw std::invalid_argument("cyclotomic_polynomial: N >= 1");
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    return compute_cyclotomic(N, cyclo_cache);
}

CycloSum cyclo_zero(int modulus) { return {modulus, {}}; }

CycloSum cyclo_root(int modulus, long long exponent, long long coefficient) {
    CycloSum v{modulus, {}};
    if (coefficient != 0) v.terms.emplace_back(mod_exp_index(exponent, modulus), coefficient);
    return v;
}

CycloSum cyclo_conjugate(const CycloSum& v) {
    CycloSum out{v.modulus, {}};
    out.terms.reserve(v.terms.size());
    for (const auto& [e, c] : v.terms)
        out.terms.emplace_back(e == 0 ? 0 : v.modulus - e, c);
    return out;
}

CycloAccumulator::CycloAccumulator(int modulus)
    : modulus_(modulus), coeff_(static_cast<size_t>(modulus), 0) {
    if (modulus < 1) throw std::invalid_argument("CycloAccumulator: modulus >= 1");
}

void CycloAccumulator::add(const CycloSum& v, long long scale) {
    if (v.modulus != modulus_) throw std::invalid_argument("cyclotomic modulus mismatch");
    for (const auto& [e, c] : v.terms) coeff_[static_cast<size_t>(e)] += c * scale;
}

void CycloAccumulator::add_product(const CycloSum& a, const CycloSum& b) {
    if (a.modulus != modulus_ || b.modulus != modulus_)
        throw std::invalid_argument("cyclotomic modulus mismatch");
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            int e = ea + eb;
            if (e >= modulus_) e -= modulus_;
            coeff_[static_cast<size_t>(e)] += ca * cb;
        }
}

bool CycloAccumulator::reduce_to_integer(long long& out) const {
    std::vector<long long> phi = cyclotomic_polynomial(modulus_);
    std::vector<long long> rem = coeff_;
    if (rem.size() >= phi.size()) {
        for (int k = static_cast<int>(rem.size() - phi.size()); k >= 0; --k) {
            long long c = rem[static_cast<size_t>(k) + phi.size() - 1]; // phi is monic
            if (c == 0) continue;
            for (size_t j = 0; j < phi.size(); ++j)
                rem[static_cast<size_t>(k) + j] -= c * phi[j];
        }
    }
    for (size_t j = 1; j < rem.size(); ++j)
        if (rem[j] != 0) return false;
    out = rem[0];
    return true;
}

} // namespace surfact
