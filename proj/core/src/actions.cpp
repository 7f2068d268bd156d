#include "surfact/actions.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <numeric>

#include "surfact/parallel.hpp"

namespace surfact {

int resolve_workers(int requested) {
    int w = 0;
    if (const char* env = std::getenv("SURFACE_ACTIONS_WORKERS")) w = std::atoi(env);
    if (w <= 0) w = requested;
    if (w <= 0) w = static_cast<int>(std::thread::hardware_concurrency());
    if (w <= 0) w = 1;
    return std::min(w, 64);
}

namespace {

constexpr std::uint32_t kUnassigned = 0xffffffffu;

// 16 bits per element, first element in the most significant slot so that
// integer order on keys is lexicographic order on coordinate tuples.
std::uint16_t pack_element(const GroupElement& e) {
    return static_cast<std::uint16_t>((e.base << 5) | (e.twist << 1) | e.central);
}

GroupElement unpack_element(std::uint16_t v) {
    return {static_cast<int>(v >> 5), static_cast<int>((v >> 1) & 0xf), static_cast<int>(v & 1)};
}

void check_packable(const GroupSpec& g, size_t slots) {
    if (g.base_order() >= 2048 || g.twist_order() > 15 || slots > 4)
        throw BoundExceeded("vector packing supports n < 2048, m <= 15, at most 4 images");
}

std::uint64_t pack_key(std::span<const GroupElement> elems) {
    std::uint64_t key = 0;
    for (size_t p = 0; p < elems.size(); ++p)
        key |= static_cast<std::uint64_t>(pack_element(elems[p])) << (48 - 16 * p);
    return key;
}

void unpack_key(std::uint64_t key, size_t count, std::vector<GroupElement>& out) {
    out.resize(count);
    for (size_t p = 0; p < count; ++p)
        out[p] = unpack_element(static_cast<std::uint16_t>((key >> (48 - 16 * p)) & 0xffff));
}

/// Surjectivity test specialized to the family structure: the images
/// generate G iff their (twist, central) parts generate the full quotient
/// C_m x C_2^eps and, when n is prime, they do not all lie inside one
/// conjugate a^w <c,z> a^-w of the standard complement (Schur-Zassenhaus:
/// all complements of C_n are conjugate).  Composite n falls back to the
/// generic closure.
class GenerationChecker {
public:
    explicit GenerationChecker(const GroupSpec& g)
        : g_(g), prime_base_(is_prime(g.base_order())), quotient_size_(g.twist_order() * (g.has_central_involution() ? 2 : 1)) {
        int n = g_.base_order();
        inv_one_minus_rpow_.assign(static_cast<size_t>(g_.twist_order()), -1);
        for (int j = 0; j < g_.twist_order(); ++j) {
            int rj = g_.twist_pow(j);
            if (rj != 1 && prime_base_) {
                // modular inverse of (1 - r^j) via Fermat
                long long v = 1 - rj;
                v %= n;
                if (v < 0) v += n;
                long long inv = 1, b = v, e = n - 2;
                while (e > 0) {
                    if (e & 1) inv = inv * b % n;
                    b = b * b % n;
                    e >>= 1;
                }
                inv_one_minus_rpow_[static_cast<size_t>(j)] = static_cast<int>(inv);
            }
        }
        quotient_seen_.resize(static_cast<size_t>(2 * g_.twist_order()));
        closure_seen_.resize(static_cast<size_t>(g_.order()));
    }

    bool generates(std::span<const GroupElement> images) {
        if (!quotient_full(images)) return false;
        if (!prime_base_) return closure_is_whole(images);
        int w = -1;
        for (const auto& e : images) {
            if (g_.twist_pow(e.twist) == 1) {
                if (e.base != 0) return true; // in no complement conjugate
            } else {
                int cand = static_cast<int>(static_cast<long long>(e.base) *
                                            inv_one_minus_rpow_[static_cast<size_t>(e.twist)] %
                                            g_.base_order());
                if (w < 0)
                    w = cand;
                else if (w != cand)
                    return true;
            }
        }
        return false; // all images fit in one complement: proper subgroup
    }

private:
    bool quotient_full(std::span<const GroupElement> images) {
        int m = g_.twist_order();
        std::fill(quotient_seen_.begin(), quotient_seen_.end(), 0);
        quotient_seen_[0] = 1;
        int count = 1;
        std::vector<int> frontier{0};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int state : frontier) {
                int j = state >> 1, z = state & 1;
                for (const auto& e : images) {
                    int j2 = j + e.twist;
                    if (j2 >= m) j2 -= m;
                    int s2 = (j2 << 1) | (z ^ e.central);
                    if (!quotient_seen_[static_cast<size_t>(s2)]) {
                        quotient_seen_[static_cast<size_t>(s2)] = 1;
                        ++count;
                        next.push_back(s2);
                    }
                }
            }
            frontier = std::move(next);
        }
        return count == quotient_size_;
    }

    bool closure_is_whole(std::span<const GroupElement> images) {
        std::fill(closure_seen_.begin(), closure_seen_.end(), 0);
        scratch_.clear();
        scratch_.push_back(g_.identity());
        closure_seen_[static_cast<size_t>(g_.element_index(g_.identity()))] = 1;
        for (size_t head = 0; head < scratch_.size(); ++head) {
            GroupElement x = scratch_[head];
            for (const auto& e : images) {
                GroupElement y = g_.multiply(x, e);
                int idx = g_.element_index(y);
                if (!closure_seen_[static_cast<size_t>(idx)]) {
                    closure_seen_[static_cast<size_t>(idx)] = 1;
                    scratch_.push_back(y);
                }
            }
        }
        return scratch_.size() == static_cast<size_t>(g_.order());
    }

    const GroupSpec& g_;
    bool prime_base_;
    int quotient_size_;
    std::vector<int> inv_one_minus_rpow_;
    std::vector<char> quotient_seen_;
    std::vector<char> closure_seen_;
    std::vector<GroupElement> scratch_;
};

/// All distinct orderings of the sorted period sequence, sorted one first.
std::vector<std::vector<int>> period_patterns(const std::vector<int>& sorted_periods) {
    std::vector<std::vector<int>> patterns;
    std::vector<int> p = sorted_periods;
    do {
        patterns.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return patterns;
}

/// Enumerate all valid vectors (genus-0) whose period orders follow
/// `pattern`, appending packed keys.
void enumerate_pattern(const GroupSpec& g, const std::vector<int>& pattern,
                       const std::map<int, std::vector<GroupElement>>& by_order, int workers,
                       std::uint64_t max_vectors, std::vector<std::uint64_t>& out) {
    size_t l = pattern.size();
    const auto& first = by_order.at(pattern[0]);
    if (first.empty()) return;
    for (int m : pattern)
        if (by_order.at(m).empty()) return;

    std::vector<std::vector<std::uint64_t>> results(static_cast<size_t>(workers));
    std::atomic<bool> overflow{false};
    parallel_chunks(first.size(), workers, [&](size_t chunk, size_t lo, size_t hi) {
        GenerationChecker checker(g);
        std::vector<GroupElement> images(l);
        std::vector<GroupElement> prefix(l); // prefix[k] = product of images[0..k]
        auto& local = results[chunk];
        // odometer over positions 1..l-2; position l-1 is derived
        std::vector<size_t> pos(l, 0);
        for (size_t i0 = lo; i0 < hi && !overflow.load(std::memory_order_relaxed); ++i0) {
            images[0] = first[i0];
            prefix[0] = images[0];
            size_t depth = 1;
            std::fill(pos.begin(), pos.end(), 0);
            while (true) {
                if (depth == l - 1) {
                    GroupElement last = g.inverse(prefix[l - 2]);
                    if (g.element_order(last) == pattern[l - 1]) {
                        images[l - 1] = last;
                        if (checker.generates(images)) {
                            local.push_back(pack_key(images));
                            if (local.size() > max_vectors) {
                                overflow.store(true, std::memory_order_relaxed);
                                break;
                            }
                        }
                    }
                    // backtrack
                    --depth;
                    ++pos[depth];
                }
                const auto& list = by_order.at(pattern[depth]);
                if (pos[depth] >= list.size()) {
                    if (depth == 1) break;
                    pos[depth] = 0;
                    --depth;
                    ++pos[depth];
                    continue;
                }
                images[depth] = list[pos[depth]];
                prefix[depth] = g.multiply(prefix[depth - 1], images[depth]);
                ++depth;
            }
        }
    });
    if (overflow.load()) throw BoundExceeded("vector enumeration exceeded max_vectors cap");
    size_t total = out.size();
    for (const auto& r : results) total += r.size();
    if (total > max_vectors) throw BoundExceeded("vector enumeration exceeded max_vectors cap");
    for (const auto& r : results) out.insert(out.end(), r.begin(), r.end());
}

/// Genus-1 case: images of the two handle generators determine the single
/// period image via x_1 = [a_1, b_1]^-1.
void enumerate_genus1(const GroupSpec& g, const Signature& sig, std::uint64_t max_vectors,
                      std::vector<std::uint64_t>& out) {
    if (sig.period_count() != 1)
        throw UnsupportedGenus("genus-1 enumeration supports exactly one period");
    int target = sig.periods[0];
    GenerationChecker checker(g);
    int n = g.order();
    std::vector<GroupElement> images(3);
    for (int ia = 0; ia < n; ++ia) {
        images[0] = g.element_at(ia);
        for (int ib = 0; ib < n; ++ib) {
            images[1] = g.element_at(ib);
            GroupElement comm = g.multiply(g.multiply(images[0], images[1]),
                                           g.multiply(g.inverse(images[0]), g.inverse(images[1])));
            images[2] = g.inverse(comm);
            if (g.element_order(images[2]) != target) continue;
            if (!checker.generates(std::span<const GroupElement>(images.data(), 2))) continue;
            out.push_back(pack_key(images));
            if (out.size() > max_vectors) throw BoundExceeded("vector enumeration exceeded cap");
        }
    }
    std::sort(out.begin(), out.end());
}

struct PreparedAut {
    int alpha;                       // image of a is a^alpha
    std::vector<GroupElement> cpow;  // image of c^j
    GroupElement zimg;
};

PreparedAut prepare_aut(const GroupSpec& g, const GroupAutomorphism& phi) {
    PreparedAut p;
    if (phi.image_a.twist != 0 || phi.image_a.central != 0)
        throw std::logic_error("automorphism image of a leaves the base subgroup");
    p.alpha = phi.image_a.base;
    p.cpow.resize(static_cast<size_t>(g.twist_order()));
    p.cpow[0] = g.identity();
    for (int j = 1; j < g.twist_order(); ++j)
        p.cpow[static_cast<size_t>(j)] = g.multiply(p.cpow[static_cast<size_t>(j - 1)], phi.image_c);
    p.zimg = phi.image_z;
    return p;
}

GroupElement apply_prepared(const GroupSpec& g, const PreparedAut& p, const GroupElement& x) {
    GroupElement out{static_cast<int>(static_cast<long long>(p.alpha) * x.base % g.base_order()), 0, 0};
    out = g.multiply(out, p.cpow[static_cast<size_t>(x.twist)]);
    if (x.central) out = g.multiply(out, p.zimg);
    return out;
}

std::uint64_t apply_prepared_key(const GroupSpec& g, const PreparedAut& p,
                                 std::span<const GroupElement> elems) {
    std::uint64_t key = 0;
    for (size_t i = 0; i < elems.size(); ++i)
        key |= static_cast<std::uint64_t>(pack_element(apply_prepared(g, p, elems[i]))) << (48 - 16 * i);
    return key;
}

size_t key_position(const std::vector<std::uint64_t>& keys, std::uint64_t key) {
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    if (it == keys.end() || *it != key) return keys.size();
    return static_cast<size_t>(it - keys.begin());
}

bool pattern_is_sorted(const GroupSpec& g, std::span<const GroupElement> elems) {
    int prev = 0;
    for (const auto& e : elems) {
        int o = g.element_order(e);
        if (o < prev) return false;
        prev = o;
    }
    return true;
}

// braid move on the raw image sequence (genus 0)
void braid_images(const GroupSpec& g, std::vector<GroupElement>& x, int i, bool inverse) {
    if (!inverse) {
        GroupElement xi = x[static_cast<size_t>(i)], xj = x[static_cast<size_t>(i + 1)];
        x[static_cast<size_t>(i)] = xj;
        x[static_cast<size_t>(i + 1)] = g.multiply(g.multiply(g.inverse(xj), xi), xj);
    } else {
        GroupElement xi = x[static_cast<size_t>(i)], xj = x[static_cast<size_t>(i + 1)];
        x[static_cast<size_t>(i)] = g.multiply(g.multiply(xi, xj), g.inverse(xi));
        x[static_cast<size_t>(i + 1)] = xi;
    }
}

} // namespace

std::vector<int> period_orders(const GeneratingVector& v) {
    std::vector<int> orders;
    orders.reserve(v.periods.size());
    for (const auto& e : v.periods) orders.push_back(v.group.element_order(e));
    return orders;
}

bool is_valid_vector(const GeneratingVector& v) {
    const GroupSpec& g = v.group;
    if (v.handles.size() != static_cast<size_t>(2 * v.signature.orbit_genus)) return false;
    if (v.periods.size() != static_cast<size_t>(v.signature.period_count())) return false;
    std::vector<int> orders = period_orders(v);
    std::vector<int> sorted = orders;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != v.signature.periods) return false;
    GroupElement prod = g.identity();
    for (size_t i = 0; i + 1 < v.handles.size(); i += 2) {
        const GroupElement &a = v.handles[i], &b = v.handles[i + 1];
        prod = g.multiply(prod, g.multiply(g.multiply(a, b), g.multiply(g.inverse(a), g.inverse(b))));
    }
    for (const auto& x : v.periods) prod = g.multiply(prod, x);
    if (prod != g.identity()) return false;
    std::vector<GroupElement> all = v.handles;
    all.insert(all.end(), v.periods.begin(), v.periods.end());
    return generated_subgroup(g, all).order() == g.order();
}

GeneratingVector braid_move(const GeneratingVector& v, int i) {
    if (v.signature.orbit_genus != 0) throw UnsupportedGenus("braid moves need genus-0 quotient");
    if (i < 0 || i + 1 >= v.signature.period_count())
        throw IndexOutOfRange("braid index " + std::to_string(i));
    GeneratingVector out = v;
    braid_images(v.group, out.periods, i, false);
    return out;
}

GeneratingVector braid_move_inverse(const GeneratingVector& v, int i) {
    if (v.signature.orbit_genus != 0) throw UnsupportedGenus("braid moves need genus-0 quotient");
    if (i < 0 || i + 1 >= v.signature.period_count())
        throw IndexOutOfRange("braid index " + std::to_string(i));
    GeneratingVector out = v;
    braid_images(v.group, out.periods, i, true);
    return out;
}

GeneratingVector apply_automorphism(const GeneratingVector& v, const GroupAutomorphism& phi) {
    GeneratingVector out = v;
    for (auto& e : out.handles) e = apply(v.group, phi, e);
    for (auto& e : out.periods) e = apply(v.group, phi, e);
    return out;
}

namespace {

std::vector<std::uint64_t> enumerate_keys(const GroupSpec& g, const Signature& sig,
                                          const EnumerationOptions& opts, bool all_patterns,
                                          std::uint64_t* sorted_count) {
    int h = sig.orbit_genus;
    if (h > 1) throw UnsupportedGenus("enumeration supports quotient genus 0 and 1");
    size_t slots = static_cast<size_t>(2 * h + sig.period_count());
    check_packable(g, slots);
    for (int m : sig.periods)
        if (m > g.order()) return {};

    std::vector<std::uint64_t> keys;
    if (h == 1) {
        enumerate_genus1(g, sig, opts.max_vectors, keys);
        if (sorted_count) *sorted_count = keys.size();
        return keys;
    }

    int workers = resolve_workers(opts.workers);
    std::map<int, std::vector<GroupElement>> by_order;
    for (int m : sig.periods)
        if (!by_order.count(m)) by_order[m] = g.elements_of_order(m);

    auto patterns = period_patterns(sig.periods);
    std::uint64_t sorted_total = 0;
    for (size_t pi = 0; pi < patterns.size(); ++pi) {
        if (pi > 0 && !all_patterns) break;
        size_t before = keys.size();
        enumerate_pattern(g, patterns[pi], by_order, workers, opts.max_vectors, keys);
        if (pi == 0) sorted_total = keys.size() - before;
    }
    std::sort(keys.begin(), keys.end());
    if (sorted_count) *sorted_count = sorted_total;
    return keys;
}

GeneratingVector materialize(const GroupSpec& g, const Signature& sig, std::uint64_t key) {
    GeneratingVector v{g, sig, {}, {}};
    std::vector<GroupElement> elems;
    unpack_key(key, static_cast<size_t>(2 * sig.orbit_genus + sig.period_count()), elems);
    v.handles.assign(elems.begin(), elems.begin() + 2 * sig.orbit_genus);
    v.periods.assign(elems.begin() + 2 * sig.orbit_genus, elems.end());
    return v;
}

} // namespace

std::vector<GeneratingVector> enumerate_generating_vectors(const GroupSpec& g, const Signature& sig,
                                                           const EnumerationOptions& opts) {
    auto keys = enumerate_keys(g, sig, opts, /*all_patterns=*/false, nullptr);
    std::vector<GeneratingVector> out;
    out.reserve(keys.size());
    for (std::uint64_t k : keys) out.push_back(materialize(g, sig, k));
    return out;
}

std::uint64_t count_generating_vectors(const GroupSpec& g, const Signature& sig,
                                       const EnumerationOptions& opts) {
    return enumerate_keys(g, sig, opts, /*all_patterns=*/false, nullptr).size();
}

OrbitSet equivalence_orbits(const GroupSpec& g, const Signature& sig, const EnumerationOptions& opts) {
    OrbitSet set(g, sig);

    if (sig.orbit_genus == 1) {
        std::uint64_t count = 0;
        auto keys = enumerate_keys(g, sig, opts, true, &count);
        set.existence_only_ = true;
        set.total_ = keys.size();
        if (!keys.empty()) {
            ActionOrbit orbit{materialize(g, sig, keys.front()), keys.size(), true};
            set.orbits_.push_back(std::move(orbit));
        }
        return set;
    }
    if (sig.orbit_genus != 0) throw UnsupportedGenus("orbit reduction supports quotient genus 0 and 1");

    std::uint64_t sorted_total = 0;
    auto keys = enumerate_keys(g, sig, opts, /*all_patterns=*/true, &sorted_total);
    set.total_ = sorted_total;
    if (keys.empty()) return set;

    auto auts = std::make_shared<std::vector<GroupAutomorphism>>(automorphism_group(g, opts.aut_bound));
    set.auts_ = auts;
    std::vector<PreparedAut> prepared;
    prepared.reserve(auts->size());
    for (const auto& phi : *auts) prepared.push_back(prepare_aut(g, phi));

    size_t l = static_cast<size_t>(sig.period_count());
    std::vector<std::uint32_t> class_id(keys.size(), kUnassigned);
    std::vector<std::uint64_t> class_min;
    std::vector<char> class_sorted;

    std::vector<GroupElement> elems;
    for (size_t idx = 0; idx < keys.size(); ++idx) {
        if (class_id[idx] != kUnassigned) continue;
        auto cid = static_cast<std::uint32_t>(class_min.size());
        unpack_key(keys[idx], l, elems);
        std::uint64_t min_key = ~0ull;
        size_t assigned = 0;
        for (const auto& p : prepared) {
            std::uint64_t k2 = apply_prepared_key(g, p, elems);
            size_t pos = key_position(keys, k2);
            if (pos == keys.size())
                throw std::logic_error("automorphism image left the vector set");
            if (class_id[pos] == kUnassigned) {
                class_id[pos] = cid;
                ++assigned;
            } else if (class_id[pos] != cid) {
                throw std::logic_error("automorphism classes collided");
            }
            min_key = std::min(min_key, k2);
        }
        if (assigned != prepared.size())
            throw std::logic_error("Aut(G) does not act freely on generating vectors");
        class_min.push_back(min_key);
        class_sorted.push_back(pattern_is_sorted(g, elems) ? 1 : 0);
    }

    // braid closure over Aut-classes, across all period orderings
    size_t n_classes = class_min.size();
    std::vector<std::uint32_t> orbit_of_class(n_classes, kUnassigned);
    struct OrbitAccum {
        std::uint64_t min_sorted_key;
        std::uint64_t sorted_classes;
    };
    std::vector<OrbitAccum> accums;

    // process classes in min-key order for determinism
    std::vector<std::uint32_t> order(n_classes);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return class_min[a] < class_min[b]; });

    std::vector<GroupElement> rep;
    for (std::uint32_t seed : order) {
        if (orbit_of_class[seed] != kUnassigned) continue;
        auto oid = static_cast<std::uint32_t>(accums.size());
        accums.push_back({~0ull, 0});
        std::vector<std::uint32_t> frontier{seed};
        orbit_of_class[seed] = oid;
        while (!frontier.empty()) {
            std::uint32_t cls = frontier.back();
            frontier.pop_back();
            if (class_sorted[cls]) {
                ++accums[oid].sorted_classes;
                accums[oid].min_sorted_key = std::min(accums[oid].min_sorted_key, class_min[cls]);
            }
            unpack_key(class_min[cls], l, rep);
            for (int i = 0; i + 1 < static_cast<int>(l); ++i) {
                for (bool inv : {false, true}) {
                    std::vector<GroupElement> moved = rep;
                    braid_images(g, moved, i, inv);
                    // identify the Aut-class of the moved vector
                    size_t pos = key_position(keys, pack_key(moved));
                    if (pos == keys.size())
                        throw std::logic_error("braid image left the vector set");
                    std::uint32_t c2 = class_id[pos];
                    if (orbit_of_class[c2] == kUnassigned) {
                        orbit_of_class[c2] = oid;
                        frontier.push_back(c2);
                    }
                }
            }
        }
    }

    std::uint64_t accounted = 0;
    for (std::uint32_t oid = 0; oid < accums.size(); ++oid) {
        if (accums[oid].sorted_classes == 0)
            throw std::logic_error("equivalence orbit with no sorted representative");
        ActionOrbit orbit{materialize(g, sig, accums[oid].min_sorted_key),
                          accums[oid].sorted_classes * auts->size(), false};
        accounted += orbit.size;
        set.orbits_.push_back(std::move(orbit));
    }
    if (accounted != sorted_total)
        throw std::logic_error("orbit sizes do not sum to the vector count");
    std::sort(set.orbits_.begin(), set.orbits_.end(), [&](const ActionOrbit& a, const ActionOrbit& b) {
        return pack_key(a.representative.periods) < pack_key(b.representative.periods);
    });

    // remap orbit ids to the sorted order for the lookup table
    std::vector<std::uint32_t> remap(accums.size());
    {
        std::vector<std::pair<std::uint64_t, std::uint32_t>> by_key;
        by_key.reserve(accums.size());
        for (std::uint32_t oid = 0; oid < accums.size(); ++oid)
            by_key.emplace_back(accums[oid].min_sorted_key, oid);
        std::sort(by_key.begin(), by_key.end());
        for (std::uint32_t rank = 0; rank < by_key.size(); ++rank) remap[by_key[rank].second] = rank;
    }
    set.class_to_orbit_.reserve(n_classes);
    for (size_t idx = 0; idx < keys.size(); ++idx) {
        std::uint32_t cls = class_id[idx];
        if (keys[idx] == class_min[cls])
            set.class_to_orbit_.emplace_back(keys[idx], remap[orbit_of_class[cls]]);
    }
    std::sort(set.class_to_orbit_.begin(), set.class_to_orbit_.end());
    return set;
}

int OrbitSet::orbit_of(const GeneratingVector& v) const {
    if (existence_only_) throw UnsupportedGenus("no orbit lookup for existence-only signatures");
    if (!v.group.same_presentation(group_)) throw GroupMismatch("vector over a different group");
    if (v.signature != sig_) throw GroupMismatch("vector with a different signature");
    if (orbits_.empty()) return -1;
    std::uint64_t min_key = ~0ull;
    for (const auto& phi : *auts_) {
        PreparedAut p = prepare_aut(group_, phi);
        min_key = std::min(min_key, apply_prepared_key(group_, p, v.periods));
    }
    auto it = std::lower_bound(class_to_orbit_.begin(), class_to_orbit_.end(),
                               std::make_pair(min_key, std::uint32_t{0}));
    if (it == class_to_orbit_.end() || it->first != min_key) return -1;
    return static_cast<int>(it->second);
}

bool are_equivalent(const GeneratingVector& v1, const GeneratingVector& v2,
                    const EnumerationOptions& opts) {
    if (!v1.group.same_presentation(v2.group)) throw GroupMismatch("vectors over different groups");
    if (v1.signature != v2.signature) throw GroupMismatch("vectors with different signatures");
    if (v1.signature.orbit_genus != 0) throw UnsupportedGenus("equivalence implemented for genus-0 quotients");
    OrbitSet set = equivalence_orbits(v1.group, v1.signature, opts);
    int o1 = set.orbit_of(v1), o2 = set.orbit_of(v2);
    if (o1 < 0 || o2 < 0) throw std::logic_error("are_equivalent: vector not in enumeration");
    return o1 == o2;
}

} // namespace surfact
