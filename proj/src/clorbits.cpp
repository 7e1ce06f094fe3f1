#include "aritylab/clorbits.hpp"

#include <algorithm>
#include <sstream>

namespace aritylab {

CLElement CLElement::make(u32 a, u32 b, u32 c, u32 d) {
    std::array<u32, 4> v = {a, b, c, d};
    std::sort(v.begin(), v.end());
    for (int i = 0; i < 3; ++i)
        if (v[i] == v[i + 1]) throw InputError("CLElement: points must be distinct");
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    if (std::pair(a, b) > std::pair(c, d)) {
        std::swap(a, c);
        std::swap(b, d);
    }
    return CLElement{{a, b, c, d}};
}

std::vector<CLElement> cl_universe(u32 n) {
    if (n < 4) throw InputError("cl_universe: need n >= 4");
    std::vector<CLElement> out;
    // choose 4 distinct points, then one of the 3 pairings
    for_each_subset(n, 4, [&](const std::vector<u32>& q) {
        out.push_back(CLElement::make(q[0], q[1], q[2], q[3]));
        out.push_back(CLElement::make(q[0], q[2], q[1], q[3]));
        out.push_back(CLElement::make(q[0], q[3], q[1], q[2]));
    });
    std::sort(out.begin(), out.end());
    return out;
}

CLElement cl_apply(const Perm& p, const CLElement& e) {
    return CLElement::make(p[e.pts[0]], p[e.pts[1]], p[e.pts[2]], p[e.pts[3]]);
}

std::vector<CLElement> cl_apply(const Perm& p, const std::vector<CLElement>& t) {
    std::vector<CLElement> out;
    out.reserve(t.size());
    for (const auto& e : t) out.push_back(cl_apply(p, e));
    return out;
}

bool cl_orbit_equal_bruteforce(u32 n, const std::vector<CLElement>& t1,
                               const std::vector<CLElement>& t2) {
    if (t1.size() != t2.size()) return false;
    Perm p = identity_perm(n);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < t1.size() && ok; ++i)
            if (cl_apply(p, t1[i]) != t2[i]) ok = false;
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// ---------------------------------------------------------------------------
// Canonical labeling.
//
// A tuple serializes, under a relabeling phi of its support, as the
// concatenation of the normalized quadruples of its entries.  The canonical
// code is the lexicographic minimum over all phi.  In a minimizing phi, labels
// are assigned in order of first use (swapping an out-of-order label pair
// strictly lowers the first entry it touches), so the search assigns the next
// consecutive labels to each entry's unlabeled points and prunes against the
// best serialization found so far.

namespace {

std::array<u32, 4> normalize_quad(u32 a, u32 b, u32 c, u32 d) {
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    if (std::pair(a, b) > std::pair(c, d)) {
        std::swap(a, c);
        std::swap(b, d);
    }
    return {a, b, c, d};
}

struct CanonSearch {
    const std::vector<CLElement>& tuple;
    std::vector<u32> support;           // sorted support points
    std::vector<int> label_of;          // support index -> label or -1
    std::vector<u32> prefix;            // serialization built so far
    std::vector<u32> best;              // best complete serialization
    bool have_best = false;
    u32 next_label = 0;

    explicit CanonSearch(const std::vector<CLElement>& t) : tuple(t) {
        for (const auto& e : t)
            for (u32 p : e.pts) support.push_back(p);
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        label_of.assign(support.size(), -1);
    }

    u32 support_index(u32 point) const {
        return static_cast<u32>(std::lower_bound(support.begin(), support.end(), point) -
                                support.begin());
    }

    void run() { descend(0, true); }

    // tight: prefix equals best[0..prefix.size()); prune only while tight.
    void descend(std::size_t entry, bool tight) {
        if (entry == tuple.size()) {
            if (!have_best || prefix < best) {
                best = prefix;
                have_best = true;
            }
            return;
        }
        std::array<u32, 4> sidx;
        for (std::size_t i = 0; i < 4; ++i) sidx[i] = support_index(tuple[entry].pts[i]);

        std::vector<u32> fresh;
        for (u32 s : sidx)
            if (label_of[s] < 0 &&
                std::find(fresh.begin(), fresh.end(), s) == fresh.end())
                fresh.push_back(s);
        std::sort(fresh.begin(), fresh.end());

        // assign next_label..next_label+f-1 to the fresh points, all orders
        std::vector<u32> order = fresh;
        do {
            for (std::size_t i = 0; i < order.size(); ++i)
                label_of[order[i]] = static_cast<int>(next_label + i);
            auto quad = normalize_quad(static_cast<u32>(label_of[sidx[0]]),
                                       static_cast<u32>(label_of[sidx[1]]),
                                       static_cast<u32>(label_of[sidx[2]]),
                                       static_cast<u32>(label_of[sidx[3]]));
            int cmp = -1;  // quad vs best segment when tight
            if (have_best && tight) {
                cmp = 0;
                std::size_t base = prefix.size();
                for (std::size_t i = 0; i < 4; ++i) {
                    if (quad[i] != best[base + i]) {
                        cmp = quad[i] < best[base + i] ? -1 : 1;
                        break;
                    }
                }
            }
            if (cmp <= 0) {
                u32 saved_next = next_label;
                next_label += static_cast<u32>(order.size());
                for (u32 v : quad) prefix.push_back(v);
                descend(entry + 1, have_best && tight && cmp == 0);
                prefix.resize(prefix.size() - 4);
                next_label = saved_next;
            }
            for (u32 s : order) label_of[s] = -1;
        } while (std::next_permutation(order.begin(), order.end()));
    }
};

}  // namespace

OrbitCode cl_orbit_code(const std::vector<CLElement>& tuple) {
    OrbitCode code;
    code.arity = static_cast<u32>(tuple.size());
    if (tuple.empty()) return code;
    CanonSearch search(tuple);
    search.run();
    code.support = static_cast<u32>(search.support.size());
    code.data = search.best;
    return code;
}

std::string OrbitCode::text() const {
    std::ostringstream os;
    os << "m" << arity << ":s" << support << ":";
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (i && i % 4 == 0) os << "|";
        os << data[i];
        if (i % 4 != 3) os << ".";
    }
    return os.str();
}

std::string OrbitCode::digest() const {
    std::string b;
    put_u32(b, arity);
    put_u32(b, support);
    for (u32 v : data) put_u32(b, v);
    return digest_hex(b);
}

// ---------------------------------------------------------------------------

CLStructure::CLStructure(u32 n, u32 max_arity, CLCaps caps)
    : n_(n), max_arity_(max_arity), caps_(caps) {
    if (n < 4) throw InputError("gen_cherlin_lachlan: need n >= 4");
    if (max_arity < 1) throw InputError("gen_cherlin_lachlan: need max_arity >= 1");
    elements_ = cl_universe(n);
    if (elements_.size() > caps_.max_universe)
        throw ResourceError("cherlin-lachlan universe " + std::to_string(elements_.size()) +
                            " exceeds max_universe cap " +
                            std::to_string(caps_.max_universe));
}

u32 CLStructure::index_of(const CLElement& e) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
    if (it == elements_.end() || !(*it == e)) throw InputError("element not in universe");
    return static_cast<u32>(it - elements_.begin());
}

OrbitCode CLStructure::orbit_code(std::span<const u32> tuple) const {
    if (tuple.size() > max_arity_)
        throw InputError("orbit_code: arity " + std::to_string(tuple.size()) +
                         " above max_arity " + std::to_string(max_arity_));
    std::vector<CLElement> t;
    t.reserve(tuple.size());
    for (u32 e : tuple) {
        if (e >= elements_.size()) throw InputError("orbit_code: element out of range");
        t.push_back(elements_[e]);
    }
    return cl_orbit_code(t);
}

bool CLStructure::orbit_equal(std::span<const u32> t1, std::span<const u32> t2) const {
    if (t1.size() != t2.size()) throw InputError("orbit_equal: tuple lengths differ");
    return orbit_code(t1) == orbit_code(t2);
}

std::map<OrbitCode, std::vector<u32>> CLStructure::orbit_census(u32 arity) const {
    if (arity > max_arity_) throw InputError("orbit_census: arity above max_arity");
    u64 total = 1;
    for (u32 i = 0; i < arity; ++i) {
        total *= elements_.size();
        if (total > caps_.max_code_evaluations)
            throw ResourceError("orbit census at arity " + std::to_string(arity) +
                                " exceeds max_code_evaluations cap " +
                                std::to_string(caps_.max_code_evaluations));
    }
    std::map<OrbitCode, std::vector<u32>> census;
    std::vector<u32> tuple(arity, 0);
    auto advance = [&]() {
        for (u32 i = arity; i-- > 0;) {
            if (++tuple[i] < elements_.size()) return true;
            tuple[i] = 0;
        }
        return false;
    };
    if (arity == 0) return census;
    do {
        auto code = orbit_code(tuple);
        census.emplace(std::move(code), tuple);
    } while (advance());
    return census;
}

std::string cl_relation_name(const OrbitCode& code) {
    return "O" + std::to_string(code.arity) + "_" + code.digest();
}

Structure CLStructure::materialize() const {
    std::vector<std::map<OrbitCode, std::vector<u32>>> census_by_arity;
    std::vector<RelationInfo> rels;
    for (u32 m = 1; m <= max_arity_; ++m) {
        census_by_arity.push_back(orbit_census(m));
        for (auto& [code, rep] : census_by_arity.back())
            rels.push_back({cl_relation_name(code), m, {}});
    }
    Structure s(Signature(std::move(rels)), static_cast<u32>(elements_.size()));
    std::vector<u32> tuple;
    for (u32 m = 1; m <= max_arity_; ++m) {
        tuple.assign(m, 0);
        auto advance = [&]() {
            for (u32 i = m; i-- > 0;) {
                if (++tuple[i] < elements_.size()) return true;
                tuple[i] = 0;
            }
            return false;
        };
        do {
            s.insert(cl_relation_name(orbit_code(tuple)), tuple);
        } while (advance());
    }
    return s;
}

Structure cl_induced_structure(u32 n, const std::vector<CLElement>& elements, u32 max_arity) {
    for (const auto& e : elements)
        for (u32 p : e.pts)
            if (p >= n) throw InputError("cl_induced_structure: point outside ground set");
    const u32 u = static_cast<u32>(elements.size());

    // first pass: collect codes per arity
    std::vector<RelationInfo> rels;
    std::vector<std::vector<std::pair<std::vector<u32>, OrbitCode>>> rows_by_arity(max_arity + 1);
    for (u32 m = 1; m <= max_arity; ++m) {
        std::vector<u32> tuple(m, 0);
        std::vector<CLElement> t(m);
        auto advance = [&]() {
            for (u32 i = m; i-- > 0;) {
                if (++tuple[i] < u) return true;
                tuple[i] = 0;
            }
            return false;
        };
        std::map<OrbitCode, bool> seen;
        do {
            for (u32 i = 0; i < m; ++i) t[i] = elements[tuple[i]];
            auto code = cl_orbit_code(t);
            if (seen.emplace(code, true).second) rels.push_back({cl_relation_name(code), m, {}});
            rows_by_arity[m].emplace_back(tuple, std::move(code));
        } while (advance());
    }
    Structure s(Signature(std::move(rels)), u);
    for (u32 m = 1; m <= max_arity; ++m)
        for (auto& [tuple, code] : rows_by_arity[m]) s.insert(cl_relation_name(code), tuple);
    return s;
}

}  // namespace aritylab
