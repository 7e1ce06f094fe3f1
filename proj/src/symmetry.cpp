#include "aritylab/symmetry.hpp"

#include <algorithm>

namespace aritylab {

SymmetryGroup SymmetryGroup::trivial(u32 universe) {
    SymmetryGroup g;
    g.universe_ = universe;
    g.order_ = 1;
    g.description_ = "trivial";
    return g;
}

SymmetryGroup SymmetryGroup::johnson(u32 ground_n, u32 k, u32 max_ground_n) {
    if (ground_n > max_ground_n)
        throw ResourceError("johnson symmetry: ground set " + std::to_string(ground_n) +
                            " exceeds cap " + std::to_string(max_ground_n));
    if (k < 1 || k > ground_n) throw InputError("johnson symmetry: need 1 <= k <= n");
    SymmetryGroup g;
    g.johnson_ = true;
    g.ground_n_ = ground_n;
    g.k_ = k;
    g.universe_ = static_cast<u32>(binomial(ground_n, k));
    g.description_ = "Sym(" + std::to_string(ground_n) + ") acting on " + std::to_string(k) +
                     "-subsets";
    for_each_subset(ground_n, k, [&](const std::vector<u32>& s) {
        g.mask_to_index_[subset_mask(s)] = static_cast<u32>(g.elements_.size());
        g.elements_.push_back(s);
    });
    Perm p = identity_perm(ground_n);
    do {
        for (u32 x : p) g.ground_perms_.push_back(static_cast<u8>(x));
        ++g.order_;
    } while (std::next_permutation(p.begin(), p.end()));
    g.order_ -= 1;  // order_ started at 1
    return g;
}

SymmetryGroup SymmetryGroup::explicit_perms(u32 universe, std::vector<Perm> perms) {
    SymmetryGroup g;
    g.universe_ = universe;
    bool has_identity = false;
    for (const auto& p : perms) {
        if (p.size() != universe)
            throw InputError("explicit symmetry: permutation length != universe");
        if (p == identity_perm(universe)) has_identity = true;
    }
    if (!has_identity) perms.insert(perms.begin(), identity_perm(universe));
    g.universe_perms_ = std::move(perms);
    g.order_ = g.universe_perms_.size();
    g.description_ = "explicit group with " + std::to_string(g.order_) + " listed elements";
    return g;
}

u32 SymmetryGroup::apply(u64 g, u32 element) const {
    if (order_ == 1) return element;
    if (johnson_) {
        const u8* p = &ground_perms_[g * ground_n_];
        u64 mask = 0;
        for (u32 pt : elements_[element]) mask |= u64{1} << p[pt];
        return mask_to_index_.at(mask);
    }
    return universe_perms_[g][element];
}

namespace {

// One node of the stabilizer chain: prefix tuple plus the subgroup (element
// index list) fixing the prefix pointwise.
struct ChainFrame {
    std::vector<u64> stabilizer;
};

bool descend(const SymmetryGroup& g, u32 tuple_len, std::vector<u32>& prefix,
             const std::vector<u64>& stab,
             const std::function<bool(const std::vector<u32>&)>& fn) {
    if (prefix.size() == tuple_len) return fn(prefix);
    const u32 n = g.universe();

    // Orbit partition of the universe under the stabilizer; least element of
    // each orbit is the branch representative.
    std::vector<char> seen(n, 0);
    for (u32 e = 0; e < n; ++e) {
        if (seen[e]) continue;
        // e is the least element of its orbit by scan order
        for (u64 s : stab) seen[g.apply(s, e)] = 1;
        prefix.push_back(e);
        if (prefix.size() == tuple_len) {
            // leaf: no need to refine the stabilizer
            if (!descend(g, tuple_len, prefix, {}, fn)) return false;
        } else {
            std::vector<u64> refined;
            for (u64 s : stab)
                if (g.apply(s, e) == e) refined.push_back(s);
            if (!descend(g, tuple_len, prefix, refined, fn)) return false;
        }
        prefix.pop_back();
    }
    return true;
}

}  // namespace

bool for_each_tuple_orbit_rep(const SymmetryGroup& g, u32 tuple_len,
                              const std::function<bool(const std::vector<u32>&)>& fn) {
    if (g.is_trivial()) {
        // plain mixed-radix enumeration
        if (tuple_len == 0) return fn({});
        std::vector<u32> t(tuple_len, 0);
        const u32 n = g.universe();
        if (n == 0) return true;
        while (true) {
            if (!fn(t)) return false;
            u32 i = tuple_len;
            bool done = true;
            while (i-- > 0) {
                if (++t[i] < n) {
                    done = false;
                    break;
                }
                t[i] = 0;
            }
            if (done) return true;
        }
    }
    std::vector<u64> all(g.order());
    for (u64 s = 0; s < g.order(); ++s) all[s] = s;
    std::vector<u32> prefix;
    return descend(g, tuple_len, prefix, all, fn);
}

}  // namespace aritylab
