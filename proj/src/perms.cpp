#include "aritylab/perms.hpp"

#include <algorithm>

namespace aritylab {

std::vector<Perm> all_permutations(u32 n, u32 max_n) {
    if (n > max_n)
        throw ResourceError("all_permutations: n=" + std::to_string(n) + " exceeds cap " +
                            std::to_string(max_n));
    Perm p = identity_perm(n);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Perm identity_perm(u32 n) {
    Perm p(n);
    for (u32 i = 0; i < n; ++i) p[i] = i;
    return p;
}

Perm compose(const Perm& f, const Perm& g) {
    Perm h(g.size());
    for (u32 i = 0; i < g.size(); ++i) h[i] = f[g[i]];
    return h;
}

Perm inverse(const Perm& f) {
    Perm h(f.size());
    for (u32 i = 0; i < f.size(); ++i) h[f[i]] = i;
    return h;
}

std::vector<u32> apply_to_subset(const Perm& p, const std::vector<u32>& subset) {
    std::vector<u32> out;
    out.reserve(subset.size());
    for (u32 e : subset) out.push_back(p[e]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Perm> sym_generators(u32 n) {
    std::vector<Perm> gens;
    if (n >= 2) {
        Perm t = identity_perm(n);
        std::swap(t[0], t[1]);
        gens.push_back(std::move(t));
        Perm c(n);
        for (u32 i = 0; i < n; ++i) c[i] = (i + 1) % n;
        gens.push_back(std::move(c));
    }
    return gens;
}

}  // namespace aritylab
