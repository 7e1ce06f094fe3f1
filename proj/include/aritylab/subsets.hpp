#pragma once

#include <algorithm>
#include <optional>

#include "aritylab/common.hpp"

namespace aritylab {

// Binomial coefficient with overflow guard (throws ResourceError on overflow).
u64 binomial(u64 n, u64 k);

// k-subsets of [n] in colexicographic order.  A subset is a strictly
// increasing vector of elements.  colex rank({a_1 < ... < a_k}) =
// sum_i C(a_i, i).
u64 colex_rank(const std::vector<u32>& subset);
std::vector<u32> colex_unrank(u64 rank, u32 k);

// Enumerates all k-subsets of [n] in colex order, calling fn(subset).
template <typename Fn>
void for_each_subset(u32 n, u32 k, Fn&& fn) {
    if (k > n) return;
    std::vector<u32> s(k);
    for (u32 i = 0; i < k; ++i) s[i] = i;
    while (true) {
        fn(const_cast<const std::vector<u32>&>(s));
        // colex successor: bump the lowest index that has room, reset below.
        u32 i = 0;
        for (; i < k; ++i) {
            u32 lim = (i + 1 < k) ? s[i + 1] : n;
            if (s[i] + 1 < lim) break;
        }
        if (i == k) break;
        ++s[i];
        for (u32 j = 0; j < i; ++j) s[j] = j;
    }
}

// Bitmask of a subset over a ground set of size <= 64.
u64 subset_mask(const std::vector<u32>& subset);

// Sorted vector from a mask.
std::vector<u32> mask_to_subset(u64 mask);

// Intersection size of the subsets indexed by a tuple of masks.
inline u32 intersection_size(const std::vector<u64>& masks) {
    if (masks.empty()) return 0;
    u64 m = masks[0];
    for (std::size_t i = 1; i < masks.size(); ++i) m &= masks[i];
    return static_cast<u32>(__builtin_popcountll(m));
}

}  // namespace aritylab
