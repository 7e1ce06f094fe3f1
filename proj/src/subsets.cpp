#include "aritylab/subsets.hpp"

namespace aritylab {

u64 binomial(u64 n, u64 k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    u64 result = 1;
    for (u64 i = 1; i <= k; ++i) {
        u64 num = n - k + i;
        // result * num / i, guarding overflow.
        u64 g = std::__gcd(num, i);
        num /= g;
        u64 den = i / g;
        u64 g2 = std::__gcd(result, den);
        u64 r = result / g2;
        den /= g2;
        if (den != 1) throw InternalError("binomial: non-exact division");
        if (num != 0 && r > ~u64{0} / num) throw ResourceError("binomial overflow");
        result = r * num;
    }
    return result;
}

u64 colex_rank(const std::vector<u32>& subset) {
    u64 rank = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) rank += binomial(subset[i], i + 1);
    return rank;
}

std::vector<u32> colex_unrank(u64 rank, u32 k) {
    std::vector<u32> s(k);
    for (u32 i = k; i >= 1; --i) {
        // Largest a with C(a, i) <= rank.
        u32 a = i - 1;
        while (binomial(a + 1, i) <= rank) ++a;
        s[i - 1] = a;
        rank -= binomial(a, i);
    }
    return s;
}

u64 subset_mask(const std::vector<u32>& subset) {
    u64 m = 0;
    for (u32 e : subset) {
        if (e >= 64) throw InputError("subset_mask: element >= 64");
        m |= u64{1} << e;
    }
    return m;
}

std::vector<u32> mask_to_subset(u64 mask) {
    std::vector<u32> s;
    while (mask) {
        u32 e = static_cast<u32>(__builtin_ctzll(mask));
        s.push_back(e);
        mask &= mask - 1;
    }
    return s;
}

}  // namespace aritylab
