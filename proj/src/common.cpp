#include "aritylab/common.hpp"

#include <array>

namespace aritylab {

std::vector<u32> Rng::distinct(u32 n, u32 k) {
    if (k > n) throw InputError("Rng::distinct: k > n");
    // Partial Fisher-Yates over an index map; O(k) memory via sparse swaps
    // is not worth it at our sizes.
    std::vector<u32> pool(n);
    for (u32 i = 0; i < n; ++i) pool[i] = i;
    std::vector<u32> out(k);
    for (u32 i = 0; i < k; ++i) {
        u64 j = i + below(n - i);
        std::swap(pool[i], pool[j]);
        out[i] = pool[i];
    }
    return out;
}

std::string hex64(u64 v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

std::string digest_hex(const std::string& bytes) { return hex64(fnv1a64(bytes)); }

}  // namespace aritylab
