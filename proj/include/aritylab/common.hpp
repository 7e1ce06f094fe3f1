#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace aritylab {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Process-level exit codes, shared by the CLI and the library's error types.
enum class ExitCode : int {
    ok = 0,
    input_error = 2,
    exhausted_no_witness = 3,
    budget_exhausted = 4,
    internal_error = 5,
};

// A caller handed us something malformed (bad tuple, out-of-range element,
// ragged sequence, parameter outside the documented range).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured cap (universe size, table rows, search budget) would be
// exceeded.  Messages name the cap so runs can be re-tried with larger limits.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// An invariant that is supposed to hold by construction failed.  This is the
// "theorem violation" class: it always indicates a bug, never bad input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

// ---------------------------------------------------------------------------
// Deterministic RNG.  std::uniform_int_distribution is implementation-defined,
// so reports would not be byte-stable across standard libraries.  splitmix64
// is tiny and fully pinned.
class Rng {
public:
    explicit Rng(u64 seed) : state_(seed) {}

    u64 next() {
        u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). Bias is < 2^-32 for our bounds; determinism is
    // what matters here.
    u64 below(u64 bound) { return bound == 0 ? 0 : next() % bound; }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // k distinct values from [0, n), in selection order.
    std::vector<u32> distinct(u32 n, u32 k);

private:
    u64 state_;
};

// ---------------------------------------------------------------------------
// FNV-1a digests.  Used for display/digest fields only; any equality decision
// that matters compares full canonical bytes.
inline u64 fnv1a64(const void* data, std::size_t len, u64 seed = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    u64 h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline u64 fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

std::string hex64(u64 v);
std::string digest_hex(const std::string& bytes);

// Append little-endian integers to a byte buffer (canonical serializations).
inline void put_u32(std::string& out, u32 v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline void put_u64(std::string& out, u64 v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

}  // namespace aritylab
