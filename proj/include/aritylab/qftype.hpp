#pragma once

#include <map>
#include <optional>

#include "aritylab/structure.hpp"

namespace aritylab {

// ---------------------------------------------------------------------------
// Canonical quantifier-free type of a tuple: the equality pattern of its
// positions plus, for every relation R of arity r and every function
// f: [r] -> [l], one bit recording membership of the f-rearranged subtuple.
// Non-injective f are included on purpose: the equality pattern alone does
// not determine repeated-entry membership for arbitrary tables.
struct QfType {
    u32 arity = 0;
    // eq_class[i] = smallest position j with t[j] == t[i].
    std::vector<u32> eq_class;
    // Packed atom bits, relations in signature order, index maps f enumerated
    // lexicographically as r-digit base-l counters.
    std::vector<u64> atom_bits;
    u64 atom_count = 0;
    std::string signature_digest;

    bool operator==(const QfType&) const = default;

    std::string bytes() const;
    std::string digest() const { return digest_hex(bytes()); }
    // Human-readable atom listing: one line per satisfied atom.
    std::string describe(const Signature& sig, std::size_t max_lines = 64) const;
};

QfType qf_type(const StructureView& s, std::span<const u32> tuple);

// Streaming equality of qf types of two tuples without materializing atom
// bitsets; exploits distinct-only / symmetric table hints.
bool qf_types_equal(const StructureView& s, std::span<const u32> a, std::span<const u32> b);

// ---------------------------------------------------------------------------
// Subtype profiles: the qf types of the selected subtuples of a base tuple.
enum class ProfileMode { up_to_k, drop_one };

struct SubtypeProfile {
    u32 base_arity = 0;
    ProfileMode mode = ProfileMode::drop_one;
    u32 k = 0;  // meaningful in up_to_k mode
    // Keyed by increasing index sets, ordered by (size, lex).
    std::vector<std::pair<std::vector<u32>, QfType>> entries;

    bool operator==(const SubtypeProfile&) const = default;
    std::string bytes() const;
    std::string digest() const { return digest_hex(bytes()); }
};

SubtypeProfile subtype_profile(const StructureView& s, std::span<const u32> tuple,
                               ProfileMode mode, u32 k = 0);

// Index-set family used by a profile mode (exposed for search loops).
std::vector<std::vector<u32>> profile_index_sets(u32 arity, ProfileMode mode, u32 k);

// Streaming equality of profiles of two tuples.
bool profiles_equal(const StructureView& s, std::span<const u32> a, std::span<const u32> b,
                    ProfileMode mode, u32 k = 0);

}  // namespace aritylab
