#include "aritylab/qftype.hpp"

#include <algorithm>
#include <sstream>

namespace aritylab {

namespace {

std::vector<u32> equality_classes(std::span<const u32> tuple) {
    std::vector<u32> eq(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        u32 cls = static_cast<u32>(i);
        for (std::size_t j = 0; j < i; ++j) {
            if (tuple[j] == tuple[i]) {
                cls = static_cast<u32>(j);
                break;
            }
        }
        eq[i] = cls;
    }
    return eq;
}

// Advance an r-digit base-l counter (last digit fastest). Returns false when
// the counter wraps.
bool next_map(std::vector<u32>& f, u32 l) {
    for (std::size_t i = f.size(); i-- > 0;) {
        if (++f[i] < l) return true;
        f[i] = 0;
    }
    return false;
}

bool map_has_repeat(const std::vector<u32>& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (f[i] == f[j]) return true;
    return false;
}

}  // namespace

QfType qf_type(const StructureView& s, std::span<const u32> tuple) {
    s.check_tuple(tuple);
    QfType t;
    t.arity = static_cast<u32>(tuple.size());
    t.eq_class = equality_classes(tuple);
    t.signature_digest = digest_hex(s.signature().bytes());

    const u32 l = t.arity;
    u64 bit_index = 0;
    std::vector<u32> mapped;
    for (std::size_t rel = 0; rel < s.signature().size(); ++rel) {
        const u32 r = s.signature().at(rel).arity;
        if (l == 0) continue;  // no functions [r] -> [0]
        std::vector<u32> f(r, 0);
        mapped.resize(r);
        do {
            for (u32 i = 0; i < r; ++i) mapped[i] = tuple[f[i]];
            if (s.contains(rel, mapped)) {
                u64 word = bit_index >> 6;
                if (word >= t.atom_bits.size()) t.atom_bits.resize(word + 1, 0);
                t.atom_bits[word] |= u64{1} << (bit_index & 63);
            }
            ++bit_index;
        } while (next_map(f, l));
    }
    t.atom_count = bit_index;
    // normalize trailing storage so equal types are byte-equal
    u64 words = (bit_index + 63) / 64;
    t.atom_bits.resize(words, 0);
    return t;
}

std::string QfType::bytes() const {
    std::string out;
    out += signature_digest;
    put_u32(out, arity);
    for (u32 c : eq_class) put_u32(out, c);
    put_u64(out, atom_count);
    for (u64 w : atom_bits) put_u64(out, w);
    return out;
}

std::string QfType::describe(const Signature& sig, std::size_t max_lines) const {
    std::ostringstream os;
    os << "arity " << arity << "; equality classes [";
    for (std::size_t i = 0; i < eq_class.size(); ++i)
        os << (i ? " " : "") << eq_class[i];
    os << "]\n";
    u64 bit_index = 0;
    std::size_t lines = 0;
    const u32 l = arity;
    for (std::size_t rel = 0; rel < sig.size(); ++rel) {
        const u32 r = sig.at(rel).arity;
        if (l == 0) continue;
        std::vector<u32> f(r, 0);
        do {
            bool set = (atom_bits[bit_index >> 6] >> (bit_index & 63)) & 1;
            if (set) {
                if (lines++ < max_lines) {
                    os << sig.at(rel).name << "(";
                    for (u32 i = 0; i < r; ++i) os << (i ? "," : "") << "x" << f[i];
                    os << ")\n";
                }
            }
            ++bit_index;
        } while (next_map(f, l));
    }
    if (lines > max_lines) os << "... (" << (lines - max_lines) << " more atoms)\n";
    return os.str();
}

bool qf_types_equal(const StructureView& s, std::span<const u32> a, std::span<const u32> b) {
    if (a.size() != b.size()) return false;
    if (equality_classes(a) != equality_classes(b)) return false;
    const u32 l = static_cast<u32>(a.size());
    if (l == 0) return true;
    std::vector<u32> mapped_a, mapped_b;
    for (std::size_t rel = 0; rel < s.signature().size(); ++rel) {
        const u32 r = s.signature().at(rel).arity;
        const bool skip_repeats = s.relation_distinct_only(rel);
        const bool symmetric = s.relation_symmetric(rel);
        std::vector<u32> f(r, 0);
        mapped_a.resize(r);
        mapped_b.resize(r);
        do {
            if (skip_repeats && map_has_repeat(f)) continue;
            if (symmetric && !std::is_sorted(f.begin(), f.end())) continue;
            for (u32 i = 0; i < r; ++i) {
                mapped_a[i] = a[f[i]];
                mapped_b[i] = b[f[i]];
            }
            if (s.contains(rel, mapped_a) != s.contains(rel, mapped_b)) return false;
        } while (next_map(f, l));
    }
    return true;
}

std::vector<std::vector<u32>> profile_index_sets(u32 arity, ProfileMode mode, u32 k) {
    std::vector<std::vector<u32>> sets;
    if (mode == ProfileMode::drop_one) {
        for (u32 drop = 0; drop < arity; ++drop) {
            std::vector<u32> I;
            I.reserve(arity - 1);
            for (u32 i = 0; i < arity; ++i)
                if (i != drop) I.push_back(i);
            sets.push_back(std::move(I));
        }
        std::sort(sets.begin(), sets.end());
        return sets;
    }
    if (k > arity) throw InputError("subtype_profile: k > tuple length");
    // all increasing subsets of size <= k, ordered by (size, lex)
    for (u32 sz = 0; sz <= k; ++sz) {
        if (sz == 0) {
            sets.push_back({});
            continue;
        }
        std::vector<u32> I(sz);
        for (u32 i = 0; i < sz; ++i) I[i] = i;
        while (true) {
            sets.push_back(I);
            int i = static_cast<int>(sz) - 1;
            while (i >= 0 && I[static_cast<u32>(i)] == arity - sz + static_cast<u32>(i)) --i;
            if (i < 0) break;
            ++I[static_cast<u32>(i)];
            for (u32 j = static_cast<u32>(i) + 1; j < sz; ++j) I[j] = I[j - 1] + 1;
        }
    }
    return sets;
}

SubtypeProfile subtype_profile(const StructureView& s, std::span<const u32> tuple,
                               ProfileMode mode, u32 k) {
    s.check_tuple(tuple);
    SubtypeProfile p;
    p.base_arity = static_cast<u32>(tuple.size());
    p.mode = mode;
    p.k = (mode == ProfileMode::up_to_k) ? k : 0;
    for (auto& I : profile_index_sets(p.base_arity, mode, k)) {
        std::vector<u32> sub;
        sub.reserve(I.size());
        for (u32 i : I) sub.push_back(tuple[i]);
        p.entries.emplace_back(std::move(I), qf_type(s, sub));
    }
    return p;
}

std::string SubtypeProfile::bytes() const {
    std::string out;
    put_u32(out, base_arity);
    put_u32(out, mode == ProfileMode::drop_one ? 0u : 1u);
    put_u32(out, k);
    put_u32(out, static_cast<u32>(entries.size()));
    for (const auto& [I, t] : entries) {
        put_u32(out, static_cast<u32>(I.size()));
        for (u32 i : I) put_u32(out, i);
        out += t.bytes();
    }
    return out;
}

bool profiles_equal(const StructureView& s, std::span<const u32> a, std::span<const u32> b,
                    ProfileMode mode, u32 k) {
    if (a.size() != b.size()) return false;
    std::vector<u32> sub_a, sub_b;
    for (auto& I : profile_index_sets(static_cast<u32>(a.size()), mode, k)) {
        sub_a.clear();
        sub_b.clear();
        for (u32 i : I) {
            sub_a.push_back(a[i]);
            sub_b.push_back(b[i]);
        }
        if (!qf_types_equal(s, sub_a, sub_b)) return false;
    }
    return true;
}

}  // namespace aritylab
