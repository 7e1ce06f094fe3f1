#include "aritylab/structure.hpp"

#include <algorithm>

namespace aritylab {

// ---------------------------------------------------------------------------
// Signature

Signature::Signature(std::vector<RelationInfo> relations) : relations_(std::move(relations)) {
    std::sort(relations_.begin(), relations_.end(),
              [](const RelationInfo& a, const RelationInfo& b) { return a.name < b.name; });
    for (std::size_t i = 0; i < relations_.size(); ++i) {
        const auto& r = relations_[i];
        if (r.arity < 1) throw InputError("relation '" + r.name + "' has arity < 1");
        if (!r.sorts.empty() && r.sorts.size() != r.arity)
            throw InputError("relation '" + r.name + "': sort list length != arity");
        if (i > 0 && relations_[i - 1].name == r.name)
            throw InputError("duplicate relation name '" + r.name + "'");
    }
}

std::size_t Signature::index_of(const std::string& name) const {
    auto it = std::lower_bound(
        relations_.begin(), relations_.end(), name,
        [](const RelationInfo& r, const std::string& n) { return r.name < n; });
    if (it == relations_.end() || it->name != name)
        throw InputError("unknown relation '" + name + "'");
    return static_cast<std::size_t>(it - relations_.begin());
}

bool Signature::has(const std::string& name) const {
    auto it = std::lower_bound(
        relations_.begin(), relations_.end(), name,
        [](const RelationInfo& r, const std::string& n) { return r.name < n; });
    return it != relations_.end() && it->name == name;
}

u32 Signature::max_arity() const {
    u32 m = 0;
    for (const auto& r : relations_) m = std::max(m, r.arity);
    return m;
}

std::string Signature::bytes() const {
    std::string out;
    put_u32(out, static_cast<u32>(relations_.size()));
    for (const auto& r : relations_) {
        put_u32(out, static_cast<u32>(r.name.size()));
        out += r.name;
        put_u32(out, r.arity);
        put_u32(out, static_cast<u32>(r.sorts.size()));
        for (const auto& s : r.sorts) {
            put_u32(out, static_cast<u32>(s.size()));
            out += s;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Table

Table::Table(u32 arity, u32 universe, u64 bitset_cap_bits)
    : arity_(arity), universe_(universe) {
    u64 card = 1;
    bool fits = true;
    for (u32 i = 0; i < arity; ++i) {
        if (universe != 0 && card > bitset_cap_bits / universe) {
            fits = false;
            break;
        }
        card *= universe;
    }
    if (universe == 0) card = 0;
    if (fits && card <= bitset_cap_bits) {
        dense_ = true;
        card_ = card;
        bits_.assign((card + 63) / 64, 0);
    }
}

u64 Table::index_of(std::span<const u32> tuple) const {
    u64 idx = 0;
    for (u32 e : tuple) idx = idx * universe_ + e;
    return idx;
}

bool Table::contains(std::span<const u32> tuple) const {
    if (tuple.size() != arity_) return false;
    for (u32 e : tuple)
        if (e >= universe_) return false;
    if (dense_) {
        u64 idx = index_of(tuple);
        return (bits_[idx >> 6] >> (idx & 63)) & 1;
    }
    std::string key;
    key.reserve(tuple.size() * 4);
    for (u32 e : tuple) put_u32(key, e);
    return rows_.count(key) != 0;
}

bool Table::insert(std::span<const u32> tuple) {
    if (tuple.size() != arity_) throw InputError("table insert: wrong tuple length");
    for (u32 e : tuple)
        if (e >= universe_) throw InputError("table insert: element out of range");
    if (dense_) {
        u64 idx = index_of(tuple);
        u64 bit = u64{1} << (idx & 63);
        if (bits_[idx >> 6] & bit) return false;
        bits_[idx >> 6] |= bit;
        ++count_;
        return true;
    }
    std::string key;
    key.reserve(tuple.size() * 4);
    for (u32 e : tuple) put_u32(key, e);
    bool fresh = rows_.insert(std::move(key)).second;
    if (fresh) ++count_;
    return fresh;
}

std::vector<std::vector<u32>> Table::sorted_tuples(u64 row_cap) const {
    if (count_ > row_cap)
        throw ResourceError("table enumeration: " + std::to_string(count_) +
                            " rows exceed row cap " + std::to_string(row_cap));
    std::vector<std::vector<u32>> out;
    out.reserve(count_);
    if (dense_) {
        for (u64 idx = 0; idx < card_; ++idx) {
            if (!((bits_[idx >> 6] >> (idx & 63)) & 1)) continue;
            std::vector<u32> t(arity_);
            u64 v = idx;
            for (u32 i = arity_; i >= 1; --i) {
                t[i - 1] = static_cast<u32>(v % universe_);
                v /= universe_;
            }
            out.push_back(std::move(t));
        }
        // dense iteration order is already lexicographic
        return out;
    }
    for (const auto& key : rows_) {
        std::vector<u32> t(arity_);
        for (u32 i = 0; i < arity_; ++i) {
            u32 v = 0;
            for (u32 b = 0; b < 4; ++b)
                v |= static_cast<u32>(static_cast<unsigned char>(key[i * 4 + b])) << (8 * b);
            t[i] = v;
        }
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// StructureView

const std::vector<std::string>& StructureView::sort_names() const {
    static const std::vector<std::string> kSingle = {};
    return kSingle;
}

std::string StructureView::digest() const {
    std::string b = signature().bytes();
    put_u32(b, universe_size());
    return digest_hex(b);
}

void StructureView::check_tuple(std::span<const u32> tuple) const {
    for (u32 e : tuple)
        if (e >= universe_size())
            throw InputError("element " + std::to_string(e) + " outside universe of size " +
                             std::to_string(universe_size()));
}

void StructureView::check_tuple_sorts(std::span<const u32> tuple,
                                      const std::vector<std::string>& expected_sorts) const {
    if (expected_sorts.empty()) return;
    if (expected_sorts.size() != tuple.size())
        throw InputError("sort annotation length mismatch");
    const auto& names = sort_names();
    if (names.empty()) return;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (names[sort_of(tuple[i])] != expected_sorts[i])
            throw InputError("sort mismatch at position " + std::to_string(i) + ": element " +
                             std::to_string(tuple[i]) + " has sort '" +
                             names[sort_of(tuple[i])] + "', expected '" + expected_sorts[i] +
                             "'");
    }
}

// ---------------------------------------------------------------------------
// Structure

Structure::Structure(Signature sig, u32 universe_size)
    : sig_(std::move(sig)), n_(universe_size) {
    for (const auto& r : sig_.relations()) tables_.emplace_back(r.arity, n_);
}

Structure::Structure(Signature sig, u32 universe_size, std::vector<std::string> sort_names,
                     std::vector<u32> sort_of)
    : sig_(std::move(sig)),
      n_(universe_size),
      sort_names_(std::move(sort_names)),
      sort_of_(std::move(sort_of)) {
    if (!sort_names_.empty() && sort_of_.size() != n_)
        throw InputError("sort_of length != universe size");
    for (u32 s : sort_of_)
        if (s >= sort_names_.size()) throw InputError("sort index out of range");
    for (const auto& r : sig_.relations()) tables_.emplace_back(r.arity, n_);
}

u32 Structure::sort_of(u32 element) const {
    if (sort_of_.empty()) return 0;
    return sort_of_[element];
}

bool Structure::contains(std::size_t rel, std::span<const u32> tuple) const {
    return tables_[rel].contains(tuple);
}

void Structure::insert(std::size_t rel, std::span<const u32> tuple) {
    check_tuple(tuple);
    const auto& info = sig_.at(rel);
    if (tuple.size() != info.arity) throw InputError("tuple length != relation arity");
    if (!info.sorts.empty() && !sort_names_.empty()) {
        for (std::size_t i = 0; i < tuple.size(); ++i)
            if (sort_names_[sort_of(tuple[i])] != info.sorts[i])
                throw InputError("relation '" + info.name + "': sort mismatch at position " +
                                 std::to_string(i));
    }
    tables_[rel].insert(tuple);
}

void Structure::insert(const std::string& rel_name, std::span<const u32> tuple) {
    insert(sig_.index_of(rel_name), tuple);
}

u64 Structure::total_rows() const {
    u64 total = 0;
    for (const auto& t : tables_) total += t.size();
    return total;
}

std::string Structure::canonical_bytes(u64 row_cap) const {
    std::string out = sig_.bytes();
    put_u32(out, n_);
    put_u32(out, static_cast<u32>(sort_names_.size()));
    for (const auto& s : sort_names_) {
        put_u32(out, static_cast<u32>(s.size()));
        out += s;
    }
    for (u32 s : sort_of_) put_u32(out, s);
    for (const auto& t : tables_) {
        put_u64(out, t.size());
        for (const auto& row : t.sorted_tuples(row_cap))
            for (u32 e : row) put_u32(out, e);
    }
    return out;
}

std::string Structure::digest() const { return digest_hex(canonical_bytes()); }

}  // namespace aritylab
