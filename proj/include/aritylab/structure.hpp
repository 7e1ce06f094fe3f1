#pragma once

#include <memory>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "aritylab/common.hpp"

namespace aritylab {

// ---------------------------------------------------------------------------
// Signature: an ordered list of relation symbols.  Relations are kept sorted
// by name so every serialized form is byte-stable.
struct RelationInfo {
    std::string name;
    u32 arity = 0;
    // Sort name per argument position; empty means single implicit sort.
    std::vector<std::string> sorts;

    bool operator==(const RelationInfo&) const = default;
};

class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<RelationInfo> relations);

    const std::vector<RelationInfo>& relations() const { return relations_; }
    std::size_t size() const { return relations_.size(); }
    const RelationInfo& at(std::size_t i) const { return relations_[i]; }
    // Index of a relation by name; throws InputError if absent.
    std::size_t index_of(const std::string& name) const;
    bool has(const std::string& name) const;
    u32 max_arity() const;

    std::string bytes() const;  // canonical serialization
    bool operator==(const Signature&) const = default;

private:
    std::vector<RelationInfo> relations_;
};

// ---------------------------------------------------------------------------
// Relation table over a universe of size n.  Dense bitset indexed by the
// mixed-radix encoding of the tuple when n^arity is small enough, hash set of
// packed tuples otherwise.  Witness search is table-lookup bound, so the
// dense path matters.
class Table {
public:
    Table() = default;
    Table(u32 arity, u32 universe, u64 bitset_cap_bits = kDefaultBitsetCapBits);

    static constexpr u64 kDefaultBitsetCapBits = u64{1} << 30;

    u32 arity() const { return arity_; }
    u64 size() const { return count_; }
    bool dense() const { return dense_; }

    bool contains(std::span<const u32> tuple) const;
    // Returns true if newly inserted.
    bool insert(std::span<const u32> tuple);

    // Tuples in lexicographic order (used for canonical serialization).
    std::vector<std::vector<u32>> sorted_tuples(u64 row_cap) const;

    // Declared hints checked/used by type comparison fast paths.
    bool symmetric = false;      // closed under all coordinate permutations
    bool distinct_only = false;  // contains no tuple with repeated entries

private:
    u64 index_of(std::span<const u32> tuple) const;

    u32 arity_ = 0;
    u32 universe_ = 0;
    u64 count_ = 0;
    bool dense_ = false;
    u64 card_ = 0;  // universe_^arity_ when dense
    std::vector<u64> bits_;
    std::unordered_set<std::string> rows_;
};

// ---------------------------------------------------------------------------
// Read-only view of a finite relational structure.  Concrete structures
// materialize tables; generator-backed views may compute membership on the
// fly (e.g. Johnson intersection relations over a large universe).
class StructureView {
public:
    virtual ~StructureView() = default;

    virtual const Signature& signature() const = 0;
    virtual u32 universe_size() const = 0;
    virtual bool contains(std::size_t rel, std::span<const u32> tuple) const = 0;

    // Sort index of an element (0 when single-sorted) and sort names.
    virtual u32 sort_of(u32 element) const { (void)element; return 0; }
    virtual const std::vector<std::string>& sort_names() const;

    // Fast-path hints; conservative defaults.
    virtual bool relation_symmetric(std::size_t rel) const { (void)rel; return false; }
    virtual bool relation_distinct_only(std::size_t rel) const { (void)rel; return false; }

    // Content digest over the canonical serialization when available.
    virtual std::string digest() const;

    void check_tuple(std::span<const u32> tuple) const;
    void check_tuple_sorts(std::span<const u32> tuple,
                           const std::vector<std::string>& expected_sorts) const;
};

// ---------------------------------------------------------------------------
// Materialized structure.  Immutable once built (all mutators are for
// construction; operations never modify a structure).
class Structure : public StructureView {
public:
    Structure() = default;
    Structure(Signature sig, u32 universe_size);
    Structure(Signature sig, u32 universe_size, std::vector<std::string> sort_names,
              std::vector<u32> sort_of);

    const Signature& signature() const override { return sig_; }
    u32 universe_size() const override { return n_; }
    u32 sort_of(u32 element) const override;
    const std::vector<std::string>& sort_names() const override { return sort_names_; }

    bool contains(std::size_t rel, std::span<const u32> tuple) const override;
    bool relation_symmetric(std::size_t rel) const override { return tables_[rel].symmetric; }
    bool relation_distinct_only(std::size_t rel) const override {
        return tables_[rel].distinct_only;
    }

    // Construction API.
    void insert(std::size_t rel, std::span<const u32> tuple);
    void insert(const std::string& rel_name, std::span<const u32> tuple);
    Table& table(std::size_t rel) { return tables_[rel]; }
    const Table& table(std::size_t rel) const { return tables_[rel]; }

    u64 total_rows() const;
    std::string canonical_bytes(u64 row_cap = kDefaultRowCap) const;
    std::string digest() const override;

    static constexpr u64 kDefaultRowCap = 5'000'000;

private:
    Signature sig_;
    u32 n_ = 0;
    std::vector<std::string> sort_names_;
    std::vector<u32> sort_of_;
    std::vector<Table> tables_;
};

}  // namespace aritylab
