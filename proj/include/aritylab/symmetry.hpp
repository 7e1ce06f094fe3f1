#pragma once

#include <functional>

#include "aritylab/perms.hpp"
#include "aritylab/subsets.hpp"

namespace aritylab {

// A permutation group acting on a structure's universe, used to reduce tuple
// enumeration to orbit representatives.  Groups are stored as explicit
// element lists (these are brute-force-scale oracles, not GAP): a Johnson
// group keeps the n! ground permutations and applies them to indexed
// k-subsets on demand.
class SymmetryGroup {
public:
    static SymmetryGroup trivial(u32 universe);
    // Sym(ground_n) acting on colex-indexed k-subsets.
    static SymmetryGroup johnson(u32 ground_n, u32 k, u32 max_ground_n = 10);
    // Explicit universe permutations; the identity is added if missing.
    static SymmetryGroup explicit_perms(u32 universe, std::vector<Perm> perms);

    bool is_trivial() const { return order_ == 1; }
    u64 order() const { return order_; }
    u32 universe() const { return universe_; }
    u32 apply(u64 g, u32 element) const;
    const std::string& describe() const { return description_; }

private:
    SymmetryGroup() = default;

    u32 universe_ = 0;
    u64 order_ = 1;
    std::string description_ = "trivial";

    // johnson data
    bool johnson_ = false;
    u32 ground_n_ = 0;
    u32 k_ = 0;
    std::vector<u8> ground_perms_;  // flat, stride ground_n_
    std::vector<std::vector<u32>> elements_;
    std::unordered_map<u64, u32> mask_to_index_;

    // explicit data
    std::vector<Perm> universe_perms_;
};

// Enumerates one representative per orbit of ordered l-tuples over the
// group's universe under the diagonal action, via a stabilizer chain over
// explicit element lists.  Representatives arrive in a canonical order.
// Returns false if fn returned false (early stop); true on completion.
bool for_each_tuple_orbit_rep(const SymmetryGroup& g, u32 tuple_len,
                              const std::function<bool(const std::vector<u32>&)>& fn);

}  // namespace aritylab
