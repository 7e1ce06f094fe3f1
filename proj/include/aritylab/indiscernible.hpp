#pragma once

#include "aritylab/qftype.hpp"

namespace aritylab {

// Result of a quantifier-free indiscernibility check.  When the sequence is
// not qf-indiscernible, (witness_a, witness_b) is the lexicographically least
// pair of strictly increasing index sequences whose subtuples (concatenated
// with the parameter tuple) have distinct qf types.
struct IndiscernibilityResult {
    bool yes = true;
    u32 m = 0;
    std::vector<u32> witness_a;
    std::vector<u32> witness_b;
};

IndiscernibilityResult is_qf_indiscernible(const StructureView& s,
                                           const std::vector<std::vector<u32>>& seq,
                                           std::span<const u32> over = {});

}  // namespace aritylab
