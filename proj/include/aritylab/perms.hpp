#pragma once

#include "aritylab/common.hpp"

namespace aritylab {

using Perm = std::vector<u32>;

// All n! permutations of [n], lexicographic; guarded by a hard cap since this
// is only meant for brute-force oracles.
std::vector<Perm> all_permutations(u32 n, u32 max_n = 10);

Perm identity_perm(u32 n);
Perm compose(const Perm& f, const Perm& g);  // (f ∘ g)(x) = f(g(x))
Perm inverse(const Perm& f);

// Image of a sorted subset under a ground-set permutation, re-sorted.
std::vector<u32> apply_to_subset(const Perm& p, const std::vector<u32>& subset);

// Generating set for Sym(n): a transposition and an n-cycle.
std::vector<Perm> sym_generators(u32 n);

}  // namespace aritylab
