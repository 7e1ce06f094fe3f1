#pragma once

#include <optional>

#include "aritylab/perms.hpp"
#include "aritylab/structure.hpp"
#include "aritylab/subsets.hpp"

namespace aritylab {

// Caps shared by the generator family.  Explicit caps with resource errors,
// never silent truncation.
struct GeneratorCaps {
    u64 max_universe = 200'000;
    u64 max_rows = 80'000'000;
};

// ---------------------------------------------------------------------------
// k-uniform hypergraphs.  The edge relation E is stored closed under
// coordinate permutations with no repeated-entry rows.

struct HypergraphRandom {
    u64 seed = 0;
    double edge_prob = 0.5;
};

Structure gen_hypergraph(u32 n, u32 k, const HypergraphRandom& mode,
                         const GeneratorCaps& caps = {});
Structure gen_hypergraph(u32 n, u32 k, const std::vector<std::vector<u32>>& edges,
                         const GeneratorCaps& caps = {});

// Edge set as sorted k-subsets (for diagnostics and tests).
std::vector<std::vector<u32>> hypergraph_edges(const Structure& h);

// Count of missing extension-axiom instances at a small sample depth; purely
// diagnostic for random instances.
u64 hypergraph_extension_deficiency(const Structure& h, u32 sample_pairs, u64 seed);

// ---------------------------------------------------------------------------
// Parity reduct: R(v_1..v_{k+1}) holds for pairwise distinct v's iff an odd
// number of the k+1 drop-one subtuples are edges.  R is defined only on
// distinct-entry tuples.

struct KayGraphPair {
    Structure base;    // one k-ary relation "E"
    Structure reduct;  // one (k+1)-ary relation "R" on the same universe
    u32 k = 0;
};

KayGraphPair parity_reduct(const Structure& hypergraph, const GeneratorCaps& caps = {});

// ---------------------------------------------------------------------------
// Johnson structures: universe = k-subsets of [n] in colex order, relations
// E_{i,j} (2 <= i <= k+1, 0 <= j <= k-1) holding when the i argument subsets
// intersect in exactly j points.

std::string johnson_relation_name(u32 i, u32 j);
Signature johnson_signature(u32 k);

struct JohnsonStructure {
    u32 n = 0;
    u32 k = 0;
    Structure structure;
    std::vector<std::vector<u32>> elements;  // universe index -> k-subset
};

JohnsonStructure gen_johnson(u32 n, u32 k, const GeneratorCaps& caps = {});

// Unmaterialized view over an explicit list of k-subsets (arbitrary ground
// elements); membership is computed from intersection sizes on demand.
// Used when (n choose k) puts the full table far out of reach.
class JohnsonInducedView : public StructureView {
public:
    JohnsonInducedView(u32 k, std::vector<std::vector<u32>> elements);

    const Signature& signature() const override { return sig_; }
    u32 universe_size() const override { return static_cast<u32>(masks_.size()); }
    bool contains(std::size_t rel, std::span<const u32> tuple) const override;
    bool relation_symmetric(std::size_t) const override { return true; }

    const std::vector<std::vector<u32>>& elements() const { return elements_; }

private:
    u32 k_;
    Signature sig_;
    std::vector<std::pair<u32, u32>> rel_ij_;  // relation index -> (i, j)
    std::vector<std::vector<u32>> elements_;
    std::vector<std::vector<u64>> masks_;  // chunked bitmasks per element
};

}  // namespace aritylab
