#include "aritylab/generators.hpp"

#include <algorithm>

namespace aritylab {

namespace {

Signature hypergraph_signature(u32 k) {
    return Signature({RelationInfo{"E", k, {}}});
}

// Inserts all orderings of a distinct-entry subset into a table.
void insert_symmetric(Structure& s, std::size_t rel, std::vector<u32> subset) {
    std::sort(subset.begin(), subset.end());
    do {
        s.insert(rel, subset);
    } while (std::next_permutation(subset.begin(), subset.end()));
}

void check_hypergraph_caps(u32 n, u32 k, const GeneratorCaps& caps) {
    if (k < 2 || k > n) throw InputError("gen_hypergraph: need 2 <= k <= n");
    if (n > caps.max_universe)
        throw ResourceError("gen_hypergraph: universe " + std::to_string(n) +
                            " exceeds max_universe cap " + std::to_string(caps.max_universe));
}

}  // namespace

Structure gen_hypergraph(u32 n, u32 k, const HypergraphRandom& mode, const GeneratorCaps& caps) {
    check_hypergraph_caps(n, k, caps);
    Structure s(hypergraph_signature(k), n);
    s.table(0).symmetric = true;
    s.table(0).distinct_only = true;
    Rng rng(mode.seed);
    // independent p-coin per k-subset, colex order
    for_each_subset(n, k, [&](const std::vector<u32>& subset) {
        if (rng.unit() < mode.edge_prob) insert_symmetric(s, 0, subset);
    });
    return s;
}

Structure gen_hypergraph(u32 n, u32 k, const std::vector<std::vector<u32>>& edges,
                         const GeneratorCaps& caps) {
    check_hypergraph_caps(n, k, caps);
    Structure s(hypergraph_signature(k), n);
    s.table(0).symmetric = true;
    s.table(0).distinct_only = true;
    for (auto edge : edges) {
        std::sort(edge.begin(), edge.end());
        if (edge.size() != k) throw InputError("explicit edge with wrong size");
        for (std::size_t i = 1; i < edge.size(); ++i)
            if (edge[i] == edge[i - 1]) throw InputError("explicit edge with repeated vertices");
        insert_symmetric(s, 0, edge);
    }
    return s;
}

std::vector<std::vector<u32>> hypergraph_edges(const Structure& h) {
    std::vector<std::vector<u32>> out;
    for (auto& row : h.table(0).sorted_tuples(Structure::kDefaultRowCap)) {
        if (std::is_sorted(row.begin(), row.end())) out.push_back(row);
    }
    return out;
}

u64 hypergraph_extension_deficiency(const Structure& h, u32 sample_pairs, u64 seed) {
    // For sampled disjoint (A, B) with |A|+|B| = k, count instances with no
    // vertex v such that A+v extends to an edge while B+v does not.  A rough
    // saturation diagnostic, nothing more.
    const u32 k = h.signature().at(0).arity;
    const u32 n = h.universe_size();
    if (n < k + 1) return sample_pairs;
    if (2 * (k - 1) > n) return sample_pairs;
    Rng rng(seed);
    u64 deficient = 0;
    std::vector<u32> probe(k);
    for (u32 trial = 0; trial < sample_pairs; ++trial) {
        auto pick = rng.distinct(n, 2 * (k - 1));
        std::vector<u32> a(pick.begin(), pick.begin() + (k - 1));
        std::vector<u32> b(pick.begin() + (k - 1), pick.begin() + 2 * (k - 1));
        bool found = false;
        for (u32 v = 0; v < n && !found; ++v) {
            if (std::find(pick.begin(), pick.end(), v) != pick.end()) continue;
            probe.assign(a.begin(), a.end());
            probe.push_back(v);
            bool ea = h.contains(0, probe);
            probe.assign(b.begin(), b.end());
            probe.push_back(v);
            bool eb = h.contains(0, probe);
            if (ea && !eb) found = true;
        }
        if (!found) ++deficient;
    }
    return deficient;
}

KayGraphPair parity_reduct(const Structure& hypergraph, const GeneratorCaps& caps) {
    if (hypergraph.signature().size() != 1)
        throw InputError("parity_reduct: structure must have exactly one relation");
    const u32 k = hypergraph.signature().at(0).arity;
    const u32 n = hypergraph.universe_size();
    if (k < 2) throw InputError("parity_reduct: edge relation must have arity >= 2");

    // validate symmetry and distinct entries
    for (auto& row : hypergraph.table(0).sorted_tuples(Structure::kDefaultRowCap)) {
        auto sorted = row;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1])
                throw InputError("parity_reduct: repeated-entry tuple in E");
        auto perm = sorted;
        do {
            if (!hypergraph.contains(0, perm))
                throw InputError("parity_reduct: E is not symmetric");
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    u64 tuples = 1;
    for (u32 i = 0; i <= k; ++i) tuples *= n;
    if (tuples > caps.max_rows)
        throw ResourceError("parity_reduct: " + std::to_string(tuples) +
                            " candidate rows exceed max_rows cap " +
                            std::to_string(caps.max_rows));

    KayGraphPair pair;
    pair.k = k;
    pair.base = hypergraph;
    pair.reduct = Structure(Signature({RelationInfo{"R", k + 1, {}}}), n);
    pair.reduct.table(0).symmetric = true;
    pair.reduct.table(0).distinct_only = true;

    std::vector<u32> drop(k);
    for_each_subset(n, k + 1, [&](const std::vector<u32>& subset) {
        u32 odd = 0;
        for (u32 skip = 0; skip < k + 1; ++skip) {
            drop.clear();
            for (u32 i = 0; i < k + 1; ++i)
                if (i != skip) drop.push_back(subset[i]);
            if (hypergraph.contains(0, drop)) odd ^= 1;
        }
        if (odd) insert_symmetric(pair.reduct, 0, subset);
    });
    return pair;
}

// ---------------------------------------------------------------------------
// Johnson structures

std::string johnson_relation_name(u32 i, u32 j) {
    return "E_" + std::to_string(i) + "_" + std::to_string(j);
}

Signature johnson_signature(u32 k) {
    std::vector<RelationInfo> rels;
    for (u32 i = 2; i <= k + 1; ++i)
        for (u32 j = 0; j <= k - 1; ++j) rels.push_back({johnson_relation_name(i, j), i, {}});
    return Signature(std::move(rels));
}

JohnsonStructure gen_johnson(u32 n, u32 k, const GeneratorCaps& caps) {
    if (k < 1 || k > n) throw InputError("gen_johnson: need 1 <= k <= n");
    u64 universe = binomial(n, k);
    if (universe > caps.max_universe)
        throw ResourceError("gen_johnson: universe " + std::to_string(universe) +
                            " exceeds max_universe cap " + std::to_string(caps.max_universe));
    u64 row_estimate = 0;
    for (u32 i = 2; i <= k + 1; ++i) {
        u64 t = 1;
        for (u32 c = 0; c < i; ++c) t *= universe;
        row_estimate += t;
        if (row_estimate > caps.max_rows)
            throw ResourceError("gen_johnson: table rows exceed max_rows cap " +
                                std::to_string(caps.max_rows));
    }

    JohnsonStructure js;
    js.n = n;
    js.k = k;
    js.elements.reserve(universe);
    for_each_subset(n, k, [&](const std::vector<u32>& s) { js.elements.push_back(s); });

    std::vector<u64> masks(universe);
    for (u64 e = 0; e < universe; ++e) masks[e] = subset_mask(js.elements[e]);

    js.structure = Structure(johnson_signature(k), static_cast<u32>(universe));
    for (std::size_t rel = 0; rel < js.structure.signature().size(); ++rel) {
        js.structure.table(rel).symmetric = true;
    }

    // For every i-tuple of universe elements, |x_1 cap ... cap x_i| determines
    // the unique j with E_{i,j}; iterate tuples once per arity.
    for (u32 i = 2; i <= k + 1; ++i) {
        std::vector<std::size_t> rel_by_j(k);
        for (u32 j = 0; j <= k - 1; ++j)
            rel_by_j[j] = js.structure.signature().index_of(johnson_relation_name(i, j));
        std::vector<u32> tuple(i, 0);
        auto advance = [&]() {
            for (u32 p = i; p-- > 0;) {
                if (++tuple[p] < universe) return true;
                tuple[p] = 0;
            }
            return false;
        };
        do {
            u64 m = masks[tuple[0]];
            for (u32 p = 1; p < i; ++p) m &= masks[tuple[p]];
            u32 isz = static_cast<u32>(__builtin_popcountll(m));
            if (isz <= k - 1) js.structure.insert(rel_by_j[isz], tuple);
        } while (advance());
    }
    return js;
}

JohnsonInducedView::JohnsonInducedView(u32 k, std::vector<std::vector<u32>> elements)
    : k_(k), sig_(johnson_signature(k)), elements_(std::move(elements)) {
    for (const auto& r : sig_.relations()) {
        // names are "E_i_j"
        auto p1 = r.name.find('_');
        auto p2 = r.name.find('_', p1 + 1);
        rel_ij_.emplace_back(static_cast<u32>(std::stoul(r.name.substr(p1 + 1, p2 - p1 - 1))),
                             static_cast<u32>(std::stoul(r.name.substr(p2 + 1))));
    }
    u32 max_ground = 0;
    for (const auto& e : elements_) {
        if (e.size() != k_) throw InputError("JohnsonInducedView: element is not a k-subset");
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i > 0 && e[i] <= e[i - 1])
                throw InputError("JohnsonInducedView: elements must be sorted distinct");
            max_ground = std::max(max_ground, e[i] + 1);
        }
    }
    u32 chunks = (max_ground + 63) / 64;
    masks_.resize(elements_.size());
    for (std::size_t e = 0; e < elements_.size(); ++e) {
        masks_[e].assign(chunks, 0);
        for (u32 x : elements_[e]) masks_[e][x / 64] |= u64{1} << (x % 64);
    }
}

bool JohnsonInducedView::contains(std::size_t rel, std::span<const u32> tuple) const {
    auto [i, j] = rel_ij_[rel];
    if (tuple.size() != i) return false;
    for (u32 e : tuple)
        if (e >= masks_.size()) return false;
    std::vector<u64> acc = masks_[tuple[0]];
    for (std::size_t p = 1; p < tuple.size(); ++p)
        for (std::size_t c = 0; c < acc.size(); ++c) acc[c] &= masks_[tuple[p]][c];
    u32 isz = 0;
    for (u64 w : acc) isz += static_cast<u32>(__builtin_popcountll(w));
    return isz == j;
}

}  // namespace aritylab
