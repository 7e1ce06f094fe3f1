#pragma once

#include <array>
#include <map>

#include "aritylab/generators.hpp"

namespace aritylab {

// ---------------------------------------------------------------------------
// The pair-of-pairs permutation structure: elements are {{a,b},{c,d}} with
// a,b,c,d distinct ground points.  The symmetric group on the ground set acts
// on elements and tuples; tuples carry one canonical orbit code per
// isomorphism class of their labelled support.

// Normalized: first pair sorted, second pair sorted, pairs in lex order.
struct CLElement {
    std::array<u32, 4> pts;  // a < b, c < d, (a,b) <= (c,d)

    static CLElement make(u32 a, u32 b, u32 c, u32 d);
    auto operator<=>(const CLElement&) const = default;
};

// All elements over ground set [n], sorted; n >= 4.
std::vector<CLElement> cl_universe(u32 n);

// Canonical orbit code: the lexicographically least serialization of the
// tuple over all bijective relabelings of its support.  Two tuples receive
// equal codes iff some ground-set permutation maps one to the other
// entrywise.
struct OrbitCode {
    u32 arity = 0;
    u32 support = 0;
    std::vector<u32> data;  // 4 values per entry, relabeled support points

    auto operator<=>(const OrbitCode&) const = default;
    std::string text() const;
    std::string digest() const;
};

OrbitCode cl_orbit_code(const std::vector<CLElement>& tuple);

// Image of an element / tuple under a ground-set permutation.
CLElement cl_apply(const Perm& p, const CLElement& e);
std::vector<CLElement> cl_apply(const Perm& p, const std::vector<CLElement>& t);

// Brute-force oracle: some permutation of [n] maps t1 to t2 entrywise.
bool cl_orbit_equal_bruteforce(u32 n, const std::vector<CLElement>& t1,
                               const std::vector<CLElement>& t2);

// ---------------------------------------------------------------------------
struct CLCaps {
    u64 max_universe = 5000;
    u64 max_code_evaluations = 20'000'000;
};

class CLStructure {
public:
    CLStructure(u32 n, u32 max_arity, CLCaps caps = {});

    u32 n() const { return n_; }
    u32 max_arity() const { return max_arity_; }
    const std::vector<CLElement>& elements() const { return elements_; }
    u32 index_of(const CLElement& e) const;

    // Canonical orbit code of a tuple of universe indices.
    OrbitCode orbit_code(std::span<const u32> tuple) const;
    bool orbit_equal(std::span<const u32> t1, std::span<const u32> t2) const;

    // Census of orbit codes at a given arity (code -> representative tuple),
    // enumerating all |M|^m tuples; guarded by the evaluation cap.
    std::map<OrbitCode, std::vector<u32>> orbit_census(u32 arity) const;

    // Materialized structure whose relations are the orbit codes of every
    // arity m <= max_arity; relation names carry the code digest.
    Structure materialize() const;

private:
    u32 n_;
    u32 max_arity_;
    CLCaps caps_;
    std::vector<CLElement> elements_;
};

// Relation name for an orbit code.
std::string cl_relation_name(const OrbitCode& code);

// Induced orbit-relation structure on an explicit list of elements: one
// relation per orbit code occurring among tuples (arity <= max_arity) of the
// given elements.  Universe i corresponds to elements[i].
Structure cl_induced_structure(u32 n, const std::vector<CLElement>& elements, u32 max_arity);

}  // namespace aritylab
