#pragma once

#include <memory>

#include "aritylab/clorbits.hpp"
#include "aritylab/generators.hpp"
#include "aritylab/qftype.hpp"
#include "aritylab/symmetry.hpp"

namespace aritylab {

// ---------------------------------------------------------------------------
// Arity witnesses: two same-length tuples with equal sub-arity type data but
// distinct full qf types.

struct Witness {
    std::string structure_digest;
    std::vector<u32> t1, t2;
    ProfileMode mode = ProfileMode::drop_one;
    u32 k = 0;  // meaningful in up_to_k mode
    std::string profile_digest;
    std::string type1_digest, type2_digest;
    std::string symmetry_used;  // group declared during the search ("" if canned)
};

enum class SearchOutcome { witness_found, exhausted_no_witness, budget_exhausted };

// The transfer proviso included verbatim in every search report.
extern const char* kWitnessProviso;

struct WitnessSearchResult {
    SearchOutcome outcome = SearchOutcome::budget_exhausted;
    std::optional<Witness> witness;
    u64 tuples_examined = 0;
    u64 group_order = 1;
    std::string symmetry;
    std::string proviso = kWitnessProviso;
};

// Enumerates l-tuples up to the declared symmetry group, grouped by profile
// digest (hash-bucket join); two bucket members with distinct full types form
// a witness.  budget = 0 means unlimited (exhaustive verdicts possible).
WitnessSearchResult arity_witness_search(const StructureView& s, u32 l, ProfileMode mode, u32 k,
                                         const SymmetryGroup& sym, u64 budget = 0);

struct WitnessReport {
    bool pass = false;
    bool profiles_equal = false;
    bool types_differ = false;
    u64 atoms_compared = 0;
    std::vector<std::string> transcript;
};

// Recomputes both profiles and both full types from scratch; pass iff
// profiles equal and types differ.  Throws InputError if the witness's
// structure digest does not match s (stale witness).
WitnessReport verify_witness(const StructureView& s, const Witness& w,
                             std::size_t transcript_atom_cap = 4096);

// ---------------------------------------------------------------------------
// Canned witnesses for the example families.  The returned view owns the
// structure the witness lives in.

struct CannedWitness {
    std::shared_ptr<StructureView> view;
    Witness witness;
    std::string family;
    std::string note;  // e.g. radius information for pseudoplane witnesses
};

CannedWitness canned_witness_johnson2();
CannedWitness canned_witness_kaygraph(u32 k);
CannedWitness canned_witness_cherlin_lachlan(u32 k);
// goode(n) lives in pseudoplane.hpp (needs fragment machinery).

// Cherlin-Lachlan cycle tuples over 2(k+1) ground points: the k+1 cycle
// elements and the twisted last element.
struct CLCycleTuples {
    u32 n = 0;
    std::vector<CLElement> cycle;    // m_1 .. m_{k+1}
    std::vector<CLElement> twisted;  // m_1 .. m_k, m'_{k+1}
};
CLCycleTuples cl_cycle_tuples(u32 k);

}  // namespace aritylab
