#include "aritylab/indiscernible.hpp"

namespace aritylab {

IndiscernibilityResult is_qf_indiscernible(const StructureView& s,
                                           const std::vector<std::vector<u32>>& seq,
                                           std::span<const u32> over) {
    if (seq.size() < 2) throw InputError("is_qf_indiscernible: sequence length < 2");
    const std::size_t entry_len = seq[0].size();
    for (const auto& t : seq)
        if (t.size() != entry_len) throw InputError("is_qf_indiscernible: ragged tuple lengths");
    for (const auto& t : seq) s.check_tuple(t);
    s.check_tuple(over);

    const u32 n = static_cast<u32>(seq.size());
    std::vector<u32> ref_tuple, cur_tuple;
    auto build = [&](const std::vector<u32>& idx, std::vector<u32>& out) {
        out.clear();
        for (u32 i : idx)
            for (u32 e : seq[i]) out.push_back(e);
        for (u32 e : over) out.push_back(e);
    };

    for (u32 m = 1; m <= n; ++m) {
        std::vector<u32> ref_idx(m);
        for (u32 i = 0; i < m; ++i) ref_idx[i] = i;
        build(ref_idx, ref_tuple);

        std::vector<u32> idx = ref_idx;
        while (true) {
            // lex successor of the m-combination
            int i = static_cast<int>(m) - 1;
            while (i >= 0 && idx[static_cast<u32>(i)] == n - m + static_cast<u32>(i)) --i;
            if (i < 0) break;
            ++idx[static_cast<u32>(i)];
            for (u32 j = static_cast<u32>(i) + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;

            build(idx, cur_tuple);
            if (!qf_types_equal(s, ref_tuple, cur_tuple)) {
                // The reference is the lex-least m-subsequence, so the least
                // violating pair is (reference, first mismatch).
                IndiscernibilityResult r;
                r.yes = false;
                r.m = m;
                r.witness_a = ref_idx;
                r.witness_b = idx;
                return r;
            }
        }
    }
    return {};
}

}  // namespace aritylab
