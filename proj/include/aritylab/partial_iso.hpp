#pragma once

#include <optional>

#include "aritylab/qftype.hpp"

namespace aritylab {

// Bijection between the radius-r Gaifman neighborhoods of src and dst that
// extends src -> dst and preserves all relations both ways, found by
// backtracking with canonical candidate order.  Returns std::nullopt when the
// search exhausts.  Successful results always satisfy
// qf_type(src) == qf_type(dst); this is asserted.
struct PartialIsoOptions {
    u64 max_ball_size = 4096;
    u64 adjacency_row_cap = 2'000'000;
};

std::optional<std::vector<std::pair<u32, u32>>> find_partial_iso(
    const Structure& s, std::span<const u32> src, std::span<const u32> dst, u32 radius,
    const PartialIsoOptions& opts = {});

}  // namespace aritylab
