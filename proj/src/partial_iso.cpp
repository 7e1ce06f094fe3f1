#include "aritylab/partial_iso.hpp"

#include <algorithm>
#include <unordered_map>

namespace aritylab {

namespace {

// Gaifman adjacency from materialized tables.
std::vector<std::vector<u32>> gaifman_adjacency(const Structure& s, u64 row_cap) {
    std::vector<std::vector<u32>> adj(s.universe_size());
    for (std::size_t rel = 0; rel < s.signature().size(); ++rel) {
        for (const auto& row : s.table(rel).sorted_tuples(row_cap)) {
            for (std::size_t i = 0; i < row.size(); ++i)
                for (std::size_t j = 0; j < row.size(); ++j)
                    if (row[i] != row[j]) adj[row[i]].push_back(row[j]);
        }
    }
    for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return adj;
}

// Ball around a tuple: union of radius-r balls around its entries, sorted by
// (BFS distance, element id).
std::vector<u32> ball(const std::vector<std::vector<u32>>& adj, std::span<const u32> seeds,
                      u32 radius, u64 cap) {
    std::unordered_map<u32, u32> dist;
    std::vector<u32> frontier;
    for (u32 e : seeds) {
        if (!dist.count(e)) {
            dist[e] = 0;
            frontier.push_back(e);
        }
    }
    for (u32 d = 1; d <= radius && !frontier.empty(); ++d) {
        std::vector<u32> next;
        for (u32 v : frontier)
            for (u32 w : adj[v])
                if (!dist.count(w)) {
                    dist[w] = d;
                    next.push_back(w);
                }
        frontier = std::move(next);
        if (dist.size() > cap)
            throw ResourceError("partial iso ball exceeds cap of " + std::to_string(cap) +
                                " elements");
    }
    std::vector<u32> out;
    out.reserve(dist.size());
    for (auto& [v, _] : dist) out.push_back(v);
    std::sort(out.begin(), out.end(), [&](u32 a, u32 b) {
        return std::pair(dist[a], a) < std::pair(dist[b], b);
    });
    return out;
}

struct Search {
    const Structure& s;
    std::vector<u32> order;              // src ball in extension order
    std::vector<u32> dst_ball;           // candidate images
    std::unordered_map<u32, u32> fwd;    // src -> dst
    std::unordered_map<u32, u32> bwd;    // dst -> src
    std::vector<u32> mapped_src;

    explicit Search(const Structure& st) : s(st) {}

    bool consistent_with(u32 v, u32 w) const {
        if (s.sort_of(v) != s.sort_of(w)) return false;
        // check every relation tuple over mapped domain that uses v
        std::vector<u32> dom = mapped_src;
        dom.push_back(v);
        std::vector<u32> ms, md;
        auto advance = [&](std::vector<u32>& f) {
            for (std::size_t i = f.size(); i-- > 0;) {
                if (++f[i] < dom.size()) return true;
                f[i] = 0;
            }
            return false;
        };
        for (std::size_t rel = 0; rel < s.signature().size(); ++rel) {
            const u32 r = s.signature().at(rel).arity;
            std::vector<u32> f(r, 0);
            ms.resize(r);
            md.resize(r);
            do {
                bool uses_v = false;
                for (u32 i = 0; i < r; ++i)
                    if (dom[f[i]] == v) uses_v = true;
                if (uses_v) {
                    for (u32 i = 0; i < r; ++i) {
                        u32 sv = dom[f[i]];
                        ms[i] = sv;
                        md[i] = (sv == v) ? w : fwd.at(sv);
                    }
                    if (s.contains(rel, ms) != s.contains(rel, md)) return false;
                }
            } while (advance(f));
        }
        return true;
    }

    bool extend(std::size_t pos) {
        if (pos == order.size()) return true;
        u32 v = order[pos];
        if (fwd.count(v)) return extend(pos + 1);
        for (u32 w : dst_ball) {
            if (bwd.count(w)) continue;
            if (!consistent_with(v, w)) continue;
            fwd[v] = w;
            bwd[w] = v;
            mapped_src.push_back(v);
            if (extend(pos + 1)) return true;
            mapped_src.pop_back();
            fwd.erase(v);
            bwd.erase(w);
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<std::pair<u32, u32>>> find_partial_iso(
    const Structure& s, std::span<const u32> src, std::span<const u32> dst, u32 radius,
    const PartialIsoOptions& opts) {
    if (src.size() != dst.size()) throw InputError("find_partial_iso: |src| != |dst|");
    s.check_tuple(src);
    s.check_tuple(dst);

    auto adj = gaifman_adjacency(s, opts.adjacency_row_cap);
    Search search(s);
    search.order = ball(adj, src, radius, opts.max_ball_size);
    search.dst_ball = ball(adj, dst, radius, opts.max_ball_size);
    std::sort(search.dst_ball.begin(), search.dst_ball.end());
    if (search.order.size() != search.dst_ball.size()) return std::nullopt;

    // seed the forced entry mapping
    for (std::size_t i = 0; i < src.size(); ++i) {
        u32 v = src[i], w = dst[i];
        auto it = search.fwd.find(v);
        if (it != search.fwd.end()) {
            if (it->second != w) return std::nullopt;
            continue;
        }
        auto jt = search.bwd.find(w);
        if (jt != search.bwd.end()) return std::nullopt;
        if (!search.consistent_with(v, w)) return std::nullopt;
        search.fwd[v] = w;
        search.bwd[w] = v;
        search.mapped_src.push_back(v);
    }

    if (!search.extend(0)) return std::nullopt;

    std::vector<std::pair<u32, u32>> out;
    out.reserve(search.fwd.size());
    for (auto& [v, w] : search.fwd) out.emplace_back(v, w);
    std::sort(out.begin(), out.end());

    if (!qf_types_equal(s, src, dst))
        throw InternalError("find_partial_iso succeeded but qf types differ");
    return out;
}

}  // namespace aritylab
