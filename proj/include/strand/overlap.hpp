#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "strand/sequence.hpp"

namespace strand {

inline constexpr std::size_t oracle_segment_limit = 12;

class too_many_segments : public std::invalid_argument {
public:
    too_many_segments(std::size_t count, std::size_t limit)
        : std::invalid_argument("got " + std::to_string(count) +
                                " segments, the exact oracle handles at most " +
                                std::to_string(limit)),
          count_(count),
          limit_(limit) {}
    std::size_t count() const noexcept { return count_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t count_;
    std::size_t limit_;
};

/// Longest w >= 1 with suffix_w(a) == prefix_w(b), by direct comparison.
inline std::size_t max_overlap(const Sequence& a, const Sequence& b) {
    const std::size_t cap = std::min(a.size(), b.size());
    for (std::size_t w = cap; w >= 1; --w) {
        if (std::string_view(a.str()).substr(a.size() - w) ==
            std::string_view(b.str()).substr(0, w))
            return w;
    }
    return 0;
}

struct OverlapEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t overlap = 0;
};

/// Directed graph of segments; an edge records the maximal suffix/prefix
/// overlap for its ordered pair. Self-edges and zero overlaps are omitted.
struct OverlapGraph {
    std::vector<Sequence> nodes;
    std::vector<OverlapEdge> edges;
};

inline OverlapGraph build_overlap_graph(const std::vector<Sequence>& segments) {
    if (segments.size() > oracle_segment_limit)
        throw too_many_segments(segments.size(), oracle_segment_limit);
    OverlapGraph g;
    g.nodes = segments;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        for (std::size_t j = 0; j < segments.size(); ++j) {
            if (i == j) continue;
            const std::size_t w = max_overlap(segments[i], segments[j]);
            if (w >= 1) g.edges.push_back(OverlapEdge{i, j, w});
        }
    }
    return g;
}

/// Exact shortest common superstring by Held-Karp over the overlap graph:
/// maximizing total pairwise overlap minimizes the merged length.
/// Duplicates and segments contained in another are dropped first. Among
/// orderings of maximal overlap the reconstruction prefers, step by step,
/// the lexicographically smallest appended piece.
inline Sequence superstring_oracle(const std::vector<Sequence>& segments) {
    if (segments.size() > oracle_segment_limit)
        throw too_many_segments(segments.size(), oracle_segment_limit);

    // drop duplicates and contained segments
    std::vector<Sequence> kept;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (segments[i].empty()) continue;
        bool drop = false;
        for (std::size_t j = 0; j < segments.size() && !drop; ++j) {
            if (i == j) continue;
            if (segments[i] == segments[j]) {
                drop = j < i;  // keep the first copy
            } else if (segments[j].str().find(segments[i].str()) != std::string::npos) {
                drop = true;
            }
        }
        if (!drop) kept.push_back(segments[i]);
    }
    if (kept.empty()) return Sequence();
    const std::size_t n = kept.size();
    if (n == 1) return kept[0];

    std::vector<std::vector<std::size_t>> ov(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) ov[i][j] = max_overlap(kept[i], kept[j]);

    // best[mask][last]: max overlap gained arranging the complement of
    // mask after segment `last` (mask already includes last)
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<std::vector<std::int64_t>> best(full + 1, std::vector<std::int64_t>(n, -1));
    for (std::size_t v = 0; v < n; ++v) best[full][v] = 0;
    for (std::size_t mask = full; mask-- > 0;) {
        for (std::size_t last = 0; last < n; ++last) {
            if (!(mask >> last & 1u)) continue;
            std::int64_t b = -1;
            for (std::size_t v = 0; v < n; ++v) {
                if (mask >> v & 1u) continue;
                const std::int64_t cand =
                    static_cast<std::int64_t>(ov[last][v]) + best[mask | std::size_t{1} << v][v];
                b = std::max(b, cand);
            }
            best[mask][last] = b;
        }
    }

    std::int64_t optimum = -1;
    for (std::size_t f = 0; f < n; ++f)
        optimum = std::max(optimum, best[std::size_t{1} << f][f]);

    // reconstruct: among optimal firsts pick the lex-smallest segment,
    // then at each step the lex-smallest appended piece
    std::size_t first = n;
    for (std::size_t f = 0; f < n; ++f) {
        if (best[std::size_t{1} << f][f] != optimum) continue;
        if (first == n || kept[f].str() < kept[first].str()) first = f;
    }
    std::string merged = kept[first].str();
    std::size_t mask = std::size_t{1} << first;
    std::size_t last = first;
    while (mask != full) {
        std::size_t next = n;
        std::string next_piece;
        for (std::size_t v = 0; v < n; ++v) {
            if (mask >> v & 1u) continue;
            if (static_cast<std::int64_t>(ov[last][v]) + best[mask | std::size_t{1} << v][v] !=
                best[mask][last])
                continue;
            std::string piece = kept[v].str().substr(ov[last][v]);
            if (next == n || piece < next_piece) {
                next = v;
                next_piece = std::move(piece);
            }
        }
        merged += next_piece;
        mask |= std::size_t{1} << next;
        last = next;
    }
    return Sequence::from_valid(std::move(merged));
}

}  // namespace strand
