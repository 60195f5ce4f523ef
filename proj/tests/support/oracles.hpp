#pragma once

// Independent reference implementations used only by tests. They share
// domain types with the library but none of its search or assembly code
// paths.

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "strand/codon.hpp"
#include "strand/genescan.hpp"
#include "strand/sequence.hpp"

namespace testsupport {

/// Gene extraction by direct codon-grid walk: linear character scans for
/// the next start, then a stride-3 walk for the nearest in-frame stop. No
/// Boyer-Moore, no occurrence lists.
inline strand::GeneSet scan_genes_oracle(const strand::Sequence& text,
                                         const strand::CodonTable& table) {
    strand::GeneSet genes;
    const std::string& s = text.str();
    std::size_t p = 0;
    for (;;) {
        std::size_t start = std::string::npos;
        for (std::size_t i = p; i + 3 <= s.size(); ++i) {
            if (s.compare(i, 3, table.start()) == 0) {
                start = i;
                break;
            }
        }
        if (start == std::string::npos) break;
        std::size_t stop = std::string::npos;
        for (std::size_t t = start + 3; t + 3 <= s.size(); t += 3) {
            if (table.is_stop(std::string_view(s).substr(t, 3))) {
                stop = t;
                break;
            }
        }
        if (stop == std::string::npos) {
            p = start + 1;
            continue;
        }
        genes.push_back(strand::Gene{start, stop + 3, text.subseq(start, stop + 3 - start)});
        p = stop + 3;
    }
    return genes;
}

/// Longest suffix/prefix overlap by naive comparison, independent of the
/// library's overlap routine.
inline std::size_t overlap_oracle(const std::string& a, const std::string& b) {
    for (std::size_t w = std::min(a.size(), b.size()); w >= 1; --w) {
        bool ok = true;
        for (std::size_t i = 0; i < w && ok; ++i)
            ok = a[a.size() - w + i] == b[i];
        if (ok) return w;
    }
    return 0;
}

/// Exhaustive-permutation shortest common superstring for small inputs.
/// Returns the minimum-length merge, lexicographically smallest on ties.
inline std::string brute_superstring(std::vector<std::string> segments) {
    std::erase_if(segments, [](const std::string& s) { return s.empty(); });
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < segments.size() && !drop; ++j) {
            if (i == j) continue;
            if (segments[i] == segments[j])
                drop = j < i;
            else if (segments[j].find(segments[i]) != std::string::npos)
                drop = true;
        }
        if (!drop) kept.push_back(segments[i]);
    }
    if (kept.empty()) return "";
    std::sort(kept.begin(), kept.end());
    std::string best;
    do {
        std::string merged = kept[0];
        for (std::size_t i = 1; i < kept.size(); ++i) {
            const std::size_t w = overlap_oracle(merged, kept[i]);
            merged += kept[i].substr(w);
        }
        if (best.empty() || merged.size() < best.size() ||
            (merged.size() == best.size() && merged < best))
            best = merged;
    } while (std::next_permutation(kept.begin(), kept.end()));
    return best;
}

}  // namespace testsupport
