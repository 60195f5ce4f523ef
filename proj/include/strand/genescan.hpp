#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <iterator>
#include <tuple>
#include <vector>

#include "strand/boyer_moore.hpp"
#include "strand/codon.hpp"
#include "strand/sequence.hpp"

namespace strand {

/// A located ORF: [start, end) begins with the start codon and ends with
/// the first in-frame stop codon, so (end - start) % 3 == 0 and
/// end - start >= 6.
struct Gene {
    std::size_t start = 0;
    std::size_t end = 0;
    Sequence bases;

    friend bool operator==(const Gene&, const Gene&) = default;
};

/// Genes sorted by start, pairwise disjoint.
using GeneSet = std::vector<Gene>;

struct GeneSetDiff {
    std::vector<Gene> added;
    std::vector<Gene> removed;
};

/// Greedy leftmost extraction: from a moving cursor, take the leftmost
/// start codon, pair it with the nearest in-frame stop, emit, and resume
/// past the stop. A start with no in-frame stop downstream is skipped.
inline GeneSet scan_genes(const Sequence& text, const CodonPatterns& patterns) {
    GeneSet genes;
    const std::vector<std::size_t> starts = bm_search(text, patterns.start).occurrences;
    if (starts.empty()) return genes;  // no start, no stop search needed

    // stop occurrences by index mod 3; in-frame lookups become a binary
    // search in the right residue class
    std::array<std::vector<std::size_t>, 3> stops_by_frame;
    for (const Pattern& stop : patterns.stops)
        for (std::size_t t : bm_search(text, stop).occurrences)
            stops_by_frame[t % 3].push_back(t);
    for (auto& frame : stops_by_frame) std::sort(frame.begin(), frame.end());

    std::size_t cursor = 0;
    for (std::size_t s : starts) {
        if (s < cursor) continue;
        const auto& frame = stops_by_frame[s % 3];
        auto it = std::lower_bound(frame.begin(), frame.end(), s + 3);
        if (it == frame.end()) continue;  // no in-frame stop: skip this start
        const std::size_t t = *it;
        genes.push_back(Gene{s, t + 3, text.subseq(s, t + 3 - s)});
        cursor = t + 3;
    }
    return genes;
}

inline GeneSet scan_genes(const Sequence& text, const CodonTable& table) {
    return scan_genes(text, CodonPatterns(table));
}

/// Set difference by (start, end, bases) identity.
inline GeneSetDiff diff(const GeneSet& old_set, const GeneSet& new_set) {
    auto key_less = [](const Gene& a, const Gene& b) {
        return std::tie(a.start, a.end, a.bases) < std::tie(b.start, b.end, b.bases);
    };
    GeneSet old_sorted = old_set;
    GeneSet new_sorted = new_set;
    std::sort(old_sorted.begin(), old_sorted.end(), key_less);
    std::sort(new_sorted.begin(), new_sorted.end(), key_less);
    GeneSetDiff d;
    std::set_difference(new_sorted.begin(), new_sorted.end(), old_sorted.begin(),
                        old_sorted.end(), std::back_inserter(d.added), key_less);
    std::set_difference(old_sorted.begin(), old_sorted.end(), new_sorted.begin(),
                        new_sorted.end(), std::back_inserter(d.removed), key_less);
    return d;
}

}  // namespace strand
