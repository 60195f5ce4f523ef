#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "strand/codon.hpp"
#include "strand/sequence.hpp"

namespace strand {

class empty_pattern : public std::invalid_argument {
public:
    empty_pattern() : std::invalid_argument("search pattern is empty") {}
};

struct MatchReport {
    std::vector<std::size_t> occurrences;  // sorted start indices
    std::uint64_t comparisons = 0;         // character-pair tests performed
};

/// A preprocessed Boyer-Moore pattern: rightmost-occurrence table for the
/// bad-character rule and the strong good-suffix shift table. Both depend
/// only on the pattern; preprocessing is O(m + alphabet). Immutable after
/// construction, safe to share across threads.
class Pattern {
public:
    explicit Pattern(Sequence bases) : bases_(std::move(bases)) {
        if (bases_.empty()) throw empty_pattern();
        last_occurrence_.fill(-1);
        for (std::size_t i = 0; i < bases_.size(); ++i)
            last_occurrence_[static_cast<std::size_t>(base_code(bases_[i]))] =
                static_cast<std::ptrdiff_t>(i);
        build_good_suffix();
    }

    const Sequence& bases() const noexcept { return bases_; }
    std::size_t size() const noexcept { return bases_.size(); }

    /// Rightmost index of each symbol in the pattern, -1 when absent.
    const std::array<std::ptrdiff_t, 4>& last_occurrence() const noexcept {
        return last_occurrence_;
    }

    /// good_suffix()[j] is the shift when the suffix starting at j has
    /// matched; good_suffix()[0] is the period shift after a full match.
    const std::vector<std::size_t>& good_suffix() const noexcept { return good_suffix_; }

private:
    void build_good_suffix() {
        const std::size_t m = bases_.size();
        std::vector<std::size_t> border(m + 1, 0);
        good_suffix_.assign(m + 1, 0);
        std::size_t i = m, j = m + 1;
        border[m] = j;
        while (i > 0) {
            while (j <= m && bases_[i - 1] != bases_[j - 1]) {
                if (good_suffix_[j] == 0) good_suffix_[j] = j - i;
                j = border[j];
            }
            --i;
            --j;
            border[i] = j;
        }
        j = border[0];
        for (i = 0; i <= m; ++i) {
            if (good_suffix_[i] == 0) good_suffix_[i] = j;
            if (i == j) j = border[j];
        }
    }

    Sequence bases_;
    std::array<std::ptrdiff_t, 4> last_occurrence_{};
    std::vector<std::size_t> good_suffix_;
};

/// Boyer-Moore search reporting every occurrence, overlapping ones
/// included. The shift is the max of the bad-character and good-suffix
/// rules; after a full match the good-suffix period shift applies, so
/// overlapping matches are not skipped. Every character-pair test is
/// counted once.
inline MatchReport bm_search(const Sequence& text, const Pattern& pattern) {
    MatchReport report;
    const std::size_t n = text.size();
    const std::size_t m = pattern.size();
    if (m > n) return report;
    const Sequence& p = pattern.bases();
    const auto& last = pattern.last_occurrence();
    const auto& gs = pattern.good_suffix();
    std::size_t s = 0;
    while (s <= n - m) {
        std::ptrdiff_t j = static_cast<std::ptrdiff_t>(m) - 1;
        while (j >= 0) {
            ++report.comparisons;
            if (p[static_cast<std::size_t>(j)] != text[s + static_cast<std::size_t>(j)]) break;
            --j;
        }
        if (j < 0) {
            report.occurrences.push_back(s);
            s += gs[0];
        } else {
            const std::size_t ju = static_cast<std::size_t>(j);
            const std::ptrdiff_t bc =
                j - last[static_cast<std::size_t>(base_code(text[s + ju]))];
            std::size_t shift = gs[ju + 1];
            if (bc > static_cast<std::ptrdiff_t>(shift)) shift = static_cast<std::size_t>(bc);
            s += shift;
        }
    }
    return report;
}

/// Brute-force window scan; the oracle and baseline for bm_search.
inline MatchReport naive_search(const Sequence& text, const Sequence& pattern) {
    if (pattern.empty()) throw empty_pattern();
    MatchReport report;
    const std::size_t n = text.size();
    const std::size_t m = pattern.size();
    if (m > n) return report;
    for (std::size_t i = 0; i + m <= n; ++i) {
        std::size_t j = 0;
        while (j < m) {
            ++report.comparisons;
            if (text[i + j] != pattern[j]) break;
            ++j;
        }
        if (j == m) report.occurrences.push_back(i);
    }
    return report;
}

struct CodonHits {
    std::vector<std::size_t> starts;  // occurrences of the start codon
    std::vector<std::size_t> stops;   // merged occurrences of all stop codons
};

/// Preprocessed patterns for one codon table, reusable across many scans.
struct CodonPatterns {
    explicit CodonPatterns(const CodonTable& table)
        : start(Sequence::from_valid(table.start())),
          stops{Pattern(Sequence::from_valid(table.stops()[0])),
                Pattern(Sequence::from_valid(table.stops()[1])),
                Pattern(Sequence::from_valid(table.stops()[2]))} {}

    Pattern start;
    std::array<Pattern, 3> stops;
};

/// Boyer-Moore passes for the start codon and each stop codon; stop hits
/// are merged into one sorted list. The codon at any reported index is
/// text[i..i+3).
inline CodonHits find_all_codons(const Sequence& text, const CodonPatterns& patterns) {
    CodonHits hits;
    hits.starts = bm_search(text, patterns.start).occurrences;
    for (const Pattern& stop : patterns.stops) {
        auto occ = bm_search(text, stop).occurrences;
        hits.stops.insert(hits.stops.end(), occ.begin(), occ.end());
    }
    std::sort(hits.stops.begin(), hits.stops.end());
    return hits;
}

inline CodonHits find_all_codons(const Sequence& text, const CodonTable& table) {
    return find_all_codons(text, CodonPatterns(table));
}

}  // namespace strand
