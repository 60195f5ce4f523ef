#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "strand/sequence.hpp"

namespace strand {

/// k-mers longer than 31 bases do not fit a 64-bit word at 2 bits/base.
class k_too_large : public std::invalid_argument {
public:
    explicit k_too_large(unsigned k)
        : std::invalid_argument("k = " + std::to_string(k) +
                                " exceeds the 31-base packing limit"),
          k_(k) {}
    unsigned k() const noexcept { return k_; }

private:
    unsigned k_;
};

inline constexpr unsigned max_k = 31;

constexpr std::uint64_t kmer_mask(unsigned k) noexcept {
    return (k == 0) ? 0 : (~std::uint64_t{0} >> (64 - 2 * k));
}

/// Fixed-length nucleotide word packed 2 bits/base, most-significant base
/// first. Equality is (k, code) equality.
struct Kmer {
    unsigned k = 0;
    std::uint64_t code = 0;

    friend bool operator==(const Kmer&, const Kmer&) = default;

    std::string str() const {
        std::string s(k, 'A');
        std::uint64_t c = code;
        for (unsigned i = k; i-- > 0;) {
            s[i] = base_char(static_cast<unsigned>(c & 3u));
            c >>= 2;
        }
        return s;
    }
};

/// Packs a slice of 1..31 bases. Throws k_too_large above 31 and
/// invalid_symbol on non-ACGT characters; an empty slice is rejected.
inline Kmer encode_kmer(std::string_view s) {
    if (s.size() > max_k) throw k_too_large(static_cast<unsigned>(s.size()));
    if (s.empty()) throw std::invalid_argument("cannot encode an empty k-mer");
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        int b = base_code(s[i]);
        if (b < 0) throw invalid_symbol(i, s[i]);
        code = (code << 2) | static_cast<std::uint64_t>(b);
    }
    return Kmer{static_cast<unsigned>(s.size()), code};
}

inline std::string decode_kmer(const Kmer& km) { return km.str(); }

/// All consecutive k-mers of s in order, computed with a rolling code.
/// k must be at least 2; a sequence shorter than k yields an empty list.
inline std::vector<Kmer> kmers_of(const Sequence& s, unsigned k) {
    if (k < 2) throw std::invalid_argument("kmers_of requires k >= 2");
    if (k > max_k) throw k_too_large(k);
    std::vector<Kmer> out;
    if (s.size() < k) return out;
    out.reserve(s.size() - k + 1);
    const std::uint64_t mask = kmer_mask(k);
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        code = ((code << 2) | static_cast<std::uint64_t>(base_code(s[i]))) & mask;
        if (i + 1 >= k) out.push_back(Kmer{k, code});
    }
    return out;
}

}  // namespace strand
