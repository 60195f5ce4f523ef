#pragma once

#include <array>
#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace strand {

// DNA alphabet, fixed code map A=0 C=1 G=2 T=3.
inline constexpr std::array<char, 4> alphabet{'A', 'C', 'G', 'T'};

constexpr int base_code(char c) noexcept {
    switch (c) {
        case 'A': return 0;
        case 'C': return 1;
        case 'G': return 2;
        case 'T': return 3;
        default: return -1;
    }
}

constexpr char base_char(unsigned code) noexcept {
    return alphabet[code & 3u];
}

/// Raised when input contains a character outside {A,C,G,T,U} after
/// uppercasing. Carries the offending position and character.
class invalid_symbol : public std::runtime_error {
public:
    invalid_symbol(std::size_t position, char symbol)
        : std::runtime_error("invalid symbol '" + std::string(1, symbol) +
                             "' at position " + std::to_string(position)),
          position_(position),
          symbol_(symbol) {}

    std::size_t position() const noexcept { return position_; }
    char symbol() const noexcept { return symbol_; }

private:
    std::size_t position_;
    char symbol_;
};

/// A validated DNA string: every character is one of A,C,G,T. The empty
/// sequence is valid and stands for "nothing assembled yet". Immutable
/// after construction.
class Sequence {
public:
    Sequence() = default;

    /// Wraps a string that is already known to be pure ACGT (asserted in
    /// debug builds). Use normalize() for untrusted input.
    static Sequence from_valid(std::string bases) {
#ifndef NDEBUG
        for (char c : bases) assert(base_code(c) >= 0);
#endif
        return Sequence(std::move(bases));
    }

    const std::string& str() const noexcept { return bases_; }
    std::string_view view() const noexcept { return bases_; }
    std::size_t size() const noexcept { return bases_.size(); }
    bool empty() const noexcept { return bases_.empty(); }
    char operator[](std::size_t i) const noexcept { return bases_[i]; }

    Sequence subseq(std::size_t pos, std::size_t len) const {
        return Sequence(bases_.substr(pos, len));
    }

    friend bool operator==(const Sequence&, const Sequence&) = default;
    friend auto operator<=>(const Sequence&, const Sequence&) = default;

private:
    explicit Sequence(std::string b) : bases_(std::move(b)) {}
    std::string bases_;
};

/// Uppercases raw input, maps U to T (RNA codons become their DNA
/// spelling) and validates the result. Throws invalid_symbol at the first
/// offending character, 0-based position.
inline Sequence normalize(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        char c = raw[i];
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
        if (c == 'U') c = 'T';
        if (base_code(c) < 0) throw invalid_symbol(i, raw[i]);
        out.push_back(c);
    }
    return Sequence::from_valid(std::move(out));
}

}  // namespace strand
