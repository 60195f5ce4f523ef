#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "strand/sequence.hpp"

namespace strand {

/// One start codon plus the three stop codons, all length 3 over ACGT.
class CodonTable {
public:
    CodonTable(std::string start, std::array<std::string, 3> stops)
        : start_(std::move(start)), stops_(std::move(stops)) {
        check_codon(start_);
        for (const auto& s : stops_) check_codon(s);
        for (std::size_t i = 0; i < stops_.size(); ++i) {
            if (stops_[i] == start_)
                throw std::invalid_argument("start codon equals a stop codon");
            for (std::size_t j = i + 1; j < stops_.size(); ++j)
                if (stops_[i] == stops_[j])
                    throw std::invalid_argument("duplicate stop codon");
        }
    }

    /// ATG / TAA, TAG, TGA — the RNA codons in DNA spelling.
    static const CodonTable& standard() {
        static const CodonTable table("ATG", {"TAA", "TAG", "TGA"});
        return table;
    }

    const std::string& start() const noexcept { return start_; }
    const std::array<std::string, 3>& stops() const noexcept { return stops_; }

    bool is_stop(std::string_view codon) const noexcept {
        return codon == stops_[0] || codon == stops_[1] || codon == stops_[2];
    }

private:
    static void check_codon(const std::string& c) {
        if (c.size() != 3) throw std::invalid_argument("codon must have length 3");
        for (char ch : c)
            if (base_code(ch) < 0) throw std::invalid_argument("codon must be ACGT");
    }

    std::string start_;
    std::array<std::string, 3> stops_;
};

}  // namespace strand
