#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace strand {

class fasta_error : public std::runtime_error {
public:
    fasta_error(std::size_t line, const std::string& what)
        : std::runtime_error("FASTA line " + std::to_string(line) + ": " + what),
          line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct FastaRecord {
    std::string id;        // header token up to the first whitespace
    std::string sequence;  // raw concatenated sequence lines, unvalidated
};

/// Streaming record-by-record FASTA reader. Blank lines are skipped,
/// trailing carriage returns stripped; any content before the first
/// header is malformed.
class FastaReader {
public:
    explicit FastaReader(std::istream& in) : in_(in) {}

    std::optional<FastaRecord> next() {
        std::string line;
        if (!pending_) {
            while (std::getline(in_, line)) {
                ++line_no_;
                chomp(line);
                if (line.empty()) continue;
                if (line[0] != '>')
                    throw fasta_error(line_no_, "expected '>' header, got sequence data");
                pending_ = line;
                break;
            }
            if (!pending_) return std::nullopt;
        }
        FastaRecord rec;
        rec.id = header_id(*pending_);
        pending_.reset();
        while (std::getline(in_, line)) {
            ++line_no_;
            chomp(line);
            if (line.empty()) continue;
            if (line[0] == '>') {
                pending_ = line;
                break;
            }
            rec.sequence += line;
        }
        return rec;
    }

private:
    static void chomp(std::string& line) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
    }

    static std::string header_id(const std::string& header) {
        std::size_t end = header.find_first_of(" \t", 1);
        if (end == std::string::npos) end = header.size();
        return header.substr(1, end - 1);
    }

    std::istream& in_;
    std::optional<std::string> pending_;
    std::size_t line_no_ = 0;
};

inline void write_fasta(std::ostream& os, std::string_view id, std::string_view sequence,
                        std::size_t width = 80) {
    os << '>' << id << '\n';
    for (std::size_t pos = 0; pos < sequence.size(); pos += width)
        os << sequence.substr(pos, width) << '\n';
}

}  // namespace strand
