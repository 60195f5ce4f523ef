#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "strand/codon.hpp"
#include "strand/genescan.hpp"
#include "strand/sequence.hpp"

namespace strand {

class unsatisfiable_spec : public std::runtime_error {
public:
    explicit unsatisfiable_spec(const std::string& why)
        : std::runtime_error("unsatisfiable simulation spec: " + why) {}
};

struct SimSpec {
    std::uint64_t seed = 0;
    std::size_t length = 0;          // reference length in bases
    std::size_t gene_count = 0;      // scanner-detectable genes to embed
    std::size_t read_len_min = 30;
    std::size_t read_len_max = 99;   // stays below 100
    std::size_t min_overlap = 20;    // consecutive reads share at least this
    bool shuffle = true;
};

struct SimResult {
    Sequence reference;
    std::vector<Sequence> reads;
    GeneSet truth;  // scan_genes of the reference, verified against gene_count
};

namespace detail {

/// Emits random bases that never complete an ATG triple, carrying context
/// across junctions so gene starts appear only where cassettes put them.
class SpacerWriter {
public:
    explicit SpacerWriter(std::mt19937_64& rng) : rng_(rng) {}

    void sync(const std::string& text) {
        tail_ = text.size() >= 2 ? text.substr(text.size() - 2) : text;
    }

    void emit(std::string& out, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) {
            char c;
            do {
                c = base_char(static_cast<unsigned>(rng_() & 3u));
            } while (c == 'G' && tail_ == "AT");
            out.push_back(c);
            tail_.push_back(c);
            if (tail_.size() > 2) tail_.erase(0, 1);
        }
    }

private:
    std::mt19937_64& rng_;
    std::string tail_;
};

}  // namespace detail

/// Builds a random reference of exactly spec.length bases containing
/// exactly spec.gene_count scanner-detectable genes (start codon, in-frame
/// stop-free body, stop codon, separated by start-free spacers), verifies
/// it with scan_genes, then fragments it into overlapping windows covering
/// every position. Fully deterministic per seed.
inline SimResult simulate(const SimSpec& spec) {
    if (spec.read_len_min < 1 || spec.read_len_min > spec.read_len_max)
        throw std::invalid_argument("read length range is empty");
    if (spec.read_len_max > 99)
        throw std::invalid_argument("read length must stay below 100");
    if (spec.min_overlap >= spec.read_len_min)
        throw std::invalid_argument("min_overlap must be smaller than the shortest read");
    if (spec.length < 6 * spec.gene_count)
        throw unsatisfiable_spec(std::to_string(spec.gene_count) + " genes need at least " +
                                 std::to_string(6 * spec.gene_count) + " bases, have " +
                                 std::to_string(spec.length));

    std::mt19937_64 rng(spec.seed);
    const CodonTable& table = CodonTable::standard();

    // the 61 sense codons, enumerated in fixed order
    std::vector<std::string> sense;
    for (unsigned c = 0; c < 64; ++c) {
        std::string codon{base_char(c >> 4), base_char((c >> 2) & 3u), base_char(c & 3u)};
        if (!table.is_stop(codon)) sense.push_back(std::move(codon));
    }
    std::uniform_int_distribution<std::size_t> pick_sense(0, sense.size() - 1);

    SimResult result;
    const std::size_t total = spec.length;
    const std::size_t genes = spec.gene_count;

    for (int attempt = 0; attempt < 64; ++attempt) {
        std::string ref;
        ref.reserve(total);
        detail::SpacerWriter spacer(rng);

        std::size_t extra = total - 6 * genes;
        // genes get at least six body codons when space allows; a gene
        // shorter than a k-mer could otherwise sit wholly inside the
        // positional overlap of two not-yet-joined contigs and be counted
        // twice mid-stream
        std::size_t body_floor = 0;
        if (genes > 0) {
            body_floor = std::min<std::size_t>(6, extra / (3 * genes));
            extra -= 3 * body_floor * genes;
        }
        std::size_t body_total = 0;
        if (genes > 0 && extra >= 3) {
            std::uniform_int_distribution<std::size_t> pick_body(0, extra / 3);
            body_total = 3 * pick_body(rng);
        }
        std::size_t spacer_total = extra - body_total;

        auto split = [&rng](std::size_t amount, std::size_t buckets) {
            std::vector<std::size_t> cuts{0, amount};
            std::uniform_int_distribution<std::size_t> pick(0, amount);
            for (std::size_t i = 1; i < buckets; ++i) cuts.push_back(pick(rng));
            std::sort(cuts.begin(), cuts.end());
            std::vector<std::size_t> parts;
            for (std::size_t i = 1; i < cuts.size(); ++i) parts.push_back(cuts[i] - cuts[i - 1]);
            return parts;
        };
        std::vector<std::size_t> bodies =
            genes > 0 ? split(body_total / 3, genes) : std::vector<std::size_t>{};
        std::vector<std::size_t> spacers = split(spacer_total, genes + 1);

        // keep start codons out of bodies and junctions, so at every moment
        // of a streamed run the genes visible on any window of the
        // reference are a subset of the embedded ones
        auto forms_start = [&ref, &table](const std::string& piece) {
            const std::size_t ctx = std::min<std::size_t>(2, ref.size());
            return (ref.substr(ref.size() - ctx) + piece).find(table.start()) !=
                   std::string::npos;
        };
        for (std::size_t gi = 0; gi < genes; ++gi) {
            spacer.sync(ref);
            spacer.emit(ref, spacers[gi]);
            ref += table.start();
            for (std::size_t c = 0; c < body_floor + bodies[gi]; ++c) {
                std::string codon = sense[pick_sense(rng)];
                while (forms_start(codon)) codon = sense[pick_sense(rng)];
                ref += codon;
            }
            std::string stop = table.stops()[rng() % 3];
            while (forms_start(stop)) stop = table.stops()[rng() % 3];
            ref += stop;
        }
        spacer.sync(ref);
        spacer.emit(ref, spacers[genes]);

        Sequence reference = Sequence::from_valid(std::move(ref));
        GeneSet truth = scan_genes(reference, table);
        if (truth.size() != genes) continue;  // regenerate and re-verify

        result.reference = std::move(reference);
        result.truth = std::move(truth);
        break;
    }
    if (result.truth.size() != genes || result.reference.size() != total)
        throw unsatisfiable_spec("could not embed " + std::to_string(genes) +
                                 " genes in " + std::to_string(total) + " bases");

    // fragment into overlapping windows covering every position
    if (total > 0) {
        std::uniform_int_distribution<std::size_t> pick_len(spec.read_len_min,
                                                            spec.read_len_max);
        std::size_t start = 0;
        for (;;) {
            const std::size_t len = pick_len(rng);
            if (start + len >= total) {
                const std::size_t tail = std::min(len, total);
                result.reads.push_back(result.reference.subseq(total - tail, tail));
                break;
            }
            result.reads.push_back(result.reference.subseq(start, len));
            const std::size_t ov_hi = std::min(len - 1, spec.min_overlap + 9);
            std::uniform_int_distribution<std::size_t> pick_ov(spec.min_overlap, ov_hi);
            start += len - pick_ov(rng);
        }
    }
    if (spec.shuffle) std::shuffle(result.reads.begin(), result.reads.end(), rng);
    return result;
}

}  // namespace strand
