#pragma once

#include <chrono>
#include <cstdint>
#include <ostream>
#include <string_view>

#include "strand/boyer_moore.hpp"
#include "strand/simulate.hpp"
#include "strand/stream.hpp"

namespace strand {

struct BenchRecord {
    std::size_t sequence_length = 0;   // reference bases
    std::size_t distinct_kmers = 0;    // distinct edges in the final graph
    std::size_t segments_total = 0;    // reads produced by the simulator
    std::size_t segments_consumed = 0;
    std::size_t genes_found = 0;
    std::size_t target_genes = 0;      // 0 when the run had no target
    double wall_time_ms = 0.0;
    std::uint64_t bm_comparisons = 0;
    std::uint64_t naive_comparisons = 0;
};

inline constexpr std::string_view bench_csv_header =
    "sequence_length,distinct_kmers,segments_total,segments_consumed,genes_found,"
    "target_genes,wall_time_ms,bm_comparisons,naive_comparisons";

/// Simulates one instance, streams it, and measures the run: wall time of
/// the stream, distinct k-mers as the memory proxy, and the comparison
/// counts of both matchers locating all four codons in the final
/// assembly. Deterministic per seed except wall_time_ms.
inline BenchRecord bench_run(const SimSpec& spec, const StreamConfig& cfg) {
    BenchRecord rec;
    SimResult sim = simulate(spec);
    rec.sequence_length = sim.reference.size();
    rec.segments_total = sim.reads.size();
    rec.target_genes = cfg.target_genes ? static_cast<std::size_t>(*cfg.target_genes) : 0;

    const auto t0 = std::chrono::steady_clock::now();
    StreamResult run = run_stream(sim.reads, cfg);
    const auto t1 = std::chrono::steady_clock::now();
    rec.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    rec.distinct_kmers = run.graph.distinct_edge_count;
    rec.segments_consumed = static_cast<std::size_t>(run.segments_consumed);
    rec.genes_found = run.final_genes.size();

    std::vector<const Sequence*> texts;
    if (run.final_assembly.complete()) {
        texts.push_back(&run.final_assembly.sequence);
    } else if (run.final_assembly.partial()) {
        for (const Contig& c : run.final_assembly.contigs) texts.push_back(&c.bases);
    }
    std::vector<std::string> codons{cfg.codons.start()};
    for (const auto& s : cfg.codons.stops()) codons.push_back(s);
    for (const std::string& codon : codons) {
        const Pattern pat(Sequence::from_valid(codon));
        const Sequence naive_pat = Sequence::from_valid(codon);
        for (const Sequence* text : texts) {
            rec.bm_comparisons += bm_search(*text, pat).comparisons;
            rec.naive_comparisons += naive_search(*text, naive_pat).comparisons;
        }
    }
    return rec;
}

inline void write_csv_header(std::ostream& os) { os << bench_csv_header << '\n'; }

inline void write_csv_row(std::ostream& os, const BenchRecord& rec) {
    os << rec.sequence_length << ',' << rec.distinct_kmers << ',' << rec.segments_total
       << ',' << rec.segments_consumed << ',' << rec.genes_found << ',' << rec.target_genes
       << ',' << rec.wall_time_ms << ',' << rec.bm_comparisons << ','
       << rec.naive_comparisons << '\n';
}

}  // namespace strand
