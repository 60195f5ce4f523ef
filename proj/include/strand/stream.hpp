#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "strand/codon.hpp"
#include "strand/debruijn.hpp"
#include "strand/genescan.hpp"
#include "strand/sequence.hpp"

namespace strand {

struct StreamConfig {
    unsigned k = 21;
    CodonTable codons = CodonTable::standard();
    std::optional<std::uint64_t> target_genes;  // stop once this many genes are visible
    bool emit_partial = true;                   // scan genes on partial contigs too

    void validate() const {
        if (k < 2 || k > max_k)
            throw std::invalid_argument("stream k must be in [2, 31]");
        if (target_genes && *target_genes < 1)
            throw std::invalid_argument("target_genes must be >= 1 when set");
    }
};

/// A gene located on a named piece of the current assembly. Indices are
/// local to that piece: "assembly" for a complete sequence, "contig_<i>"
/// for the i-th contig of a partial one.
struct AnnotatedGene {
    std::string contig_id;
    Gene gene;

    friend bool operator==(const AnnotatedGene&, const AnnotatedGene&) = default;
};

struct SegmentIngested {
    std::uint64_t ordinal = 0;  // consecutive from 1 over accepted reads
    std::size_t length = 0;
};

struct SegmentSkipped {
    std::uint64_t input_index = 0;  // 1-based position in the input order
    std::string reason;
};

struct GenesUpdated {
    AssemblyResult::Status status = AssemblyResult::Status::Partial;
    std::vector<AnnotatedGene> genes;
    std::vector<AnnotatedGene> added;
    std::vector<AnnotatedGene> removed;
};

enum class DoneReason { TargetReached, InputExhausted };

struct StreamDone {
    DoneReason reason = DoneReason::InputExhausted;
    std::uint64_t segments_consumed = 0;
    std::vector<AnnotatedGene> genes;
};

using StreamEvent = std::variant<SegmentIngested, SegmentSkipped, GenesUpdated, StreamDone>;

struct StreamResult {
    DoneReason reason = DoneReason::InputExhausted;
    std::uint64_t segments_consumed = 0;
    std::vector<AnnotatedGene> final_genes;
    AssemblyResult final_assembly;
    GraphStats graph;
};

/// Genes visible in an assembly snapshot. Complete sequences are scanned
/// as "assembly"; partial contigs are scanned independently (no
/// concatenation) when emit_partial is on; ambiguous snapshots yield
/// nothing.
inline std::vector<AnnotatedGene> scan_assembly(const AssemblyResult& assembly,
                                                const CodonPatterns& patterns,
                                                bool emit_partial) {
    std::vector<AnnotatedGene> out;
    if (assembly.complete()) {
        for (Gene& g : scan_genes(assembly.sequence, patterns))
            out.push_back(AnnotatedGene{"assembly", std::move(g)});
    } else if (assembly.partial() && emit_partial) {
        for (std::size_t i = 0; i < assembly.contigs.size(); ++i) {
            const std::string id = "contig_" + std::to_string(i);
            for (Gene& g : scan_genes(assembly.contigs[i].bases, patterns))
                out.push_back(AnnotatedGene{id, std::move(g)});
        }
    }
    return out;
}

inline std::vector<AnnotatedGene> scan_assembly(const AssemblyResult& assembly,
                                                const CodonTable& table,
                                                bool emit_partial) {
    return scan_assembly(assembly, CodonPatterns(table), emit_partial);
}

/// Set difference of annotated gene sets by (contig_id, start, end, bases).
inline std::pair<std::vector<AnnotatedGene>, std::vector<AnnotatedGene>> annotated_diff(
    const std::vector<AnnotatedGene>& old_set, const std::vector<AnnotatedGene>& new_set) {
    auto key_less = [](const AnnotatedGene& a, const AnnotatedGene& b) {
        return std::tie(a.contig_id, a.gene.start, a.gene.end, a.gene.bases) <
               std::tie(b.contig_id, b.gene.start, b.gene.end, b.gene.bases);
    };
    auto old_sorted = old_set;
    auto new_sorted = new_set;
    std::sort(old_sorted.begin(), old_sorted.end(), key_less);
    std::sort(new_sorted.begin(), new_sorted.end(), key_less);
    std::pair<std::vector<AnnotatedGene>, std::vector<AnnotatedGene>> d;
    std::set_difference(new_sorted.begin(), new_sorted.end(), old_sorted.begin(),
                        old_sorted.end(), std::back_inserter(d.first), key_less);
    std::set_difference(old_sorted.begin(), old_sorted.end(), new_sorted.begin(),
                        new_sorted.end(), std::back_inserter(d.second), key_less);
    return d;
}

/// The on-line driver. Pulls segments from source (a callable returning
/// std::optional<Sequence>) until exhausted or the gene target is met.
/// Each accepted segment updates the graph, re-assembles, re-scans genes,
/// and emits events to sink in one total order: SegmentIngested, then
/// GenesUpdated when the gene set changed, with a single final StreamDone.
/// Reads shorter than k are skipped with a SegmentSkipped warning.
template <typename Source, typename Sink>
    requires std::invocable<Source&>
StreamResult run_stream(Source&& source, const StreamConfig& cfg, Sink&& sink) {
    cfg.validate();
    DeBruijnGraph graph(cfg.k);
    const CodonPatterns patterns(cfg.codons);
    StreamResult result;
    std::vector<AnnotatedGene> current;
    AssemblyResult assembly;
    assembly.status = AssemblyResult::Status::Complete;
    std::uint64_t ordinal = 0;
    std::uint64_t input_index = 0;
    std::uint64_t last_distinct = 0;
    bool target_hit = false;

    for (std::optional<Sequence> read = source(); read; read = source()) {
        ++input_index;
        try {
            graph.insert_segment(*read);
        } catch (const read_too_short& e) {
            sink(StreamEvent{SegmentSkipped{input_index, e.what()}});
            continue;
        }
        ++ordinal;
        sink(StreamEvent{SegmentIngested{ordinal, read->size()}});

        // a segment of already-seen k-mers only bumps multiplicities, and
        // traversal collapses those: the assembly cannot have changed
        if (graph.distinct_edge_count() == last_distinct && ordinal > 1) continue;
        last_distinct = graph.distinct_edge_count();

        assembly = graph.assemble(/*with_source_paths=*/false);
        std::vector<AnnotatedGene> genes = scan_assembly(assembly, patterns, cfg.emit_partial);
        auto [added, removed] = annotated_diff(current, genes);
        current = std::move(genes);
        if (!added.empty() || !removed.empty())
            sink(StreamEvent{GenesUpdated{assembly.status, current, std::move(added),
                                          std::move(removed)}});
        if (cfg.target_genes && current.size() >= *cfg.target_genes) {
            target_hit = true;
            break;
        }
    }

    result.reason = target_hit ? DoneReason::TargetReached : DoneReason::InputExhausted;
    result.segments_consumed = ordinal;
    result.final_genes = current;
    result.final_assembly = std::move(assembly);
    result.graph = graph.stats();
    sink(StreamEvent{StreamDone{result.reason, ordinal, result.final_genes}});
    return result;
}

inline auto make_vector_source(const std::vector<Sequence>& segments) {
    std::size_t i = 0;
    return [&segments, i]() mutable -> std::optional<Sequence> {
        if (i >= segments.size()) return std::nullopt;
        return segments[i++];
    };
}

template <typename Sink>
StreamResult run_stream(const std::vector<Sequence>& segments, const StreamConfig& cfg,
                        Sink&& sink) {
    return run_stream(make_vector_source(segments), cfg, std::forward<Sink>(sink));
}

inline StreamResult run_stream(const std::vector<Sequence>& segments,
                               const StreamConfig& cfg) {
    return run_stream(segments, cfg, [](const StreamEvent&) {});
}

}  // namespace strand
