#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "strand/debruijn.hpp"
#include "strand/stream.hpp"

namespace strand {

inline const char* status_name(AssemblyResult::Status s) {
    switch (s) {
        case AssemblyResult::Status::Complete: return "complete";
        case AssemblyResult::Status::Partial: return "partial";
        case AssemblyResult::Status::Ambiguous: return "ambiguous";
    }
    return "unknown";
}

inline const char* done_reason_name(DoneReason r) {
    return r == DoneReason::TargetReached ? "target_reached" : "input_exhausted";
}

inline nlohmann::json genes_to_json(const std::vector<AnnotatedGene>& genes) {
    nlohmann::json arr = nlohmann::json::array();
    for (const AnnotatedGene& g : genes)
        arr.push_back({{"contig", g.contig_id},
                       {"start", g.gene.start},
                       {"end", g.gene.end},
                       {"sequence", g.gene.bases.str()}});
    return arr;
}

/// One JSON object per event; the line-delimited record format of the
/// events output.
inline nlohmann::json event_to_json(const StreamEvent& event) {
    nlohmann::json j;
    if (const auto* e = std::get_if<SegmentIngested>(&event)) {
        j["event"] = "segment_ingested";
        j["ordinal"] = e->ordinal;
        j["length"] = e->length;
    } else if (const auto* e = std::get_if<SegmentSkipped>(&event)) {
        j["event"] = "segment_skipped";
        j["input_index"] = e->input_index;
        j["reason"] = e->reason;
    } else if (const auto* e = std::get_if<GenesUpdated>(&event)) {
        j["event"] = "genes_updated";
        j["status"] = status_name(e->status);
        j["genes"] = genes_to_json(e->genes);
        j["added"] = genes_to_json(e->added);
        j["removed"] = genes_to_json(e->removed);
    } else if (const auto* e = std::get_if<StreamDone>(&event)) {
        j["event"] = "done";
        j["reason"] = done_reason_name(e->reason);
        j["segments_consumed"] = e->segments_consumed;
        j["genes"] = genes_to_json(e->genes);
    }
    return j;
}

inline constexpr const char* genes_tsv_header = "contig_id\tstart\tend\tsequence";

/// Gene table: contig_id TAB start TAB end TAB sequence, 0-based
/// half-open indices, one header line.
inline void write_genes_tsv(std::ostream& os, const std::vector<AnnotatedGene>& genes) {
    os << genes_tsv_header << '\n';
    for (const AnnotatedGene& g : genes)
        os << g.contig_id << '\t' << g.gene.start << '\t' << g.gene.end << '\t'
           << g.gene.bases.str() << '\n';
}

}  // namespace strand
