#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "strand/kmer.hpp"
#include "strand/sequence.hpp"

namespace strand {

/// Reads shorter than k carry no k-mer and are rejected at insertion.
class read_too_short : public std::invalid_argument {
public:
    read_too_short(std::size_t length, unsigned k)
        : std::invalid_argument("read of length " + std::to_string(length) +
                                " is shorter than k = " + std::to_string(k)),
          length_(length),
          k_(k) {}
    std::size_t length() const noexcept { return length_; }
    unsigned k() const noexcept { return k_; }

private:
    std::size_t length_;
    unsigned k_;
};

namespace detail {

/// Open-addressed map from packed (k-1)-mer code to a dense node index.
/// Linear probing over a power-of-two table; packed codes use at most 60
/// bits, so all-ones is a free empty sentinel.
class NodeIndex {
public:
    static constexpr std::uint64_t empty_key = ~std::uint64_t{0};
    static constexpr std::uint32_t npos = ~std::uint32_t{0};

    NodeIndex() : keys_(initial_capacity, empty_key), vals_(initial_capacity) {}

    std::uint32_t find(std::uint64_t key) const noexcept {
        std::size_t i = slot(key);
        while (keys_[i] != empty_key) {
            if (keys_[i] == key) return vals_[i];
            i = (i + 1) & (keys_.size() - 1);
        }
        return npos;
    }

    /// Returns the index mapped to key, inserting next_val if absent.
    std::uint32_t find_or_insert(std::uint64_t key, std::uint32_t next_val,
                                 bool& inserted) {
        if ((size_ + 1) * 10 >= keys_.size() * 7) grow();
        std::size_t i = slot(key);
        while (keys_[i] != empty_key) {
            if (keys_[i] == key) {
                inserted = false;
                return vals_[i];
            }
            i = (i + 1) & (keys_.size() - 1);
        }
        keys_[i] = key;
        vals_[i] = next_val;
        ++size_;
        inserted = true;
        return next_val;
    }

    std::size_t size() const noexcept { return size_; }

private:
    static constexpr std::size_t initial_capacity = 1024;

    static std::uint64_t mix(std::uint64_t x) noexcept {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    std::size_t slot(std::uint64_t key) const noexcept {
        return static_cast<std::size_t>(mix(key)) & (keys_.size() - 1);
    }

    void grow() {
        std::vector<std::uint64_t> old_keys(keys_.size() * 2, empty_key);
        std::vector<std::uint32_t> old_vals(vals_.size() * 2);
        old_keys.swap(keys_);
        old_vals.swap(vals_);
        for (std::size_t i = 0; i < old_keys.size(); ++i) {
            if (old_keys[i] == empty_key) continue;
            std::size_t j = slot(old_keys[i]);
            while (keys_[j] != empty_key) j = (j + 1) & (keys_.size() - 1);
            keys_[j] = old_keys[i];
            vals_[j] = old_vals[i];
        }
    }

    std::vector<std::uint64_t> keys_;
    std::vector<std::uint32_t> vals_;
    std::size_t size_ = 0;
};

}  // namespace detail

/// A maximal unambiguously-spelled path: every interior node has exactly
/// one distinct predecessor and one distinct successor.
struct Contig {
    Sequence bases;
    std::vector<Kmer> source_path;
};

struct AssemblyResult {
    enum class Status { Complete, Partial, Ambiguous };

    Status status = Status::Partial;
    Sequence sequence;            // set when Complete
    std::vector<Contig> contigs;  // set when Partial
    std::string ambiguous_node;   // set when Ambiguous

    bool complete() const noexcept { return status == Status::Complete; }
    bool partial() const noexcept { return status == Status::Partial; }
    bool ambiguous() const noexcept { return status == Status::Ambiguous; }
};

struct GraphStats {
    std::size_t node_count = 0;
    std::size_t distinct_edge_count = 0;
    std::uint64_t edge_count = 0;  // total edge multiplicity
    std::size_t start_node_count = 0;
};

/// Per-node degree view, mainly for tests and diagnostics.
struct NodeView {
    Kmer node;
    std::uint32_t in_distinct = 0;
    std::uint32_t out_distinct = 0;
    std::uint64_t in_mult = 0;
    std::uint64_t out_mult = 0;
};

/// De Bruijn graph over (k-1)-mer nodes with k-mer edges. Edge
/// multiplicities accumulate as reads repeat k-mers; traversal collapses
/// them to one, so re-reading a fragment never changes the assembly.
///
/// Single-writer: insert_segment must be externally serialized. assemble()
/// and stats() read a consistent snapshot between inserts.
class DeBruijnGraph {
public:
    explicit DeBruijnGraph(unsigned k) : k_(k) {
        if (k > max_k) throw k_too_large(k);
        if (k < 2) throw std::invalid_argument("de Bruijn graph requires k >= 2");
        node_mask_ = kmer_mask(k - 1);
    }

    unsigned k() const noexcept { return k_; }

    /// Adds one edge per k-mer of the read: prefix(k-1) -> suffix(k-1),
    /// multiplicity +1. Throws read_too_short below k bases.
    void insert_segment(const Sequence& read) {
        if (read.size() < k_) throw read_too_short(read.size(), k_);
        const std::uint64_t mask = kmer_mask(k_);
        std::uint64_t code = 0;
        std::uint32_t prev_suffix = detail::NodeIndex::npos;
        for (std::size_t i = 0; i < read.size(); ++i) {
            code = ((code << 2) | static_cast<std::uint64_t>(base_code(read[i]))) & mask;
            if (i + 1 < k_) continue;
            // this k-mer's prefix node is the previous k-mer's suffix node
            const std::uint32_t u =
                prev_suffix != detail::NodeIndex::npos ? prev_suffix : intern(code >> 2);
            prev_suffix = add_edge(u, code);
        }
    }

    /// Traversal start candidates on the collapsed (distinct-edge) graph:
    /// nodes with no predecessor, plus nodes with one more distinct
    /// successor than predecessors. Sorted by packed code.
    std::vector<Kmer> find_start_nodes() const {
        std::vector<Kmer> out;
        out.reserve(starts_.size());
        for (std::uint64_t key : starts_) out.push_back(Kmer{k_ - 1, key});
        return out;
    }

    /// Walks the collapsed edge set. Complete when a single start exists
    /// and the walk consumes every distinct edge with a forced choice at
    /// each step; Ambiguous when some step sees two viable successors;
    /// Partial (maximal unambiguous contigs) otherwise. An empty graph is
    /// Complete with the empty sequence. Pass with_source_paths = false to
    /// skip filling contig node paths when only the bases matter.
    AssemblyResult assemble(bool with_source_paths = true) const {
        AssemblyResult res;
        if (nodes_.empty()) {
            res.status = AssemblyResult::Status::Complete;
            return res;
        }
        if (starts_.size() == 1 && components_ == 1) {
            std::vector<std::uint8_t> consumed(nodes_.size(), 0);
            std::uint32_t cur = index_.find(*starts_.begin());
            std::string bases = Kmer{k_ - 1, nodes_[cur].key}.str();
            bases.reserve(static_cast<std::size_t>(edge_distinct_) + k_ - 1);
            std::uint64_t walked = 0;
            for (;;) {
                const Node& n = nodes_[cur];
                int next_base = -1;
                int viable = 0;
                for (int b = 0; b < 4; ++b) {
                    if (n.out_mult[b] > 0 && !(consumed[cur] & (1u << b))) {
                        ++viable;
                        next_base = b;
                    }
                }
                if (viable == 0) break;
                if (viable > 1) {
                    res.status = AssemblyResult::Status::Ambiguous;
                    res.ambiguous_node = Kmer{k_ - 1, n.key}.str();
                    return res;
                }
                consumed[cur] |= static_cast<std::uint8_t>(1u << next_base);
                ++walked;
                bases.push_back(base_char(static_cast<unsigned>(next_base)));
                cur = n.out_idx[next_base];
            }
            if (walked == edge_distinct_) {
                res.status = AssemblyResult::Status::Complete;
                res.sequence = Sequence::from_valid(std::move(bases));
                return res;
            }
        }
        res.status = AssemblyResult::Status::Partial;
        res.contigs = extract_contigs(with_source_paths);
        return res;
    }

    GraphStats stats() const noexcept {
        return GraphStats{nodes_.size(), static_cast<std::size_t>(edge_distinct_),
                          edge_mult_, starts_.size()};
    }

    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::uint64_t distinct_edge_count() const noexcept { return edge_distinct_; }
    std::uint64_t edge_count() const noexcept { return edge_mult_; }
    std::size_t component_count() const noexcept { return components_; }

    bool has_node(std::string_view node) const {
        Kmer km = encode_kmer(node);
        return km.k == k_ - 1 && index_.find(km.code) != detail::NodeIndex::npos;
    }

    /// Multiplicity of the edge from -> to; zero when absent or when the
    /// two (k-1)-mers do not overlap by k-2.
    std::uint32_t edge_multiplicity(std::string_view from, std::string_view to) const {
        if (from.size() != k_ - 1 || to.size() != k_ - 1) return 0;
        Kmer u = encode_kmer(from);
        Kmer v = encode_kmer(to);
        int b = base_code(to.back());
        if (((u.code << 2 | static_cast<std::uint64_t>(b)) & node_mask_) != v.code)
            return 0;
        std::uint32_t idx = index_.find(u.code);
        if (idx == detail::NodeIndex::npos) return 0;
        return nodes_[idx].out_mult[b];
    }

    std::vector<NodeView> nodes() const {
        std::vector<NodeView> out;
        out.reserve(nodes_.size());
        for (const Node& n : nodes_) {
            NodeView v;
            v.node = Kmer{k_ - 1, n.key};
            v.in_distinct = n.in_distinct;
            v.out_distinct = n.out_distinct();
            v.in_mult = n.in_mult;
            for (int b = 0; b < 4; ++b) v.out_mult += n.out_mult[b];
            out.push_back(v);
        }
        std::sort(out.begin(), out.end(),
                  [](const NodeView& a, const NodeView& b) { return a.node.code < b.node.code; });
        return out;
    }

private:
    struct Node {
        std::uint32_t out_mult[4] = {0, 0, 0, 0};
        std::uint32_t out_idx[4] = {0, 0, 0, 0};
        std::uint64_t key = 0;
        std::uint32_t in_mult = 0;
        std::uint8_t in_distinct = 0;

        std::uint32_t out_distinct() const noexcept {
            std::uint32_t d = 0;
            for (int b = 0; b < 4; ++b) d += (out_mult[b] > 0);
            return d;
        }
    };

    std::uint32_t intern(std::uint64_t key) {
        bool inserted = false;
        std::uint32_t idx = index_.find_or_insert(
            key, static_cast<std::uint32_t>(nodes_.size()), inserted);
        if (inserted) {
            Node n;
            n.key = key;
            nodes_.push_back(n);
            dsu_parent_.push_back(idx);
            dsu_size_.push_back(1);
            ++components_;
        }
        return idx;
    }

    std::uint32_t dsu_find(std::uint32_t x) {
        while (dsu_parent_[x] != x) {
            dsu_parent_[x] = dsu_parent_[dsu_parent_[x]];
            x = dsu_parent_[x];
        }
        return x;
    }

    void dsu_union(std::uint32_t a, std::uint32_t b) {
        a = dsu_find(a);
        b = dsu_find(b);
        if (a == b) return;
        if (dsu_size_[a] < dsu_size_[b]) std::swap(a, b);
        dsu_parent_[b] = a;
        dsu_size_[a] += dsu_size_[b];
        --components_;
    }

    bool is_start_candidate(const Node& n) const noexcept {
        if (n.in_distinct == 0) return true;
        return static_cast<int>(n.out_distinct()) - static_cast<int>(n.in_distinct) == 1;
    }

    void refresh_start(std::uint32_t idx) {
        const Node& n = nodes_[idx];
        if (is_start_candidate(n))
            starts_.insert(n.key);
        else
            starts_.erase(n.key);
    }

    /// Adds the edge u -> suffix(kmer_code); returns the suffix node index.
    std::uint32_t add_edge(std::uint32_t u, std::uint64_t kmer_code) {
        const int b = static_cast<int>(kmer_code & 3u);
        ++edge_mult_;
        if (nodes_[u].out_mult[b] > 0) {
            nodes_[u].out_mult[b] += 1;
            const std::uint32_t v = nodes_[u].out_idx[b];
            nodes_[v].in_mult += 1;
            return v;
        }
        const std::uint32_t v = intern(kmer_code & node_mask_);
        nodes_[u].out_mult[b] = 1;
        nodes_[u].out_idx[b] = v;
        nodes_[v].in_mult += 1;
        nodes_[v].in_distinct += 1;
        ++edge_distinct_;
        dsu_union(u, v);
        refresh_start(u);
        if (v != u) refresh_start(v);
        return v;
    }

    /// Unitig decomposition of the collapsed graph: chains headed at
    /// non-interior nodes, then leftover all-interior cycles broken at
    /// their smallest node. The result is sorted by path head, so it does
    /// not depend on insertion order.
    std::vector<Contig> extract_contigs(bool with_source_paths) const {
        std::vector<Contig> out;
        std::vector<std::uint8_t> consumed(nodes_.size(), 0);
        std::uint64_t remaining = edge_distinct_;

        auto interior = [&](std::uint32_t idx) {
            const Node& n = nodes_[idx];
            return n.in_distinct == 1 && n.out_distinct() == 1;
        };
        auto single_out_base = [&](std::uint32_t idx) {
            const Node& n = nodes_[idx];
            for (int b = 0; b < 4; ++b)
                if (n.out_mult[b] > 0) return b;
            return -1;
        };
        // scratch buffers reused across chains; each contig copies out its
        // exact size
        std::string bases_scratch;
        std::vector<Kmer> path_scratch;
        auto walk_chain = [&](std::uint32_t head, int base) {
            bases_scratch.clear();
            path_scratch.clear();
            bases_scratch += Kmer{k_ - 1, nodes_[head].key}.str();
            if (with_source_paths) path_scratch.push_back(Kmer{k_ - 1, nodes_[head].key});
            std::uint32_t cur = head;
            int b = base;
            for (;;) {
                consumed[cur] |= static_cast<std::uint8_t>(1u << b);
                --remaining;
                bases_scratch.push_back(base_char(static_cast<unsigned>(b)));
                cur = nodes_[cur].out_idx[b];
                if (with_source_paths) path_scratch.push_back(Kmer{k_ - 1, nodes_[cur].key});
                if (!interior(cur)) break;
                b = single_out_base(cur);
                if (b < 0 || (consumed[cur] & (1u << b))) break;
            }
            Contig c;
            c.bases = Sequence::from_valid(bases_scratch);
            c.source_path = path_scratch;
            out.push_back(std::move(c));
        };

        for (std::uint32_t idx = 0; idx < nodes_.size(); ++idx) {
            if (interior(idx)) continue;
            const Node& n = nodes_[idx];
            for (int b = 0; b < 4; ++b)
                if (n.out_mult[b] > 0 && !(consumed[idx] & (1u << b))) walk_chain(idx, b);
        }
        // anything left sits on cycles of interior nodes; break each at its
        // smallest node key
        for (std::uint32_t idx = 0; remaining > 0 && idx < nodes_.size(); ++idx) {
            const Node& n = nodes_[idx];
            for (int b = 0; b < 4; ++b) {
                if (n.out_mult[b] == 0 || (consumed[idx] & (1u << b))) continue;
                std::uint32_t cur = idx, min_idx = idx;
                do {
                    cur = nodes_[cur].out_idx[single_out_base(cur)];
                    if (nodes_[cur].key < nodes_[min_idx].key) min_idx = cur;
                } while (cur != idx);
                walk_chain(min_idx, single_out_base(min_idx));
            }
        }
        // bases determine the node path, so this order is insertion-independent
        std::sort(out.begin(), out.end(),
                  [](const Contig& a, const Contig& b) { return a.bases < b.bases; });
        return out;
    }

    unsigned k_;
    std::uint64_t node_mask_ = 0;
    detail::NodeIndex index_;
    std::vector<Node> nodes_;
    std::vector<std::uint32_t> dsu_parent_;
    std::vector<std::uint32_t> dsu_size_;
    std::set<std::uint64_t> starts_;
    std::uint64_t edge_mult_ = 0;
    std::uint64_t edge_distinct_ = 0;
    std::size_t components_ = 0;
};

}  // namespace strand
