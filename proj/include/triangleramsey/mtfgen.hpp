#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "triangleramsey/canon.hpp"
#include "triangleramsey/graph.hpp"

namespace ramsey {

// A dominating set S of an mtf graph is good if after deleting all edges
// inside S, every s in S stays within distance two of every vertex outside
// S. Kinds: 0 = S is some vertex neighbourhood, 1 = independent but not a
// neighbourhood, 2 = S has internal edges.
struct GoodDominatingSet {
    Bits set = 0;
    int kind = 0;
    std::vector<std::pair<int, int>> internal_edges;  // empty for kinds 0,1
    int witness_vertex = -1;                          // kind 0 only
};

struct KindFilter {
    bool k0 = true, k1 = true, k2 = true;
};

bool is_dominating_set(const Graph& g, Bits s);
bool is_good_dominating_set(const Graph& g, Bits s);
std::vector<std::pair<int, int>> internal_edges_of(const Graph& g, Bits s);

std::vector<GoodDominatingSet> enumerate_good_dominating_sets(const Graph& g, KindFilter kinds,
                                                              int max_size);

// Remove the edges inside s.set and join a new vertex to every member.
Graph expand(const Graph& g, const GoodDominatingSet& s);

// Lexicographic key ordering candidate reduction vertices. x1 flips sign by
// kind so higher degree wins for kinds 0/1 and lower degree for kind 2; x3
// stores negated descending neighbour degrees so plain lexicographic
// comparison realizes the intended order; x4 is filled only on demand.
struct ReductionKey {
    int x0 = 0;
    int x1 = 0;
    int x2 = 0;
    std::vector<int> x3;
    std::optional<int> x4;

    bool operator<(const ReductionKey& o) const;
    bool operator==(const ReductionKey& o) const;
};

// Key of vertex v in g_child; x0 is classified from scratch (0 if v is a
// double vertex, 1 if g_child - v is mtf, else 2). x4 left unset.
ReductionKey reduction_key(const Graph& g_child, int v);

// Vertices sharing a neighbourhood, grouped; classes[i] is the set of
// vertices whose rows equal that of its lowest member; only classes of size
// >= 2 are returned.
std::vector<Bits> double_classes(const Graph& g);

// Deterministic canonical choice among the minimal-cardinality edge sets
// inside `reduced_neighborhood` whose insertion makes g_minus_v mtf:
// smallest canonical_bytes of the resulting graph, then lexicographically
// smallest edge list. Returns the empty set when g_minus_v is already mtf.
std::vector<std::pair<int, int>> canonical_edge_insertion(Bits reduced_neighborhood,
                                                          const Graph& g_minus_v);

// Provenance of the expansion that produced a child.
struct ProvenanceTag {
    int kind = 0;
    int new_vertex = 0;
    std::vector<std::pair<int, int>> removed_edges;  // kind 2
    Bits dominating_set = 0;
};

struct AcceptanceResult {
    bool accepted = false;
    bool child_generators_known = false;
    std::vector<Perm> child_generators;
};

// Rule (a) of the construction-path method: accept the child iff removing
// its newest vertex is (equivalent to) its canonical reduction.
AcceptanceResult accept_expansion(const Graph& child, const ProvenanceTag& prov);

// Spec-shaped wrapper around accept_expansion.
bool is_canonical_expansion(const Graph& parent, const GoodDominatingSet& s, const Graph& child,
                            int new_vertex);

// Full recomputation of the acceptance verdict without the staged
// shortcuts: builds every candidate's complete 5-tuple and redoes the edge
// orbit selection directly. Used to cross-check accept_expansion.
bool debug_acceptance(const Graph& child, const ProvenanceTag& prov);

struct GenerationStats {
    struct PerOrder {
        std::uint64_t total = 0;
        std::uint64_t by_kind[3] = {0, 0, 0};
        double seconds = 0;  // elapsed from run start when this order last grew
    };
    std::vector<PerOrder> orders;  // indexed by graph order
    double seconds = 0;

    void ensure(int n) {
        if (orders.size() <= static_cast<size_t>(n)) orders.resize(n + 1);
    }
};

// Hook interface for restricting generation (Ramsey pruning). All calls are
// made from the generating thread; enter/leave pairs follow the DFS.
class ExpansionFilter {
public:
    virtual ~ExpansionFilter() = default;
    virtual bool enter_root(const Graph&) { return true; }
    virtual bool admit_set(const Graph& parent, const GoodDominatingSet& s) {
        (void)parent;
        (void)s;
        return true;
    }
    virtual bool enter_child(const Graph& child, const ProvenanceTag& prov) {
        (void)child;
        (void)prov;
        return true;
    }
    virtual void leave_child() {}
};

// Isomorph-free exhaustive generation of mtf graphs by canonical
// construction paths, starting from K1 (or from seed graphs).
class MtfGenerator {
public:
    struct Options {
        int target_n = 1;
        int workers = 1;
        bool debug_verify = false;  // re-check every acceptance verdict
    };
    using Visitor = std::function<void(const Graph&)>;

    MtfGenerator(Options opts, Visitor visitor, ExpansionFilter* filter = nullptr);

    GenerationStats run();
    GenerationStats run_from(const std::vector<Graph>& seeds);
    void request_stop() { stop_.store(true, std::memory_order_relaxed); }
    std::uint64_t debug_checks() const { return debug_checks_.load(); }

private:
    struct Node {
        Graph g;
        std::vector<Perm> gens;
        bool gens_known = false;
    };

    void recurse(Node& node, GenerationStats& stats, ExpansionFilter* filter,
                 std::chrono::steady_clock::time_point t0);
    std::vector<GoodDominatingSet> candidate_expansions(Node& node);

    Options opts_;
    Visitor visitor_;
    ExpansionFilter* filter_;
    std::atomic<bool> stop_{false};
    std::atomic<std::uint64_t> debug_checks_{0};
};

}  // namespace ramsey
