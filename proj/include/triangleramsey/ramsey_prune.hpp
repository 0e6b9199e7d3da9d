#pragma once

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <optional>
#include <vector>

#include "triangleramsey/graph.hpp"
#include "triangleramsey/mtfgen.hpp"

namespace ramsey {

// Per-target state for restricting mtf generation to Ramsey graphs:
// the complement to embed into, its reduced form for approximating sets,
// and the per-order cache of previously successful witness sets.
struct RamseyContext {
    Graph target;               // G
    Graph target_comp;          // G^c
    Graph target_comp_reduced;  // G^c minus one minimum-degree vertex (k >= 2)
    int k = 0;                  // |V(G)|
    int max_witness_edges = 0;  // |E(G^c)|
    int cache_cap = 100;
    std::vector<std::deque<Bits>> reject_cache;  // indexed by |V(M)|

    struct Counters {
        std::uint64_t cache_hits = 0;
        std::uint64_t greedy_hits = 0;
        std::uint64_t complete_hits = 0;
        std::uint64_t ramsey_confirmed = 0;
        std::uint64_t sets_pruned = 0;
        std::uint64_t prune_checks = 0;       // debug re-verifications of pruned sets
        std::uint64_t prune_violations = 0;   // pruned set whose child was Ramsey (must stay 0)
    } counters;
};

RamseyContext make_ramsey_context(const Graph& target, int cache_cap = 100);

struct RamseyVerdict {
    bool is_ramsey = false;
    std::optional<Bits> witness;          // set inducing a spanning subgraph of G^c
    std::vector<Bits> approximating_sets; // only meaningful when is_ramsey
};

// Algorithm: replay cached witness sets, then greedy candidates, then the
// complete search (restricted by provenance when available). A found
// witness is cached FIFO per order.
RamseyVerdict is_ramsey_graph(const Graph& m, RamseyContext& ctx,
                              const ProvenanceTag* prov = nullptr);

struct SearchRestriction {
    Bits force = 0;    // every searched set contains these vertices
    Bits exclude = 0;  // and avoids these
};

// Enumerates vertex sets of size |V(G)| inducing at most |E(G^c)| edges and
// tests each for a spanning subgraph of G^c. Optionally collects the
// approximating sets formed along the way (size |V(G)|-1 inducing a
// spanning subgraph of G^c_delta).
std::optional<Bits> complete_search(const Graph& m, RamseyContext& ctx,
                                    const SearchRestriction& restriction,
                                    std::vector<Bits>* approx_out);

// Size-k sets grown greedily from each vertex, minimizing adjacency into
// the set at each step (ties to the lowest index). Heuristic only.
std::vector<Bits> greedy_candidates(const Graph& m, int k);

// All approximating sets reachable by the complete-search enumeration;
// caller asserts m is a Ramsey graph for ctx.target.
std::vector<Bits> find_approximating_sets(const Graph& m, RamseyContext& ctx);

// False iff some approximating set is disjoint from s.set; such an
// expansion cannot produce a Ramsey graph.
bool child_set_admissible(const GoodDominatingSet& s, const std::vector<Bits>& approx_sets);

// ExpansionFilter wiring is_ramsey_graph and the approximating-set pruning
// into the generator. Keeps a stack of approximating sets parallel to the
// generation path.
class RamseyPruner : public ExpansionFilter {
public:
    RamseyPruner(RamseyContext ctx, bool debug_prune_checks = false);

    bool enter_root(const Graph& g) override;
    bool admit_set(const Graph& parent, const GoodDominatingSet& s) override;
    bool enter_child(const Graph& child, const ProvenanceTag& prov) override;
    void leave_child() override;

    RamseyContext& context() { return ctx_; }

    // Diagnostic stream: every rejected graph is logged as its graph6
    // string plus the witness set's vertex indices. Off by default.
    void log_rejections_to(std::ostream* out) { rejection_log_ = out; }

private:
    RamseyContext ctx_;
    bool debug_prune_checks_;
    std::ostream* rejection_log_ = nullptr;
    std::vector<std::vector<Bits>> approx_stack_;
};

}  // namespace ramsey
