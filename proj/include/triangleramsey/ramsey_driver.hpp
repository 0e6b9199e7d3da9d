#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "triangleramsey/graph.hpp"
#include "triangleramsey/ramsey_prune.hpp"

namespace ramsey {

// Independent confirmation that f is a triangle Ramsey graph for g, built
// from graphcore primitives only.
bool verify_ramsey_graph(const Graph& f, const Graph& g);

struct DriverOptions {
    int cache_cap = 100;
    bool debug_prune_checks = false;
    RamseyContext::Counters* counters = nullptr;  // accumulated across runs when set
    std::ostream* rejection_log = nullptr;        // diagnostic witness stream, off by default
};

// First mtf Ramsey graph for g at order r, or nothing when the pruned
// generation exhausts. ctx carries the caches across calls for one target.
std::optional<Graph> find_mtf_ramsey_graph(const Graph& g, int r, RamseyContext& ctx,
                                           const DriverOptions& opts = {});

// Complete list of mtf Ramsey graphs for g at order r. When seeds are given
// they must be exactly the mtf Ramsey graphs for g at their own order, and
// generation continues from them.
std::vector<Graph> all_ramsey_graphs(const Graph& g, int r,
                                     const std::vector<Graph>* seeds = nullptr,
                                     const DriverOptions& opts = {});

// All triangle-free Ramsey graphs at the order of mtf_list, by recursive
// Ramsey-preserving edge deletion from the complete mtf list, deduplicated
// by canonical form.
std::vector<Graph> expand_to_all_ramsey_graphs_general(const std::vector<Graph>& mtf_list,
                                                       const Graph& g);

struct RamseyNumberOutcome {
    bool exact = false;
    int value = 0;  // exact ? R(K3,g) : proven lower bound value (R >= value)
};

// Smallest r with no mtf Ramsey graph of order r; r_start may carry a known
// lower bound. Exhausting the budget yields the non-exact outcome R >= r_max+1.
RamseyNumberOutcome ramsey_number(const Graph& g, int r_start, int r_max,
                                  const DriverOptions& opts = {});

struct ClassificationState {
    int r = 0;
    std::vector<Graph> maxgraphs;     // candidates proven R(K3,.) == r
    std::vector<Graph> ramseygraphs;  // triangle-free r-vertex witnesses of R > r
};

// One pass of the classification loop at order r. Candidates must all have
// R(K3,.) >= r; returns one flag per candidate, true when R == r. Denser
// candidates are handled first so the subgraph shortcut fires downstream.
std::vector<bool> classify_at_order(const std::vector<Graph>& candidates, int r,
                                    ClassificationState& state, const DriverOptions& opts = {});

class ClassifyCheckpoint;

struct ClassifyOutcome {
    std::map<int, int> histogram;  // exact Ramsey number -> count
    std::vector<std::pair<Graph, int>> verdicts;  // unresolved candidates get r_max + 1
    std::vector<Graph> unresolved;
};

ClassifyOutcome classify_candidates(std::vector<Graph> candidates, int r_max,
                                    const DriverOptions& opts = {},
                                    ClassifyCheckpoint* checkpoint = nullptr);

// Directory-backed persistence: verdicts.tsv plus per-order graph6 lists,
// rewritten after each resolved candidate.
class ClassifyCheckpoint {
public:
    explicit ClassifyCheckpoint(std::string dir);
    std::optional<int> lookup(const Graph& g) const;  // resolved verdict, if any
    void record(const Graph& g, int verdict, const std::optional<Graph>& witness);
    void save_order_state(const ClassificationState& state);
    std::vector<Graph> load_ramseygraphs(int r) const;
    std::vector<Graph> load_maxgraphs(int r) const;

private:
    std::string dir_;
    std::map<std::string, int> resolved_;  // canonical bytes -> verdict
};

}  // namespace ramsey
