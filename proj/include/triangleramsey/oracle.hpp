#pragma once

#include <string>
#include <vector>

#include "triangleramsey/graph.hpp"
#include "triangleramsey/mtfgen.hpp"

namespace ramsey {
namespace oracle {

// Exhaustive depth-first edge assignment over the adjacency rows with
// triangle-free pruning, filtered by is_mtf and deduplicated by canonical
// form. Shares only graphcore and canon with the engine.
std::vector<Graph> brute_mtf(int n);  // n <= 10

// Alternative exhaustive enumeration: expand every good dominating set of
// every order-(n-1) mtf graph (good sets found by subset scan) and dedup by
// canonical form. Reaches n = 14 comfortably; cross-checked against
// brute_mtf on the shared range.
std::vector<Graph> mtf_universe(int n);  // n <= 16

// All good dominating sets by scanning every vertex subset.
std::vector<GoodDominatingSet> brute_good_sets(const Graph& g);  // n <= 12

// Smallest r such that no graph in the order-r mtf universe is a Ramsey
// graph for g, judged by verify_ramsey_graph alone.
int brute_ramsey_number(const Graph& g, int r_max);  // |V(g)| <= 5, r_max <= 14

// All graphs of order n up to isomorphism (brute enumeration + canonical
// dedup); optionally only the connected ones.
std::vector<Graph> all_graphs(int n, bool connected_only = false);  // n <= 7

// All triangle-free graphs of order n up to isomorphism.
std::vector<Graph> all_triangle_free_graphs(int n);  // n <= 8

// One engine-vs-oracle comparison; a mismatch anywhere fails the suite.
struct OracleReport {
    std::string instance;
    std::string oracle_answer;
    std::string engine_answer;
    bool match = false;
};

// Set-compare the optimized generator against brute_mtf order by order.
std::vector<OracleReport> compare_mtf_generation(int min_n, int max_n);

std::string to_tsv(const std::vector<OracleReport>& reports);

}  // namespace oracle
}  // namespace ramsey
