#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

inline constexpr int kMaxVertices = 64;

// Vertex sets over 0..63 as one machine word.
using Bits = std::uint64_t;

inline constexpr Bits vbit(int v) { return Bits{1} << v; }
inline int popcount(Bits b) { return std::popcount(b); }
inline int lowest_bit(Bits b) { return std::countr_zero(b); }

// Mask of the n lowest bits.
inline constexpr Bits low_mask(int n) {
    return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1;
}

template <typename F>
inline void for_each_bit(Bits b, F&& f) {
    while (b) {
        f(std::countr_zero(b));
        b &= b - 1;
    }
}

// Dense undirected graph on at most 64 vertices. Row v holds N(v) as a bit
// set. Invariants: symmetric, no self-loops, bits >= n clear.
struct Graph {
    int n = 0;
    std::array<Bits, kMaxVertices> adj{};

    Graph() = default;
    explicit Graph(int vertices);

    Bits vertices() const { return low_mask(n); }
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    int degree(int v) const { return popcount(adj[v]); }
    int min_degree() const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;
};

Graph empty_graph(int n);

Graph complement(const Graph& g);
bool is_triangle_free(const Graph& g);
// Maximal triangle-free: triangle-free and every non-adjacent pair has a
// common neighbour (equivalently, adding any edge closes a triangle).
bool is_mtf(const Graph& g);
bool has_diameter_at_most_two(const Graph& g);
bool is_connected(const Graph& g);

// Subgraph induced by s, vertices relabeled in ascending order of s.
Graph induced_subgraph(const Graph& g, Bits s);
// Monomorphism test: pattern embeds injectively into host, edges to edges
// (not necessarily induced).
bool contains_subgraph(const Graph& host, const Graph& pattern);
// Bijection test: small.n == big_pattern.n and some bijection maps every
// edge of small onto an edge of big_pattern.
bool spanning_subgraph_of(const Graph& small, const Graph& big_pattern);

// Family constructors. Vertex numbering is fixed: centers first, then
// leaves in index order, so tests are deterministic.
Graph complete(int n);
Graph complete_minus(int n, const Graph& removed);
Graph star(int s);                   // K_{1,s}: center 0, leaves 1..s
Graph path(int x);                   // P_x: 0-1-...-(x-1)
Graph cycle(int n);
Graph t_plus(int s);                 // K_{1,s} plus a pendant on leaf 1 (vertex s+1)
Graph delta_graph(int s);            // K_{1,s} plus the edge (1,2)
Graph double_star(int s, int t);     // centers 0,1 joined; s leaves on 0, t on 1
Graph disjoint_union(const Graph& g1, const Graph& g2);

// graph6 encoding, bit-exact per the standard format.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

}  // namespace ramsey
