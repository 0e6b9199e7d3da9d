#include "triangleramsey/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace ramsey {

Graph::Graph(int vertices) : n(vertices) {
    if (vertices < 0 || vertices > kMaxVertices)
        throw std::invalid_argument("graph order out of range 0..64");
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self loop");
    adj[u] |= vbit(v);
    adj[v] |= vbit(u);
}

void Graph::remove_edge(int u, int v) {
    adj[u] &= ~vbit(v);
    adj[v] &= ~vbit(u);
}

int Graph::min_degree() const {
    int m = kMaxVertices + 1;
    for (int v = 0; v < n; ++v) m = std::min(m, degree(v));
    return m;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> result;
    for (int v = 0; v < n; ++v)
        for_each_bit(adj[v] & ~low_mask(v + 1), [&](int w) { result.emplace_back(v, w); });
    return result;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complement(const Graph& g) {
    Graph c(g.n);
    const Bits all = g.vertices();
    for (int v = 0; v < g.n; ++v) c.adj[v] = (~g.adj[v]) & all & ~vbit(v);
    return c;
}

bool is_triangle_free(const Graph& g) {
    for (int v = 0; v < g.n; ++v) {
        Bits higher = g.adj[v] & ~low_mask(v + 1);
        bool bad = false;
        for_each_bit(higher, [&](int w) {
            if (g.adj[v] & g.adj[w]) bad = true;
        });
        if (bad) return false;
    }
    return true;
}

bool has_diameter_at_most_two(const Graph& g) {
    for (int v = 0; v < g.n; ++v) {
        Bits non_nbrs = ~g.adj[v] & g.vertices() & ~vbit(v) & ~low_mask(v + 1);
        bool bad = false;
        for_each_bit(non_nbrs, [&](int w) {
            if ((g.adj[v] & g.adj[w]) == 0) bad = true;
        });
        if (bad) return false;
    }
    return true;
}

bool is_mtf(const Graph& g) {
    // Adding a non-edge (u,v) closes a triangle iff u,v share a neighbour,
    // so maximality is exactly the diameter-2 condition on non-edges.
    return is_triangle_free(g) && has_diameter_at_most_two(g);
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    Bits seen = vbit(0);
    for (;;) {
        Bits next = seen;
        for_each_bit(seen, [&](int v) { next |= g.adj[v]; });
        if (next == seen) break;
        seen = next;
    }
    return seen == g.vertices();
}

Graph induced_subgraph(const Graph& g, Bits s) {
    s &= g.vertices();
    if (s == 0) throw std::invalid_argument("induced_subgraph: empty vertex set");
    int map[kMaxVertices];
    int k = 0;
    for_each_bit(s, [&](int v) { map[v] = k++; });
    Graph h(k);
    for_each_bit(s, [&](int v) {
        for_each_bit(g.adj[v] & s, [&](int w) {
            if (w > v) h.add_edge(map[v], map[w]);
        });
    });
    return h;
}

namespace {

// Pattern vertices ordered by descending degree, ties broken in favour of
// vertices adjacent to the already-ordered prefix.
std::vector<int> pattern_order(const Graph& pattern) {
    std::vector<int> order;
    Bits chosen = 0;
    for (int step = 0; step < pattern.n; ++step) {
        int best = -1;
        int best_deg = -1, best_conn = -1;
        for (int v = 0; v < pattern.n; ++v) {
            if (chosen & vbit(v)) continue;
            int deg = pattern.degree(v);
            int conn = (pattern.adj[v] & chosen) ? 1 : 0;
            if (deg > best_deg || (deg == best_deg && conn > best_conn)) {
                best = v;
                best_deg = deg;
                best_conn = conn;
            }
        }
        order.push_back(best);
        chosen |= vbit(best);
    }
    return order;
}

bool embed(const Graph& host, const Graph& pattern, const std::vector<int>& order,
           size_t depth, std::array<int, kMaxVertices>& image, Bits used) {
    if (depth == order.size()) return true;
    int u = order[depth];
    Bits cand = host.vertices() & ~used;
    for_each_bit(pattern.adj[u], [&](int w) {
        if (image[w] >= 0) cand &= host.adj[image[w]];
    });
    bool ok = false;
    for_each_bit(cand, [&](int v) {
        if (ok) return;
        if (host.degree(v) < pattern.degree(u)) return;
        image[u] = v;
        if (embed(host, pattern, order, depth + 1, image, used | vbit(v))) ok = true;
        image[u] = -1;
    });
    return ok;
}

}  // namespace

bool contains_subgraph(const Graph& host, const Graph& pattern) {
    if (pattern.n > host.n) return false;
    if (pattern.n == 0) return true;
    std::vector<int> order = pattern_order(pattern);
    std::array<int, kMaxVertices> image;
    image.fill(-1);
    return embed(host, pattern, order, 0, image, 0);
}

bool spanning_subgraph_of(const Graph& small, const Graph& big_pattern) {
    if (small.n != big_pattern.n)
        throw std::invalid_argument("spanning_subgraph_of: order mismatch");
    if (small.n == 0) return true;
    std::vector<int> order = pattern_order(small);
    std::array<int, kMaxVertices> image;
    image.fill(-1);
    // Same backtracking as contains_subgraph; the equal orders force a
    // bijection.
    return embed(big_pattern, small, order, 0, image, 0);
}

Graph complete(int n) {
    Graph g(n);
    if (n < 1) throw std::invalid_argument("complete: n must be positive");
    for (int v = 0; v < n; ++v) g.adj[v] = low_mask(n) & ~vbit(v);
    return g;
}

Graph complete_minus(int n, const Graph& removed) {
    if (removed.n > n) throw std::invalid_argument("complete_minus: removed graph too large");
    Graph g = complete(n);
    for (auto [u, v] : removed.edges()) g.remove_edge(u, v);
    return g;
}

Graph star(int s) {
    if (s < 1) throw std::invalid_argument("star: s must be positive");
    Graph g(s + 1);
    for (int v = 1; v <= s; ++v) g.add_edge(0, v);
    return g;
}

Graph path(int x) {
    if (x < 1) throw std::invalid_argument("path: x must be positive");
    Graph g(x);
    for (int v = 0; v + 1 < x; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph t_plus(int s) {
    if (s < 1) throw std::invalid_argument("t_plus: s must be positive");
    Graph g(s + 2);
    for (int v = 1; v <= s; ++v) g.add_edge(0, v);
    g.add_edge(1, s + 1);
    return g;
}

Graph delta_graph(int s) {
    if (s < 2) throw std::invalid_argument("delta: s must be at least 2");
    Graph g = star(s);
    g.add_edge(1, 2);
    return g;
}

Graph double_star(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("double_star: s,t must be positive");
    Graph g(s + t + 2);
    g.add_edge(0, 1);
    for (int i = 0; i < s; ++i) g.add_edge(0, 2 + i);
    for (int i = 0; i < t; ++i) g.add_edge(1, 2 + s + i);
    return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    if (g1.n + g2.n > kMaxVertices) throw std::invalid_argument("disjoint_union: too many vertices");
    Graph g(g1.n + g2.n);
    for (int v = 0; v < g1.n; ++v) g.adj[v] = g1.adj[v];
    for (int v = 0; v < g2.n; ++v) g.adj[g1.n + v] = g2.adj[v] << g1.n;
    return g;
}

std::string to_graph6(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("graph6: empty graph");
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((g.n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph from_graph6(const std::string& line) {
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw std::invalid_argument("graph6: truncated input");
        int c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };
    int n;
    int first = next();
    if (first == 63) {
        int a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = first;
    }
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("graph6: order out of range");
    Graph g(n);
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
            --nbits;
        }
    }
    if (nbits > 0 && (acc & low_mask(nbits)) != 0)
        throw std::invalid_argument("graph6: nonzero padding bits");
    if (pos != line.size()) throw std::invalid_argument("graph6: trailing bytes");
    return g;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        graphs.push_back(from_graph6(line));
    }
    return graphs;
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (const Graph& g : graphs) out << to_graph6(g) << '\n';
}

}  // namespace ramsey
