#include "triangleramsey/oracle.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "triangleramsey/canon.hpp"
#include "triangleramsey/ramsey_driver.hpp"

namespace ramsey {
namespace oracle {

namespace {

// Row-by-row assignment: the row of vertex k against earlier vertices must
// be an independent set of the partial graph, which is exactly the
// triangle-free condition. cover[v] tracks the vertices adjacent to v or
// sharing a neighbour with v; at a leaf all pairs must be covered.
struct MtfScan {
    int n;
    Graph g;
    std::array<Bits, kMaxVertices> cover{};
    std::vector<Graph>* out;
    std::unordered_set<std::string>* seen;

    void place_row(int k) {
        if (k == n) {
            bool ok = true;
            for (int v = 0; v < n && ok; ++v)
                if ((cover[v] | vbit(v)) != low_mask(n)) ok = false;
            if (!ok) return;
            // Triangle-free by construction; coverage is the maximality test.
            if (!is_mtf(g)) throw std::logic_error("oracle coverage check disagrees with is_mtf");
            std::string bytes = canonical_form(g).bytes;
            if (seen->insert(bytes).second) out->push_back(g);
            return;
        }
        Bits partial = low_mask(k);
        if (k == n - 1) {
            // Pairs still uncovered can only be fixed by the last vertex,
            // which must be adjacent to both endpoints of each.
            Bits required = 0;
            for (int v = 0; v < k; ++v)
                if (Bits missing = partial & ~(cover[v] | vbit(v)); missing != 0)
                    required |= vbit(v) | missing;
            if (internal_has_edge(required)) return;
            enumerate_rows(k, required, partial & ~required);
            return;
        }
        enumerate_rows(k, 0, partial);
    }

    bool internal_has_edge(Bits s) const {
        bool bad = false;
        for_each_bit(s, [&](int v) {
            if (g.adj[v] & s) bad = true;
        });
        return bad;
    }

    // All independent supersets of `row` obtained by adding optional vertices.
    void enumerate_rows(int k, Bits row, Bits optional_verts) {
        if (optional_verts == 0) {
            apply_row(k, row);
            return;
        }
        int v = lowest_bit(optional_verts);
        Bits rest = optional_verts & ~vbit(v);
        enumerate_rows(k, row, rest);
        if ((g.adj[v] & row) == 0) enumerate_rows(k, row | vbit(v), rest);
    }

    void apply_row(int k, Bits row) {
        Bits saved_cover[kMaxVertices];
        for (int v = 0; v <= k; ++v) saved_cover[v] = cover[v];
        g.adj[k] = row;
        for_each_bit(row, [&](int v) { g.adj[v] |= vbit(k); });
        for_each_bit(row, [&](int v) {
            cover[v] |= row | vbit(k);
            cover[k] |= vbit(v);
        });
        for (int v = 0; v < k; ++v)
            if (!(row & vbit(v)) && (g.adj[v] & row)) {
                cover[v] |= vbit(k);
                cover[k] |= vbit(v);
            }
        place_row(k + 1);
        for_each_bit(row, [&](int v) { g.adj[v] &= ~vbit(k); });
        g.adj[k] = 0;
        for (int v = 0; v <= k; ++v) cover[v] = saved_cover[v];
    }
};

std::vector<GoodDominatingSet> scan_good_sets(const Graph& g) {
    std::vector<GoodDominatingSet> out;
    for (Bits s = 1; s < (Bits{1} << g.n); ++s) {
        if (!is_good_dominating_set(g, s)) continue;
        GoodDominatingSet gds;
        gds.set = s;
        gds.internal_edges = internal_edges_of(g, s);
        if (!gds.internal_edges.empty()) {
            gds.kind = 2;
        } else {
            gds.kind = 1;
            for (int v = 0; v < g.n; ++v)
                if (g.adj[v] == s) {
                    gds.kind = 0;
                    gds.witness_vertex = v;
                    break;
                }
        }
        out.push_back(std::move(gds));
    }
    return out;
}

}  // namespace

std::vector<Graph> brute_mtf(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("brute_mtf: order out of budget (1..10)");
    std::vector<Graph> out;
    std::unordered_set<std::string> seen;
    MtfScan scan;
    scan.n = n;
    scan.g = Graph(n);
    scan.out = &out;
    scan.seen = &seen;
    scan.place_row(1);  // vertex 0 has an empty row
    return out;
}

std::vector<GoodDominatingSet> brute_good_sets(const Graph& g) {
    if (g.n > 12) throw std::invalid_argument("brute_good_sets: order out of budget (<= 12)");
    return scan_good_sets(g);
}

std::vector<Graph> mtf_universe(int n) {
    if (n < 1 || n > 14) throw std::invalid_argument("mtf_universe: order out of budget (<= 14)");
    static std::mutex mu;
    static std::vector<std::vector<Graph>> memo{{}, {Graph(1)}};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(memo.size()) <= n) {
        std::vector<Graph> next;
        std::unordered_set<std::string> seen;
        for (const Graph& g : memo.back()) {
            for (const GoodDominatingSet& s : scan_good_sets(g)) {
                Graph child = expand(g, s);
                if (!is_mtf(child)) throw std::logic_error("expansion of a good set is not mtf");
                if (seen.insert(canonical_form(child).bytes).second) next.push_back(child);
            }
        }
        memo.push_back(std::move(next));
    }
    return memo[n];
}

int brute_ramsey_number(const Graph& g, int r_max) {
    if (g.n < 1 || g.n > 5 || r_max > 14)
        throw std::invalid_argument("brute_ramsey_number: budget is |V(g)| <= 5, r_max <= 14");
    for (int r = 1; r <= r_max; ++r) {
        bool any = false;
        for (const Graph& m : mtf_universe(r))
            if (verify_ramsey_graph(m, g)) {
                any = true;
                break;
            }
        if (!any) return r;
    }
    throw std::runtime_error("brute_ramsey_number: budget exceeded");
}

namespace {

void all_graphs_rec(Graph& g, int i, int j, std::vector<Graph>& out,
                    std::unordered_set<std::string>& seen, bool connected_only) {
    if (i >= g.n - 1) {
        if (connected_only && !is_connected(g)) return;
        if (seen.insert(canonical_form(g).bytes).second) out.push_back(g);
        return;
    }
    int ni = i, nj = j + 1;
    if (nj == g.n) {
        ni = i + 1;
        nj = ni + 1;
    }
    all_graphs_rec(g, ni, nj, out, seen, connected_only);
    g.add_edge(i, j);
    all_graphs_rec(g, ni, nj, out, seen, connected_only);
    g.remove_edge(i, j);
}

}  // namespace

std::vector<Graph> all_graphs(int n, bool connected_only) {
    if (n < 1 || n > 7) throw std::invalid_argument("all_graphs: order out of budget (<= 7)");
    std::vector<Graph> out;
    std::unordered_set<std::string> seen;
    Graph g(n);
    if (n == 1) return {g};
    all_graphs_rec(g, 0, 1, out, seen, connected_only);
    return out;
}

std::vector<Graph> all_triangle_free_graphs(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("all_triangle_free_graphs: order out of budget (<= 8)");
    std::vector<Graph> out;
    std::unordered_set<std::string> seen;
    Graph g(n);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            if (seen.insert(canonical_form(g).bytes).second) out.push_back(g);
            return;
        }
        Bits partial = low_mask(k);
        auto rows = [&](auto&& rows_self, Bits row, Bits rest) -> void {
            if (rest == 0) {
                g.adj[k] = row;
                for_each_bit(row, [&](int v) { g.adj[v] |= vbit(k); });
                self(self, k + 1);
                for_each_bit(row, [&](int v) { g.adj[v] &= ~vbit(k); });
                g.adj[k] = 0;
                return;
            }
            int v = lowest_bit(rest);
            rows_self(rows_self, row, rest & ~vbit(v));
            if ((g.adj[v] & row) == 0) rows_self(rows_self, row | vbit(v), rest & ~vbit(v));
        };
        rows(rows, 0, partial);
    };
    rec(rec, 1);
    return out;
}

std::vector<OracleReport> compare_mtf_generation(int min_n, int max_n) {
    std::vector<OracleReport> reports;
    for (int n = min_n; n <= max_n; ++n) {
        std::unordered_set<std::string> engine_set;
        MtfGenerator gen({n, 1, false},
                         [&](const Graph& g) { engine_set.insert(canonical_form(g).bytes); });
        gen.run();
        std::unordered_set<std::string> oracle_set;
        for (const Graph& g : brute_mtf(n)) oracle_set.insert(canonical_form(g).bytes);
        OracleReport r;
        r.instance = "mtf graphs, order " + std::to_string(n);
        r.oracle_answer = std::to_string(oracle_set.size()) + " classes";
        r.engine_answer = std::to_string(engine_set.size()) + " classes";
        r.match = engine_set == oracle_set;
        reports.push_back(std::move(r));
    }
    return reports;
}

std::string to_tsv(const std::vector<OracleReport>& reports) {
    std::string out = "# instance\toracle\tengine\tmatch\n";
    for (const auto& r : reports)
        out += r.instance + "\t" + r.oracle_answer + "\t" + r.engine_answer + "\t" +
               (r.match ? "yes" : "NO") + "\n";
    return out;
}

}  // namespace oracle
}  // namespace ramsey
