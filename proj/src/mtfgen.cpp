#include "triangleramsey/mtfgen.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace ramsey {

bool is_dominating_set(const Graph& g, Bits s) {
    Bits covered = s;
    for_each_bit(s, [&](int v) { covered |= g.adj[v]; });
    return covered == g.vertices();
}

std::vector<std::pair<int, int>> internal_edges_of(const Graph& g, Bits s) {
    std::vector<std::pair<int, int>> edges;
    for_each_bit(s, [&](int v) {
        for_each_bit(g.adj[v] & s & ~low_mask(v + 1), [&](int w) { edges.emplace_back(v, w); });
    });
    return edges;
}

bool is_good_dominating_set(const Graph& g, Bits s) {
    s &= g.vertices();
    if (s == 0 || !is_dominating_set(g, s)) return false;
    // Distances are taken after deleting the edges inside s.
    Graph h = g;
    for_each_bit(s, [&](int v) { h.adj[v] &= ~s; });
    const Bits outside = g.vertices() & ~s;
    bool good = true;
    for_each_bit(s, [&](int v) {
        Bits ball = vbit(v) | h.adj[v];
        for_each_bit(h.adj[v], [&](int w) { ball |= h.adj[w]; });
        if (outside & ~ball) good = false;
    });
    return good;
}

Graph expand(const Graph& g, const GoodDominatingSet& s) {
    if (g.n + 1 > kMaxVertices) throw std::invalid_argument("expand: vertex cap exceeded");
    if (!is_good_dominating_set(g, s.set))
        throw std::invalid_argument("expand: set is not a good dominating set");
    Graph child(g.n + 1);
    for (int v = 0; v < g.n; ++v)
        child.adj[v] = (s.set & vbit(v)) ? (g.adj[v] & ~s.set) : g.adj[v];
    child.adj[g.n] = s.set;
    for_each_bit(s.set, [&](int v) { child.adj[v] |= vbit(g.n); });
    return child;
}

std::vector<Bits> double_classes(const Graph& g) {
    std::vector<Bits> classes;
    Bits grouped = 0;
    for (int v = 0; v < g.n; ++v) {
        if (grouped & vbit(v)) continue;
        Bits cls = vbit(v);
        for (int w = v + 1; w < g.n; ++w)
            if (g.adj[w] == g.adj[v]) cls |= vbit(w);
        if (popcount(cls) >= 2) {
            classes.push_back(cls);
            grouped |= cls;
        }
    }
    return classes;
}

namespace {

Graph remove_vertex(const Graph& g, int v) {
    return induced_subgraph(g, g.vertices() & ~vbit(v));
}

bool is_double_vertex(const Graph& g, int v) {
    for (int w = 0; w < g.n; ++w)
        if (w != v && g.adj[w] == g.adj[v]) return true;
    return false;
}

int neighbor_degree_sum(const Graph& g, int v) {
    int sum = 0;
    for_each_bit(g.adj[v], [&](int w) { sum += g.degree(w); });
    return sum;
}

// Descending neighbour degrees, negated so ascending lexicographic
// comparison prefers the larger sorted string (the power-sum order).
std::vector<int> x3_key(const Graph& g, int v) {
    std::vector<int> degs;
    for_each_bit(g.adj[v], [&](int w) { degs.push_back(-g.degree(w)); });
    std::sort(degs.begin(), degs.end());
    return degs;
}

}  // namespace

bool ReductionKey::operator<(const ReductionKey& o) const {
    if (x0 != o.x0) return x0 < o.x0;
    if (x1 != o.x1) return x1 < o.x1;
    if (x2 != o.x2) return x2 < o.x2;
    if (x3 != o.x3) return x3 < o.x3;
    if (x4.has_value() != o.x4.has_value())
        throw std::logic_error("ReductionKey: comparing keys with mismatched x4 state");
    if (x4 && *x4 != *o.x4) return *x4 < *o.x4;
    return false;
}

bool ReductionKey::operator==(const ReductionKey& o) const {
    return x0 == o.x0 && x1 == o.x1 && x2 == o.x2 && x3 == o.x3 && x4 == o.x4;
}

ReductionKey reduction_key(const Graph& g_child, int v) {
    ReductionKey k;
    if (is_double_vertex(g_child, v))
        k.x0 = 0;
    else if (is_mtf(remove_vertex(g_child, v)))
        k.x0 = 1;
    else
        k.x0 = 2;
    int deg = g_child.degree(v);
    k.x1 = (k.x0 <= 1) ? -deg : deg;
    k.x2 = -neighbor_degree_sum(g_child, v);
    k.x3 = x3_key(g_child, v);
    return k;
}

namespace {

// All minimal-cardinality edge sets inside `nb` whose insertion makes
// `base` mtf. Empty result means no completion exists; a single empty set
// means base is already mtf.
std::vector<std::vector<std::pair<int, int>>> minimal_completions(Graph base, Bits nb) {
    if (is_mtf(base)) return {{}};
    std::vector<std::pair<int, int>> cand;
    for_each_bit(nb, [&](int a) {
        for_each_bit(nb & ~low_mask(a + 1), [&](int b) {
            if (!base.has_edge(a, b)) cand.emplace_back(a, b);
        });
    });
    std::vector<std::vector<std::pair<int, int>>> found;
    std::vector<int> pick;
    auto rec = [&](auto&& self, size_t from, int remaining) -> void {
        if (remaining == 0) {
            if (is_mtf(base)) {
                std::vector<std::pair<int, int>> e;
                for (int i : pick) e.push_back(cand[i]);
                found.push_back(std::move(e));
            }
            return;
        }
        for (size_t i = from; i + remaining <= cand.size() + 0u; ++i) {
            base.add_edge(cand[i].first, cand[i].second);
            if (is_triangle_free(base)) {
                pick.push_back(static_cast<int>(i));
                self(self, i + 1, remaining - 1);
                pick.pop_back();
            }
            base.remove_edge(cand[i].first, cand[i].second);
        }
    };
    for (size_t k = 1; k <= cand.size(); ++k) {
        rec(rec, 0, static_cast<int>(k));
        if (!found.empty()) break;
    }
    return found;
}

// Constructive existence check: repeatedly join a pair at distance > 2.
// Both endpoints of any such pair lie inside nb and never share a
// neighbour, so each insertion keeps the graph triangle-free and strictly
// shrinks the set of broken pairs.
bool completion_exists(Graph base, Bits nb) {
    for (;;) {
        if (is_mtf(base)) return true;
        bool progressed = false;
        for_each_bit(nb, [&](int a) {
            if (progressed) return;
            for_each_bit(nb & ~low_mask(a + 1), [&](int b) {
                if (progressed || base.has_edge(a, b)) return;
                if ((base.adj[a] & base.adj[b]) == 0) {
                    base.add_edge(a, b);
                    progressed = true;
                }
            });
        });
        if (!progressed) return false;
    }
}

std::vector<std::pair<int, int>> sorted_edges(std::vector<std::pair<int, int>> e) {
    for (auto& [a, b] : e)
        if (a > b) std::swap(a, b);
    std::sort(e.begin(), e.end());
    return e;
}

Graph with_edges(Graph g, const std::vector<std::pair<int, int>>& edges) {
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

}  // namespace

std::vector<std::pair<int, int>> canonical_edge_insertion(Bits reduced_neighborhood,
                                                          const Graph& g_minus_v) {
    auto completions = minimal_completions(g_minus_v, reduced_neighborhood);
    if (completions.empty())
        throw std::invalid_argument("canonical_edge_insertion: no completing edge set exists");
    std::vector<std::pair<int, int>> best;
    std::string best_bytes;
    bool have = false;
    for (auto& e : completions) {
        auto edges = sorted_edges(e);
        std::string bytes = canonical_form(with_edges(g_minus_v, edges)).bytes;
        if (!have || bytes < best_bytes || (bytes == best_bytes && edges < best)) {
            have = true;
            best_bytes = std::move(bytes);
            best = std::move(edges);
        }
    }
    return best;
}

namespace {

// Keep the candidates minimizing key(v); returns true if w survived.
template <typename KeyFn>
bool filter_stage(std::vector<int>& cand, int w, KeyFn key) {
    auto best = key(cand[0]);
    for (size_t i = 1; i < cand.size(); ++i) {
        auto k = key(cand[i]);
        if (k < best) best = k;
    }
    std::vector<int> kept;
    for (int v : cand)
        if (key(v) == best) kept.push_back(v);
    cand = std::move(kept);
    return std::find(cand.begin(), cand.end(), w) != cand.end();
}

bool all_in(const std::vector<int>& cand, Bits mask) {
    for (int v : cand)
        if (!(mask & vbit(v))) return false;
    return true;
}

// -max canonical label over v's orbit; smaller is better, so we filter on
// the stored (negated) value directly.
std::vector<int> orbit_rank_key(const CanonicalForm& cf, int n) {
    std::vector<int> rank(n, 0);
    for (int v = 0; v < n; ++v) {
        int best = -1;
        for (int w = 0; w < n; ++w)
            if (cf.orbit[w] == cf.orbit[v]) best = std::max(best, cf.labeling[w]);
        rank[v] = -best;
    }
    return rank;
}

AcceptanceResult accepted_with(const CanonicalForm* cf) {
    AcceptanceResult r;
    r.accepted = true;
    if (cf) {
        r.child_generators_known = true;
        r.child_generators = cf->generators;
    }
    return r;
}

AcceptanceResult rejected() { return {}; }

AcceptanceResult accept_kind0(const Graph& child, int w) {
    auto classes = double_classes(child);
    Bits w_class = 0, all_doubles = 0;
    for (Bits c : classes) {
        all_doubles |= c;
        if (c & vbit(w)) w_class = c;
    }
    if (w_class == 0) throw std::logic_error("kind-0 child has no double partner");
    if (popcount(all_doubles) == 2) return accepted_with(nullptr);

    std::vector<int> cand;
    for_each_bit(all_doubles, [&](int v) { cand.push_back(v); });
    if (!filter_stage(cand, w, [&](int v) { return -child.degree(v); })) return rejected();
    if (all_in(cand, w_class)) return accepted_with(nullptr);
    if (!filter_stage(cand, w, [&](int v) { return -neighbor_degree_sum(child, v); }))
        return rejected();
    if (all_in(cand, w_class)) return accepted_with(nullptr);
    if (!filter_stage(cand, w, [&](int v) { return x3_key(child, v); })) return rejected();
    if (all_in(cand, w_class)) return accepted_with(nullptr);

    CanonicalForm cf = canonical_form(child);
    auto rank = orbit_rank_key(cf, child.n);
    if (!filter_stage(cand, w, [&](int v) { return rank[v]; })) return rejected();
    return accepted_with(&cf);
}

AcceptanceResult accept_kind1(const Graph& child, int w) {
    if (!double_classes(child).empty()) return rejected();
    std::vector<int> cand;
    for (int v = 0; v < child.n; ++v)
        if (is_mtf(remove_vertex(child, v))) cand.push_back(v);
    if (std::find(cand.begin(), cand.end(), w) == cand.end())
        throw std::logic_error("kind-1 child does not reduce to its parent");

    if (!filter_stage(cand, w, [&](int v) { return -child.degree(v); })) return rejected();
    if (cand.size() == 1) return accepted_with(nullptr);
    if (!filter_stage(cand, w, [&](int v) { return -neighbor_degree_sum(child, v); }))
        return rejected();
    if (cand.size() == 1) return accepted_with(nullptr);
    if (!filter_stage(cand, w, [&](int v) { return x3_key(child, v); })) return rejected();
    if (cand.size() == 1) return accepted_with(nullptr);

    CanonicalForm cf = canonical_form(child);
    auto rank = orbit_rank_key(cf, child.n);
    if (!filter_stage(cand, w, [&](int v) { return rank[v]; })) return rejected();
    return accepted_with(&cf);
}

int map_down(int v, int w) { return v < w ? v : v - 1; }
int map_up(int v, int w) { return v < w ? v : v + 1; }

std::vector<std::pair<int, int>> edges_to_child_labels(const std::vector<std::pair<int, int>>& e,
                                                       int w) {
    std::vector<std::pair<int, int>> r;
    r.reserve(e.size());
    for (auto [a, b] : e) r.emplace_back(map_up(a, w), map_up(b, w));
    return sorted_edges(r);
}

// Orbit-invariant encoding of the pair (vertex, edge set) under the child's
// automorphism group: the minimum over all group elements of the
// canonically relabeled (vertex, sorted edge list). Constant exactly on the
// orbit of the pair, and independent of the input labeling.
std::pair<int, std::vector<std::pair<int, int>>> pair_orbit_key(
    const std::vector<Perm>& elements, const Perm& label, int w,
    const std::vector<std::pair<int, int>>& edges_child) {
    std::pair<int, std::vector<std::pair<int, int>>> best;
    bool have = false;
    for (const Perm& sigma : elements) {
        std::pair<int, std::vector<std::pair<int, int>>> cur;
        cur.first = label[sigma[w]];
        cur.second.reserve(edges_child.size());
        for (auto [a, b] : edges_child) {
            int x = label[sigma[a]], y = label[sigma[b]];
            cur.second.emplace_back(std::min(x, y), std::max(x, y));
        }
        std::sort(cur.second.begin(), cur.second.end());
        if (!have || cur < best) {
            have = true;
            best = std::move(cur);
        }
    }
    return best;
}

AcceptanceResult accept_kind2(const Graph& child, int w,
                              const std::vector<std::pair<int, int>>& removed) {
    if (!double_classes(child).empty()) return rejected();
    for (int v = 0; v < child.n; ++v)
        if (v != w && is_mtf(remove_vertex(child, v))) return rejected();

    std::vector<int> cand;
    for (int v = 0; v < child.n; ++v) cand.push_back(v);
    // x1 = +degree for kind 2: the lowest degree wins.
    if (!filter_stage(cand, w, [&](int v) { return child.degree(v); })) return rejected();
    if (!filter_stage(cand, w, [&](int v) { return -neighbor_degree_sum(child, v); }))
        return rejected();
    if (!filter_stage(cand, w, [&](int v) { return x3_key(child, v); })) return rejected();

    std::optional<CanonicalForm> cf;
    if (cand.size() > 1) {
        cf = canonical_form(child);
        auto rank = orbit_rank_key(*cf, child.n);
        if (!filter_stage(cand, w, [&](int v) { return rank[v]; })) return rejected();
    }

    // The removed vertex is settled; decide whether the removed edge set is
    // equivalent to the canonical insertion choice.
    Graph base = remove_vertex(child, w);
    Bits nb = 0;
    for_each_bit(child.adj[w], [&](int v) { nb |= vbit(map_down(v, w)); });
    auto completions = minimal_completions(base, nb);
    if (completions.empty()) throw std::logic_error("kind-2 child admits no completion");
    auto removed_norm = sorted_edges(removed);
    if (completions[0].size() < removed_norm.size()) return rejected();
    if (completions[0].size() > removed_norm.size())
        throw std::logic_error("removed edge set smaller than minimal completion");

    std::vector<std::vector<std::pair<int, int>>> base_sets;
    for (auto& e : completions) base_sets.push_back(sorted_edges(e));
    if (base_sets.size() == 1) return accepted_with(cf ? &*cf : nullptr);

    // Tie-break 1: canonical bytes of the candidate parents.
    std::vector<std::string> bytes(base_sets.size());
    std::string best_bytes;
    for (size_t i = 0; i < base_sets.size(); ++i) {
        bytes[i] = canonical_form(with_edges(base, base_sets[i])).bytes;
        if (i == 0 || bytes[i] < best_bytes) best_bytes = bytes[i];
    }
    std::vector<std::vector<std::pair<int, int>>> surviving;
    for (size_t i = 0; i < base_sets.size(); ++i)
        if (bytes[i] == best_bytes) surviving.push_back(base_sets[i]);

    std::vector<std::pair<int, int>> removed_base;
    for (auto [a, b] : removed_norm) removed_base.emplace_back(map_down(a, w), map_down(b, w));
    removed_base = sorted_edges(removed_base);
    if (std::find(surviving.begin(), surviving.end(), removed_base) == surviving.end())
        return rejected();
    if (surviving.size() == 1) return accepted_with(cf ? &*cf : nullptr);

    // Tie-break 2: smallest orbit key among the surviving insertion sets.
    if (!cf) cf = canonical_form(child);
    auto elements = enumerate_group(cf->generators, child.n);
    auto removed_key = pair_orbit_key(elements, cf->labeling, w, removed_norm);
    for (auto& e : surviving) {
        auto key = pair_orbit_key(elements, cf->labeling, w, edges_to_child_labels(e, w));
        if (key < removed_key) return rejected();
    }
    return accepted_with(&*cf);
}

}  // namespace

AcceptanceResult accept_expansion(const Graph& child, const ProvenanceTag& prov) {
    switch (prov.kind) {
        case 0: return accept_kind0(child, prov.new_vertex);
        case 1: return accept_kind1(child, prov.new_vertex);
        case 2: return accept_kind2(child, prov.new_vertex, prov.removed_edges);
        default: throw std::invalid_argument("accept_expansion: bad kind");
    }
}

bool is_canonical_expansion(const Graph& parent, const GoodDominatingSet& s, const Graph& child,
                            int new_vertex) {
    if (new_vertex != parent.n || child.n != parent.n + 1)
        throw std::invalid_argument("is_canonical_expansion: child/new_vertex mismatch");
    if (expand(parent, s) != child)
        throw std::invalid_argument("is_canonical_expansion: child is not expand(parent, s)");
    ProvenanceTag prov{s.kind, new_vertex, internal_edges_of(parent, s.set), s.set};
    return accept_expansion(child, prov).accepted;
}

bool debug_acceptance(const Graph& child, const ProvenanceTag& prov) {
    const int w = prov.new_vertex;
    CanonicalForm cf = canonical_form(child);
    auto rank = orbit_rank_key(cf, child.n);

    // Complete 5-tuples for every vertex that admits a reduction.
    std::vector<int> cand;
    std::vector<ReductionKey> keys(child.n);
    for (int v = 0; v < child.n; ++v) {
        ReductionKey k = reduction_key(child, v);
        if (k.x0 == 2) {
            Graph base = remove_vertex(child, v);
            Bits nb = 0;
            for_each_bit(child.adj[v], [&](int u) { nb |= vbit(map_down(u, v)); });
            if (!completion_exists(base, nb)) continue;  // no valid reduction here
        }
        k.x4 = rank[v];
        keys[v] = std::move(k);
        cand.push_back(v);
    }
    ReductionKey best = keys[cand[0]];
    for (int v : cand)
        if (keys[v] < best) best = keys[v];
    if (!(keys[w] == best)) return false;
    if (keys[w].x0 != prov.kind)
        throw std::logic_error("debug_acceptance: provenance kind does not match x0");
    if (prov.kind <= 1) return true;

    Graph base = remove_vertex(child, w);
    Bits nb = 0;
    for_each_bit(child.adj[w], [&](int v) { nb |= vbit(map_down(v, w)); });
    auto completions = minimal_completions(base, nb);
    auto removed_norm = sorted_edges(prov.removed_edges);
    if (completions[0].size() != removed_norm.size()) return false;
    std::vector<std::pair<int, int>> removed_base;
    for (auto [a, b] : removed_norm) removed_base.emplace_back(map_down(a, w), map_down(b, w));
    removed_base = sorted_edges(removed_base);

    std::string best_bytes;
    std::vector<std::vector<std::pair<int, int>>> surviving;
    for (auto& e : completions) {
        auto edges = sorted_edges(e);
        std::string b = canonical_form(with_edges(base, edges)).bytes;
        if (surviving.empty() || b < best_bytes) {
            if (!surviving.empty() && b < best_bytes) surviving.clear();
            best_bytes = b;
            surviving.push_back(edges);
        } else if (b == best_bytes) {
            surviving.push_back(edges);
        }
    }
    if (std::find(surviving.begin(), surviving.end(), removed_base) == surviving.end())
        return false;
    auto elements = enumerate_group(cf.generators, child.n);
    auto removed_key = pair_orbit_key(elements, cf.labeling, w, removed_norm);
    for (auto& e : surviving) {
        auto key = pair_orbit_key(elements, cf.labeling, w, edges_to_child_labels(e, w));
        if (key < removed_key) return false;
    }
    return true;
}

// --- good dominating set enumeration -----------------------------------

namespace {

struct SetSearch {
    const Graph& g;
    int n;
    int max_size;
    bool independent_only;  // kind 1
    bool want_internal;     // kind 2
    bool assume_mtf;        // skip redundant goodness work for kinds 0/1
    const std::vector<Bits>* exact_hit = nullptr;
    Bits must_contain_if_max = 0;
    std::set<Bits> neighborhoods;
    std::vector<GoodDominatingSet> out;
    std::array<Bits, kMaxVertices + 1> reach{};

    SetSearch(const Graph& graph, int max_sz, bool indep, bool internal, bool mtf_input)
        : g(graph), n(graph.n), max_size(max_sz), independent_only(indep), want_internal(internal),
          assume_mtf(mtf_input) {
        for (int v = 0; v < n; ++v)
            if (g.adj[v]) neighborhoods.insert(g.adj[v]);
        for (int i = n; i >= 0; --i) {
            Bits hi = g.vertices() & ~low_mask(i);
            Bits r = hi;
            for (int u = 0; u < i; ++u)
                if (g.adj[u] & hi) r |= vbit(u);
            reach[i] = r;
        }
    }

    void run() { dfs(0, 0, 0, 0); }

    void dfs(int i, Bits cur, Bits covered, int size) {
        Bits uncovered = g.vertices() & ~covered;
        if (uncovered & ~reach[i]) return;  // some vertex can no longer be dominated
        if (i == n) {
            leaf(cur, covered, size);
            return;
        }
        dfs(i + 1, cur, covered, size);
        if (size == max_size) return;
        if (independent_only && (g.adj[i] & cur)) return;
        if (exact_hit) {
            for (Bits d : *exact_hit)
                if ((d & vbit(i)) && (d & cur)) return;  // would hit a double class twice
        }
        dfs(i + 1, cur | vbit(i), covered | vbit(i) | g.adj[i], size + 1);
    }

    void leaf(Bits cur, Bits covered, int size) {
        if (size == 0 || covered != g.vertices()) return;
        if (exact_hit) {
            for (Bits d : *exact_hit)
                if (!(d & cur)) return;
        }
        if (must_contain_if_max && size == max_size && (must_contain_if_max & ~cur)) return;
        auto internal = internal_edges_of(g, cur);
        GoodDominatingSet s;
        s.set = cur;
        if (internal.empty()) {
            if (want_internal) return;
            if (neighborhoods.count(cur)) return;  // kind 0, enumerated separately
            s.kind = 1;
            if (!assume_mtf && !is_good_dominating_set(g, cur)) return;
        } else {
            if (!want_internal) return;
            s.kind = 2;
            s.internal_edges = std::move(internal);
            if (!is_good_dominating_set(g, cur)) return;
        }
        out.push_back(std::move(s));
    }
};

std::vector<GoodDominatingSet> neighborhood_sets(const Graph& g, int max_size, bool assume_mtf) {
    std::vector<GoodDominatingSet> out;
    std::set<Bits> seen;
    for (int v = 0; v < g.n; ++v) {
        Bits s = g.adj[v];
        if (s == 0 || popcount(s) > max_size) continue;
        if (!seen.insert(s).second) continue;
        if (!assume_mtf && !is_good_dominating_set(g, s)) continue;
        GoodDominatingSet gds;
        gds.set = s;
        gds.kind = 0;
        gds.witness_vertex = v;
        out.push_back(std::move(gds));
    }
    return out;
}

}  // namespace

std::vector<GoodDominatingSet> enumerate_good_dominating_sets(const Graph& g, KindFilter kinds,
                                                              int max_size) {
    std::vector<GoodDominatingSet> out;
    if (kinds.k0)
        for (auto& s : neighborhood_sets(g, max_size, false)) out.push_back(std::move(s));
    if (kinds.k1) {
        SetSearch search(g, max_size, true, false, false);
        search.run();
        for (auto& s : search.out) out.push_back(std::move(s));
    }
    if (kinds.k2) {
        SetSearch search(g, max_size, false, true, false);
        search.run();
        for (auto& s : search.out) out.push_back(std::move(s));
    }
    return out;
}

// --- the generator -------------------------------------------------------

MtfGenerator::MtfGenerator(Options opts, Visitor visitor, ExpansionFilter* filter)
    : opts_(opts), visitor_(std::move(visitor)), filter_(filter) {
    if (opts_.target_n < 1 || opts_.target_n > kMaxVertices)
        throw std::invalid_argument("target order out of range 1..64");
}

std::vector<GoodDominatingSet> MtfGenerator::candidate_expansions(Node& node) {
    const Graph& g = node.g;
    auto classes = double_classes(g);
    bool has_doubles = !classes.empty();
    bool has_triple = false;
    int max_double_deg = 0;
    for (Bits c : classes) {
        if (popcount(c) >= 3) has_triple = true;
        max_double_deg = std::max(max_double_deg, g.degree(lowest_bit(c)));
    }

    std::vector<GoodDominatingSet> out;

    // Kind 0: one expansion per orbit of template vertices. A template with
    // degree below the top double-vertex degree cannot win on x1.
    auto orbits = vertex_orbits(node.gens, g.n);
    for (int v = 0; v < g.n; ++v) {
        if (orbits[v] != v || g.adj[v] == 0) continue;
        if (has_doubles && g.degree(v) < max_double_deg) continue;
        GoodDominatingSet s;
        s.set = g.adj[v];
        s.kind = 0;
        s.witness_vertex = v;
        out.push_back(std::move(s));
    }

    // Kind 1 only makes sense when no type-0 reduction can exist afterwards.
    if (!has_doubles) {
        SetSearch search(g, g.n, true, false, true);
        search.run();
        std::vector<Bits> masks;
        for (auto& s : search.out) masks.push_back(s.set);
        auto cls = set_orbit_classes(node.gens, masks);
        for (size_t i = 0; i < masks.size(); ++i)
            if (cls[i] == static_cast<int>(i)) out.push_back(std::move(search.out[i]));
    }

    // Kind 2: the child must end up double-free, so each double class is hit
    // exactly once and a class of three or more kills the kind outright. The
    // new vertex gets degree |S|, and a canonical type-2 reduction removes a
    // minimum-degree vertex, which bounds |S| by the minimum degree (+1 when
    // S swallows every minimum-degree vertex).
    if (!has_triple && g.n >= 2) {
        int m = g.min_degree();
        Bits min_deg_mask = 0;
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) == m) min_deg_mask |= vbit(v);
        SetSearch search(g, m + 1, false, true, true);
        search.exact_hit = &classes;
        search.must_contain_if_max = min_deg_mask;
        search.run();
        std::vector<Bits> masks;
        for (auto& s : search.out) masks.push_back(s.set);
        auto cls = set_orbit_classes(node.gens, masks);
        for (size_t i = 0; i < masks.size(); ++i)
            if (cls[i] == static_cast<int>(i)) out.push_back(std::move(search.out[i]));
    }
    return out;
}

void MtfGenerator::recurse(Node& node, GenerationStats& stats, ExpansionFilter* filter,
                           std::chrono::steady_clock::time_point t0) {
    if (stop_.load(std::memory_order_relaxed)) return;
    const int n = node.g.n;
    if (n >= opts_.target_n) {
        if (n == opts_.target_n) visitor_(node.g);
        return;
    }
    if (!node.gens_known) {
        node.gens = canonical_form(node.g).generators;
        node.gens_known = true;
    }
    bool parent_rigid = node.gens.empty();
    for (auto& s : candidate_expansions(node)) {
        if (stop_.load(std::memory_order_relaxed)) return;
        if (filter && !filter->admit_set(node.g, s)) continue;
        Graph child = expand(node.g, s);
        ProvenanceTag prov{s.kind, n, s.internal_edges, s.set};
        AcceptanceResult res = accept_expansion(child, prov);
        if (opts_.debug_verify) {
            ++debug_checks_;
            if (debug_acceptance(child, prov) != res.accepted)
                throw std::logic_error("staged acceptance disagrees with full recomputation");
        }
        if (!res.accepted) continue;
        stats.ensure(n + 1);
        auto& row = stats.orders[n + 1];
        row.total++;
        row.by_kind[s.kind]++;
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (filter && !filter->enter_child(child, prov)) continue;
        Node cn;
        cn.g = child;
        if (res.child_generators_known) {
            cn.gens = std::move(res.child_generators);
            cn.gens_known = true;
        } else if (parent_rigid && s.kind == 0) {
            // Duplicating a vertex of a rigid graph: the child group is the
            // swap of the template and the new vertex.
            Perm swap = identity_perm(n + 1);
            std::swap(swap[s.witness_vertex], swap[n]);
            cn.gens = {swap};
            cn.gens_known = true;
        }
        recurse(cn, stats, filter, t0);
        if (filter) filter->leave_child();
    }
}

GenerationStats MtfGenerator::run() {
    Graph k1(1);
    return run_from({k1});
}

GenerationStats MtfGenerator::run_from(const std::vector<Graph>& seeds) {
    auto t0 = std::chrono::steady_clock::now();
    GenerationStats stats;
    stop_.store(false);

    if (opts_.workers <= 1 || filter_ != nullptr) {
        for (const Graph& seed : seeds) {
            if (filter_ && !filter_->enter_root(seed)) continue;
            Node root;
            root.g = seed;
            if (seed.n == 1) {
                root.gens_known = true;  // trivial group
            }
            recurse(root, stats, filter_, t0);
        }
        stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return stats;
    }

    // Parallel plain generation: collect a frontier at a fixed depth, then
    // let workers own disjoint subtrees. Output order differs from the
    // serial run but the set of visited graphs is identical.
    int split = std::min(opts_.target_n - 1, 10);
    std::vector<Node> frontier;
    {
        Visitor saved = std::move(visitor_);
        int target = opts_.target_n;
        opts_.target_n = split;
        visitor_ = [&](const Graph&) {};
        // Re-run recursion storing frontier nodes instead of visiting.
        std::function<void(Node&)> collect = [&](Node& node) {
            if (node.g.n == split) {
                frontier.push_back(node);
                return;
            }
            if (!node.gens_known) {
                node.gens = canonical_form(node.g).generators;
                node.gens_known = true;
            }
            bool parent_rigid = node.gens.empty();
            for (auto& s : candidate_expansions(node)) {
                Graph child = expand(node.g, s);
                ProvenanceTag prov{s.kind, node.g.n, s.internal_edges, s.set};
                AcceptanceResult res = accept_expansion(child, prov);
                if (!res.accepted) continue;
                stats.ensure(node.g.n + 1);
                auto& row = stats.orders[node.g.n + 1];
                row.total++;
                row.by_kind[s.kind]++;
                Node cn;
                cn.g = child;
                if (res.child_generators_known) {
                    cn.gens = std::move(res.child_generators);
                    cn.gens_known = true;
                } else if (parent_rigid && s.kind == 0) {
                    Perm swap = identity_perm(node.g.n + 1);
                    std::swap(swap[s.witness_vertex], swap[node.g.n]);
                    cn.gens = {swap};
                    cn.gens_known = true;
                }
                collect(cn);
            }
        };
        for (const Graph& seed : seeds) {
            Node root;
            root.g = seed;
            if (seed.n == 1) root.gens_known = true;
            if (seed.n >= split) {
                frontier.push_back(root);
            } else {
                collect(root);
            }
        }
        opts_.target_n = target;
        visitor_ = std::move(saved);
    }

    std::mutex visit_mu;
    Visitor raw = std::move(visitor_);
    visitor_ = [&](const Graph& g) {
        std::lock_guard<std::mutex> lock(visit_mu);
        raw(g);
    };
    std::atomic<size_t> next{0};
    std::vector<GenerationStats> local(opts_.workers);
    std::vector<std::thread> pool;
    for (int t = 0; t < opts_.workers; ++t) {
        pool.emplace_back([&, t] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= frontier.size()) break;
                Node node = frontier[i];
                recurse(node, local[t], nullptr, t0);
            }
        });
    }
    for (auto& th : pool) th.join();
    visitor_ = std::move(raw);
    for (auto& ls : local) {
        stats.ensure(static_cast<int>(ls.orders.size()) - 1);
        for (size_t k = 0; k < ls.orders.size(); ++k) {
            stats.orders[k].total += ls.orders[k].total;
            for (int j = 0; j < 3; ++j) stats.orders[k].by_kind[j] += ls.orders[k].by_kind[j];
            stats.orders[k].seconds = std::max(stats.orders[k].seconds, ls.orders[k].seconds);
        }
    }
    stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return stats;
}

}  // namespace ramsey
