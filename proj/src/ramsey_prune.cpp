#include "triangleramsey/ramsey_prune.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

namespace ramsey {

RamseyContext make_ramsey_context(const Graph& target, int cache_cap) {
    RamseyContext ctx;
    ctx.target = target;
    ctx.target_comp = complement(target);
    ctx.k = target.n;
    ctx.max_witness_edges = ctx.target_comp.edge_count();
    ctx.cache_cap = cache_cap;
    ctx.reject_cache.resize(kMaxVertices + 1);
    if (target.n >= 2) {
        // Remove the lowest-index minimum-degree vertex of G^c.
        int best = 0;
        for (int v = 1; v < ctx.target_comp.n; ++v)
            if (ctx.target_comp.degree(v) < ctx.target_comp.degree(best)) best = v;
        ctx.target_comp_reduced =
            induced_subgraph(ctx.target_comp, ctx.target_comp.vertices() & ~vbit(best));
    }
    return ctx;
}

namespace {

int induced_edge_count(const Graph& m, Bits s) {
    int count = 0;
    for_each_bit(s, [&](int v) { count += popcount(m.adj[v] & s & ~low_mask(v + 1)); });
    return count;
}

bool witnesses(const Graph& m, const RamseyContext& ctx, Bits s) {
    if (popcount(s) != ctx.k || (s & ~m.vertices())) return false;
    Graph ind = induced_subgraph(m, s);
    if (ind.edge_count() > ctx.max_witness_edges) return false;
    return spanning_subgraph_of(ind, ctx.target_comp);
}

void cache_insert(RamseyContext& ctx, int order, Bits s) {
    if (ctx.cache_cap <= 0) return;
    auto& q = ctx.reject_cache[order];
    q.push_back(s);
    if (q.size() > static_cast<size_t>(ctx.cache_cap)) q.pop_front();
}

struct CompleteSearch {
    const Graph& m;
    RamseyContext& ctx;
    Bits exclude;
    std::vector<Bits>* approx_out;
    std::set<Bits> approx_seen;
    std::optional<Bits> witness;

    void maybe_collect_approx(Bits cur) {
        if (!approx_out || ctx.k < 2) return;
        if (!approx_seen.insert(cur).second) return;
        Graph ind = induced_subgraph(m, cur);
        if (ind.edge_count() <= ctx.target_comp_reduced.edge_count() &&
            spanning_subgraph_of(ind, ctx.target_comp_reduced))
            approx_out->push_back(cur);
    }

    // Extend cur (ascending vertex index) to size k, pruning on the induced
    // edge budget. Every prefix one short of k is still formed so the
    // approximating-set collection sees all of them.
    void dfs(int next, Bits cur, int size, int edge_count) {
        if (witness) return;
        if (size == ctx.k - 1) maybe_collect_approx(cur);
        if (size >= ctx.k) {
            if (spanning_subgraph_of(induced_subgraph(m, cur), ctx.target_comp)) witness = cur;
            return;
        }
        for (int v = next; v < m.n; ++v) {
            if (witness) return;
            if (exclude & vbit(v)) continue;
            if (m.n - v < ctx.k - 1 - size) return;  // cannot even reach size k-1
            int added = popcount(m.adj[v] & cur);
            if (edge_count + added > ctx.max_witness_edges) continue;
            dfs(v + 1, cur | vbit(v), size + 1, edge_count + added);
        }
    }
};

}  // namespace

std::optional<Bits> complete_search(const Graph& m, RamseyContext& ctx,
                                    const SearchRestriction& restriction,
                                    std::vector<Bits>* approx_out) {
    if (ctx.k > m.n || ctx.k < 1) return std::nullopt;
    Bits force = restriction.force & m.vertices();
    if (popcount(force) > ctx.k || (force & restriction.exclude)) return std::nullopt;
    int edges = induced_edge_count(m, force);
    if (edges > ctx.max_witness_edges) return std::nullopt;

    CompleteSearch search{m, ctx, restriction.exclude | force, approx_out, {}, std::nullopt};
    // Forced vertices are fixed members; the DFS extends over the rest.
    search.dfs(0, force, popcount(force), edges);
    return search.witness;
}

std::vector<Bits> greedy_candidates(const Graph& m, int k) {
    if (k > m.n) throw std::invalid_argument("greedy_candidates: k exceeds order");
    std::vector<Bits> out;
    std::set<Bits> seen;
    for (int seed = 0; seed < m.n; ++seed) {
        Bits cur = vbit(seed);
        for (int size = 1; size < k; ++size) {
            int best = -1, best_adj = 0;
            for (int v = 0; v < m.n; ++v) {
                if (cur & vbit(v)) continue;
                int adj = popcount(m.adj[v] & cur);
                if (best < 0 || adj < best_adj) {
                    best = v;
                    best_adj = adj;
                }
            }
            cur |= vbit(best);
        }
        if (seen.insert(cur).second) out.push_back(cur);
    }
    return out;
}

std::vector<Bits> find_approximating_sets(const Graph& m, RamseyContext& ctx) {
    std::vector<Bits> approx;
    auto witness = complete_search(m, ctx, {}, &approx);
    if (witness)
        throw std::invalid_argument("find_approximating_sets: graph is not a Ramsey graph");
    return approx;
}

bool child_set_admissible(const GoodDominatingSet& s, const std::vector<Bits>& approx_sets) {
    for (Bits a : approx_sets)
        if ((a & s.set) == 0) return false;
    return true;
}

RamseyVerdict is_ramsey_graph(const Graph& m, RamseyContext& ctx, const ProvenanceTag* prov) {
    RamseyVerdict verdict;
    if (m.n < ctx.k) {
        // Too small to host G in the complement; still collect approximating
        // sets when the order allows them.
        verdict.is_ramsey = true;
        if (m.n >= ctx.k - 1) complete_search(m, ctx, {}, &verdict.approximating_sets);
        ctx.counters.ramsey_confirmed++;
        return verdict;
    }

    for (Bits s : ctx.reject_cache[m.n]) {
        if (witnesses(m, ctx, s)) {
            ctx.counters.cache_hits++;
            verdict.witness = s;
            return verdict;
        }
    }

    for (Bits s : greedy_candidates(m, ctx.k)) {
        if (witnesses(m, ctx, s)) {
            ctx.counters.greedy_hits++;
            cache_insert(ctx, m.n, s);
            verdict.witness = s;
            return verdict;
        }
    }

    // Complete search, restricted by how the graph was constructed: sets not
    // meeting the restriction induce subgraphs already ruled out in the
    // parent.
    std::vector<SearchRestriction> phases;
    if (prov) {
        Bits w = vbit(prov->new_vertex);
        if (prov->kind == 0) {
            Bits cls = w;
            for (int v = 0; v < m.n; ++v)
                if (v != prov->new_vertex && m.adj[v] == m.adj[prov->new_vertex]) cls |= vbit(v);
            phases.push_back(SearchRestriction{cls, 0});
        } else if (prov->kind == 1) {
            phases.push_back(SearchRestriction{w, 0});
        } else if (prov->kind == 2 && prov->removed_edges.size() == 1) {
            auto [v1, v2] = prov->removed_edges[0];
            phases.push_back(SearchRestriction{w, 0});
            phases.push_back(SearchRestriction{vbit(v1) | vbit(v2), w});
        } else {
            phases.push_back(SearchRestriction{});
        }
    } else {
        phases.push_back(SearchRestriction{});
    }

    std::vector<Bits> approx;
    for (const auto& phase : phases) {
        auto witness = complete_search(m, ctx, phase, &approx);
        if (witness) {
            ctx.counters.complete_hits++;
            cache_insert(ctx, m.n, *witness);
            verdict.witness = witness;
            return verdict;
        }
    }
    verdict.is_ramsey = true;
    verdict.approximating_sets = std::move(approx);
    ctx.counters.ramsey_confirmed++;
    return verdict;
}

RamseyPruner::RamseyPruner(RamseyContext ctx, bool debug_prune_checks)
    : ctx_(std::move(ctx)), debug_prune_checks_(debug_prune_checks) {}

bool RamseyPruner::enter_root(const Graph& g) {
    approx_stack_.clear();
    RamseyVerdict v = is_ramsey_graph(g, ctx_, nullptr);
    if (!v.is_ramsey) return false;
    approx_stack_.push_back(std::move(v.approximating_sets));
    return true;
}

bool RamseyPruner::admit_set(const Graph& parent, const GoodDominatingSet& s) {
    if (child_set_admissible(s, approx_stack_.back())) return true;
    ctx_.counters.sets_pruned++;
    if (debug_prune_checks_) {
        // A pruned expansion must construct a non-Ramsey child. Use a scratch
        // context so the check cannot disturb the cache.
        ctx_.counters.prune_checks++;
        RamseyContext scratch = make_ramsey_context(ctx_.target, 0);
        if (is_ramsey_graph(expand(parent, s), scratch, nullptr).is_ramsey)
            ctx_.counters.prune_violations++;
    }
    return false;
}

bool RamseyPruner::enter_child(const Graph& child, const ProvenanceTag& prov) {
    RamseyVerdict v = is_ramsey_graph(child, ctx_, &prov);
    if (!v.is_ramsey) {
        if (rejection_log_ && v.witness) {
            *rejection_log_ << to_graph6(child) << '\t';
            bool first = true;
            for_each_bit(*v.witness, [&](int u) {
                *rejection_log_ << (first ? "" : ",") << u;
                first = false;
            });
            *rejection_log_ << '\n';
        }
        return false;
    }
    approx_stack_.push_back(std::move(v.approximating_sets));
    return true;
}

void RamseyPruner::leave_child() { approx_stack_.pop_back(); }

}  // namespace ramsey
