#include "triangleramsey/ramsey_driver.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "triangleramsey/canon.hpp"
#include "triangleramsey/mtfgen.hpp"

namespace ramsey {

bool verify_ramsey_graph(const Graph& f, const Graph& g) {
    return is_triangle_free(f) && !contains_subgraph(complement(f), g);
}

namespace {

void merge_counters(const DriverOptions& opts, const RamseyContext& ctx) {
    if (!opts.counters) return;
    auto& dst = *opts.counters;
    const auto& src = ctx.counters;
    dst.cache_hits += src.cache_hits;
    dst.greedy_hits += src.greedy_hits;
    dst.complete_hits += src.complete_hits;
    dst.ramsey_confirmed += src.ramsey_confirmed;
    dst.sets_pruned += src.sets_pruned;
    dst.prune_checks += src.prune_checks;
    dst.prune_violations += src.prune_violations;
}

}  // namespace

std::optional<Graph> find_mtf_ramsey_graph(const Graph& g, int r, RamseyContext& ctx,
                                           const DriverOptions& opts) {
    if (g != ctx.target) throw std::invalid_argument("context does not match the target graph");
    RamseyPruner pruner(std::move(ctx), opts.debug_prune_checks);
    pruner.log_rejections_to(opts.rejection_log);
    std::optional<Graph> found;
    MtfGenerator* handle = nullptr;
    MtfGenerator gen({r, 1, false},
                     [&](const Graph& m) {
                         found = m;
                         handle->request_stop();  // one witness suffices
                     },
                     &pruner);
    handle = &gen;
    gen.run();
    ctx = std::move(pruner.context());
    return found;
}

std::vector<Graph> all_ramsey_graphs(const Graph& g, int r, const std::vector<Graph>* seeds,
                                     const DriverOptions& opts) {
    RamseyContext ctx = make_ramsey_context(g, opts.cache_cap);
    RamseyPruner pruner(std::move(ctx), opts.debug_prune_checks);
    pruner.log_rejections_to(opts.rejection_log);
    std::vector<Graph> out;
    MtfGenerator gen({r, 1, false}, [&](const Graph& m) { out.push_back(m); }, &pruner);
    if (seeds)
        gen.run_from(*seeds);
    else
        gen.run();
    merge_counters(opts, pruner.context());
    return out;
}

std::vector<Graph> expand_to_all_ramsey_graphs_general(const std::vector<Graph>& mtf_list,
                                                       const Graph& g) {
    std::vector<Graph> out;
    std::set<std::string> seen;
    std::vector<Graph> stack;
    for (const Graph& m : mtf_list) {
        if (seen.insert(canonical_form(m).bytes).second) {
            out.push_back(m);
            stack.push_back(m);
        }
    }
    while (!stack.empty()) {
        Graph cur = std::move(stack.back());
        stack.pop_back();
        for (auto [u, v] : cur.edges()) {
            Graph next = cur;
            next.remove_edge(u, v);
            if (contains_subgraph(complement(next), g)) continue;  // Ramsey property lost
            if (seen.insert(canonical_form(next).bytes).second) {
                out.push_back(next);
                stack.push_back(next);
            }
        }
    }
    return out;
}

RamseyNumberOutcome ramsey_number(const Graph& g, int r_start, int r_max,
                                  const DriverOptions& opts) {
    if (g.n < 1) throw std::invalid_argument("ramsey_number: empty target");
    int r = std::max(r_start, g.n);
    RamseyContext ctx = make_ramsey_context(g, opts.cache_cap);
    for (; r <= r_max; ++r) {
        auto witness = find_mtf_ramsey_graph(g, r, ctx, opts);
        if (!witness) {
            merge_counters(opts, ctx);
            return {true, r};
        }
    }
    merge_counters(opts, ctx);
    return {false, r_max + 1};
}

std::vector<bool> classify_at_order(const std::vector<Graph>& candidates, int r,
                                    ClassificationState& state, const DriverOptions& opts) {
    state.r = r;
    std::vector<bool> resolved(candidates.size(), false);
    // Descending edge count so dense graphs populate the shortcut lists first.
    std::vector<size_t> order(candidates.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return candidates[a].edge_count() > candidates[b].edge_count();
    });

    for (size_t idx : order) {
        const Graph& g = candidates[idx];
        bool in_maxgraph = false;
        for (const Graph& h : state.maxgraphs)
            if (contains_subgraph(h, g)) {
                in_maxgraph = true;
                break;
            }
        if (in_maxgraph) {
            resolved[idx] = true;  // R <= R(K3, h) == r, and >= r by invariant
            continue;
        }
        // A stored triangle-free r-vertex F whose complement avoids g is a
        // Ramsey graph for g and proves R > r.
        bool witnessed = false;
        for (const Graph& f : state.ramseygraphs)
            if (!contains_subgraph(complement(f), g)) {
                witnessed = true;
                break;
            }
        if (witnessed) continue;

        RamseyContext ctx = make_ramsey_context(g, opts.cache_cap);
        auto found = find_mtf_ramsey_graph(g, r, ctx, opts);
        merge_counters(opts, ctx);
        if (found) {
            if (!verify_ramsey_graph(*found, g))
                throw std::logic_error("generated witness fails independent verification");
            state.ramseygraphs.push_back(*found);
        } else {
            state.maxgraphs.push_back(g);
            resolved[idx] = true;
        }
    }
    return resolved;
}

ClassifyOutcome classify_candidates(std::vector<Graph> candidates, int r_max,
                                    const DriverOptions& opts, ClassifyCheckpoint* checkpoint) {
    ClassifyOutcome outcome;
    std::vector<Graph> remaining;
    for (Graph& g : candidates) {
        if (checkpoint) {
            if (auto v = checkpoint->lookup(g)) {
                outcome.histogram[*v]++;
                outcome.verdicts.emplace_back(g, *v);
                continue;
            }
        }
        remaining.push_back(std::move(g));
    }
    int r = kMaxVertices + 1;
    for (const Graph& g : remaining) r = std::min(r, g.n);

    while (!remaining.empty() && r <= r_max) {
        ClassificationState state;
        state.r = r;
        if (checkpoint) {
            state.maxgraphs = checkpoint->load_maxgraphs(r);
            state.ramseygraphs = checkpoint->load_ramseygraphs(r);
        }
        std::vector<Graph> next;
        // Resolve one candidate at a time so the checkpoint is usable after
        // any interruption.
        std::vector<size_t> order(remaining.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return remaining[a].edge_count() > remaining[b].edge_count();
        });
        std::vector<bool> resolved(remaining.size(), false);
        for (size_t idx : order) {
            // R(K3,.) is at least the order, so smaller r cannot resolve it.
            if (remaining[idx].n > r) continue;
            std::vector<Graph> single{remaining[idx]};
            auto flags = classify_at_order(single, r, state, opts);
            resolved[idx] = flags[0];
            if (flags[0]) {
                outcome.histogram[r]++;
                outcome.verdicts.emplace_back(remaining[idx], r);
                if (checkpoint) checkpoint->record(remaining[idx], r, std::nullopt);
            }
            if (checkpoint) checkpoint->save_order_state(state);
        }
        for (size_t i = 0; i < remaining.size(); ++i)
            if (!resolved[i]) next.push_back(std::move(remaining[i]));
        remaining = std::move(next);
        ++r;
    }
    for (Graph& g : remaining) {
        outcome.verdicts.emplace_back(g, r_max + 1);
        outcome.unresolved.push_back(std::move(g));
    }
    return outcome;
}

// --- checkpointing -------------------------------------------------------

namespace fs = std::filesystem;

ClassifyCheckpoint::ClassifyCheckpoint(std::string dir) : dir_(std::move(dir)) {
    fs::create_directories(dir_);
    fs::path verdicts = fs::path(dir_) / "verdicts.tsv";
    if (fs::exists(verdicts)) {
        std::ifstream in(verdicts);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ss(line);
            std::string g6;
            int verdict;
            if (ss >> g6 >> verdict) resolved_[canonical_form(from_graph6(g6)).bytes] = verdict;
        }
    }
}

std::optional<int> ClassifyCheckpoint::lookup(const Graph& g) const {
    auto it = resolved_.find(canonical_form(g).bytes);
    if (it == resolved_.end()) return std::nullopt;
    return it->second;
}

void ClassifyCheckpoint::record(const Graph& g, int verdict, const std::optional<Graph>& witness) {
    resolved_[canonical_form(g).bytes] = verdict;
    std::ofstream out(fs::path(dir_) / "verdicts.tsv", std::ios::app);
    out << to_graph6(g) << '\t' << verdict << '\t' << (witness ? to_graph6(*witness) : "-")
        << '\n';
}

void ClassifyCheckpoint::save_order_state(const ClassificationState& state) {
    write_graph6_file((fs::path(dir_) / ("order_" + std::to_string(state.r) + "_maxgraphs.g6")).string(),
                      state.maxgraphs);
    write_graph6_file(
        (fs::path(dir_) / ("order_" + std::to_string(state.r) + "_ramseygraphs.g6")).string(),
        state.ramseygraphs);
}

std::vector<Graph> ClassifyCheckpoint::load_ramseygraphs(int r) const {
    fs::path p = fs::path(dir_) / ("order_" + std::to_string(r) + "_ramseygraphs.g6");
    if (!fs::exists(p)) return {};
    return read_graph6_file(p.string());
}

std::vector<Graph> ClassifyCheckpoint::load_maxgraphs(int r) const {
    fs::path p = fs::path(dir_) / ("order_" + std::to_string(r) + "_maxgraphs.g6");
    if (!fs::exists(p)) return {};
    return read_graph6_file(p.string());
}

}  // namespace ramsey
