#include "triangleramsey/canon.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ramsey {

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& outer, const Perm& inner) {
    Perm r(inner.size());
    for (size_t v = 0; v < inner.size(); ++v) r[v] = outer[inner[v]];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t v = 0; v < p.size(); ++v) r[p[v]] = static_cast<int>(v);
    return r;
}

bool is_automorphism(const Graph& g, const Perm& p) {
    for (int v = 0; v < g.n; ++v) {
        Bits image = 0;
        for_each_bit(g.adj[v], [&](int w) { image |= vbit(p[w]); });
        if (image != g.adj[p[v]]) return false;
    }
    return true;
}

Bits apply_perm(const Perm& p, Bits s) {
    Bits r = 0;
    for_each_bit(s, [&](int v) { r |= vbit(p[v]); });
    return r;
}

namespace {

// Ordered partition of the vertices into cells; cells are contiguous
// segments of `seq`. Cell order is an isomorphism-invariant function of the
// refinement history, which is what makes leaf encodings comparable.
struct Partition {
    int n = 0;
    const Graph* g = nullptr;
    std::array<int, kMaxVertices> seq{};         // vertices by position
    std::array<int, kMaxVertices> pos{};         // pos[v]: position of v
    std::array<int, kMaxVertices> cell_start{};  // per position
    std::array<int, kMaxVertices> cell_len{};    // valid at start positions

    void init(const Graph& graph) {
        g = &graph;
        n = graph.n;
        for (int i = 0; i < n; ++i) {
            seq[i] = i;
            pos[i] = i;
            cell_start[i] = 0;
        }
        cell_len[0] = n;
    }

    bool discrete() const {
        for (int p = 0; p < n; p += cell_len[p])
            if (cell_len[p] > 1) return false;
        return true;
    }

    // Start of the first largest non-singleton cell, or -1 if discrete.
    int target_cell() const {
        int best = -1, best_len = 1;
        for (int p = 0; p < n; p += cell_len[p])
            if (cell_len[p] > best_len) {
                best = p;
                best_len = cell_len[p];
            }
        return best;
    }

    Bits cell_mask(int start) const {
        Bits m = 0;
        for (int i = start; i < start + cell_len[start]; ++i) m |= vbit(seq[i]);
        return m;
    }

    // Refine to an equitable partition, seeding the splitter worklist with
    // the cells whose start positions are in `initial`.
    void refine(const std::vector<int>& initial) {
        std::array<bool, kMaxVertices> queued{};
        std::vector<int> work;
        for (int s : initial)
            if (!queued[s]) {
                queued[s] = true;
                work.push_back(s);
            }
        size_t head = 0;
        while (head < work.size()) {
            int ws = work[head++];
            queued[ws] = false;
            Bits wmask = cell_mask(ws);
            for (int p = 0; p < n;) {
                int len = cell_len[p];
                if (len > 1) split_cell(p, wmask, queued, work);
                p += len;
            }
        }
    }

    void split_cell(int start, Bits wmask, std::array<bool, kMaxVertices>& queued,
                    std::vector<int>& work) {
        int len = cell_len[start];
        int cnt[kMaxVertices];
        int first = popcount(g->adj[seq[start]] & wmask);
        bool uniform = true;
        for (int i = 0; i < len; ++i) {
            cnt[i] = popcount(g->adj[seq[start + i]] & wmask);
            if (cnt[i] != first) uniform = false;
        }
        if (uniform) return;

        int idx[kMaxVertices];
        std::iota(idx, idx + len, 0);
        std::stable_sort(idx, idx + len, [&](int a, int b) { return cnt[a] < cnt[b]; });
        int reordered[kMaxVertices];
        int keys[kMaxVertices];
        for (int i = 0; i < len; ++i) {
            reordered[i] = seq[start + idx[i]];
            keys[i] = cnt[idx[i]];
        }
        for (int i = 0; i < len; ++i) {
            seq[start + i] = reordered[i];
            pos[reordered[i]] = start + i;
        }
        bool parent_queued = queued[start];
        // Subcell boundaries at key changes.
        int sub_start = start;
        int largest_start = -1, largest_len = 0;
        std::vector<int> new_cells;
        for (int i = 0; i <= len; ++i) {
            if (i == len || (i > 0 && keys[i] != keys[i - 1])) {
                int s = sub_start, l = start + i - sub_start;
                cell_len[s] = l;
                for (int j = s; j < s + l; ++j) cell_start[j] = s;
                new_cells.push_back(s);
                if (l > largest_len) {
                    largest_len = l;
                    largest_start = s;
                }
                sub_start = start + i;
            }
        }
        for (int s : new_cells) {
            // If the parent was pending as a splitter, every subcell must be
            // queued; otherwise all but one largest subcell suffice.
            if (!parent_queued && s == largest_start) continue;
            if (!queued[s]) {
                queued[s] = true;
                work.push_back(s);
            }
        }
        if (parent_queued && largest_start != start) {
            // `start` stays in the queue but now denotes its first subcell;
            // nothing else to do since all subcells were queued above.
        }
    }

    // Split {v} off the front of its cell and restore equitability.
    void individualize(int v) {
        int s = cell_start[pos[v]];
        int len = cell_len[s];
        int pv = pos[v];
        std::swap(seq[s], seq[pv]);
        pos[seq[pv]] = pv;
        pos[v] = s;
        cell_len[s] = 1;
        cell_start[s] = s;
        cell_len[s + 1] = len - 1;
        for (int i = s + 1; i < s + len; ++i) cell_start[i] = s + 1;
        refine({s});
    }
};

std::string encode_leaf(const Graph& g, const Partition& part) {
    std::string out(((size_t)g.n * (g.n - 1) / 2 + 7) / 8, '\0');
    size_t bitpos = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            if (g.has_edge(part.seq[i], part.seq[j]))
                out[bitpos >> 3] |= static_cast<char>(0x80u >> (bitpos & 7));
            ++bitpos;
        }
    return out;
}

struct UnionFind {
    std::array<int, kMaxVertices> parent;
    void init(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a < b) parent[b] = a;
        else if (b < a) parent[a] = b;
    }
};

struct CanonSearch {
    const Graph& g;
    int n;
    bool have_first = false;
    std::string first_code;
    Perm first_label;
    std::string best_code;
    Perm best_label;
    std::vector<Perm> gens;
    std::vector<int> prefix;  // individualized vertices, root first

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.n) {}

    void record_automorphism(const Perm& label_a, const Perm& label_b) {
        // Both leaves encode the same string, so label_a^{-1} ∘ label_b maps
        // g onto itself.
        Perm sigma = compose(inverse(label_a), label_b);
        if (sigma == identity_perm(n)) return;
        if (!is_automorphism(g, sigma))
            throw std::logic_error("canonical search produced a non-automorphism");
        for (const Perm& p : gens)
            if (p == sigma) return;
        gens.push_back(std::move(sigma));
    }

    void leaf(const Partition& part) {
        std::string code = encode_leaf(g, part);
        Perm label(n);
        for (int v = 0; v < n; ++v) label[v] = part.pos[v];
        if (!have_first) {
            have_first = true;
            first_code = code;
            first_label = label;
            best_code = code;
            best_label = label;
            return;
        }
        if (code == first_code) record_automorphism(first_label, label);
        if (code == best_code && code != first_code) record_automorphism(best_label, label);
        if (code < best_code) {
            best_code = code;
            best_label = std::move(label);
        }
    }

    // Orbits of the subgroup generated by the known generators that fix the
    // current prefix pointwise. Pruning with this under-approximation keeps
    // both the minimum leaf and group completeness.
    void prefix_orbits(UnionFind& uf) const {
        uf.init(n);
        for (const Perm& p : gens) {
            bool fixes = true;
            for (int v : prefix)
                if (p[v] != v) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) uf.unite(v, p[v]);
        }
    }

    void search(Partition& part) {
        int target = part.target_cell();
        if (target < 0) {
            leaf(part);
            return;
        }
        int len = part.cell_len[target];
        std::vector<int> candidates(part.seq.begin() + target, part.seq.begin() + target + len);
        std::vector<int> processed;
        UnionFind uf;
        for (int v : candidates) {
            prefix_orbits(uf);
            bool skip = false;
            for (int u : processed)
                if (uf.find(u) == uf.find(v)) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            processed.push_back(v);
            Partition child = part;
            child.individualize(v);
            prefix.push_back(v);
            search(child);
            prefix.pop_back();
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("canonical_form: empty graph");
    Partition part;
    part.init(g);
    part.refine({0});
    CanonSearch search(g);
    search.search(part);
    CanonicalForm cf;
    cf.bytes = std::move(search.best_code);
    cf.labeling = std::move(search.best_label);
    cf.generators = std::move(search.gens);
    cf.orbit = vertex_orbits(cf.generators, g.n);
    return cf;
}

std::string encode_with_labeling(const Graph& g, const Perm& label) {
    Perm seq = inverse(label);
    std::string out(((size_t)g.n * (g.n - 1) / 2 + 7) / 8, '\0');
    size_t bitpos = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            if (g.has_edge(seq[i], seq[j]))
                out[bitpos >> 3] |= static_cast<char>(0x80u >> (bitpos & 7));
            ++bitpos;
        }
    return out;
}

std::uint64_t group_order(const std::vector<Perm>& input_gens, int n) {
    // Schreier-Sims with one growing generator pool; level k uses every
    // generator fixing base[0..k-1] pointwise.
    const Perm id = identity_perm(n);
    std::vector<Perm> gens;
    for (const Perm& g : input_gens)
        if (g != id) gens.push_back(g);
    if (gens.empty()) return 1;

    std::vector<int> base;
    auto extend_base_for = [&](const Perm& g) {
        for (int b : base)
            if (g[b] != b) return;
        for (int v = 0; v < n; ++v)
            if (g[v] != v) {
                base.push_back(v);
                return;
            }
    };
    for (const Perm& g : gens) extend_base_for(g);

    std::vector<std::vector<Perm>> tv;  // tv[k][p]: element mapping base[k] -> p

    auto gens_for = [&](size_t k) {
        std::vector<size_t> out;
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            bool fixes = true;
            for (size_t i = 0; i < k && fixes; ++i)
                if (gens[gi][base[i]] != base[i]) fixes = false;
            if (fixes) out.push_back(gi);
        }
        return out;
    };
    auto recompute = [&](size_t k) {
        if (tv.size() < base.size()) tv.resize(base.size());
        auto& t = tv[k];
        t.assign(n, Perm{});
        t[base[k]] = id;
        auto gs = gens_for(k);
        std::vector<int> queue{base[k]};
        for (size_t head = 0; head < queue.size(); ++head) {
            int p = queue[head];
            for (size_t gi : gs) {
                int q = gens[gi][p];
                if (t[q].empty()) {
                    t[q] = compose(gens[gi], t[p]);
                    queue.push_back(q);
                }
            }
        }
    };
    auto recompute_all = [&] {
        tv.assign(base.size(), {});
        for (size_t k = 0; k < base.size(); ++k) recompute(k);
    };
    recompute_all();

    auto strip = [&](Perm g, size_t from) {
        for (size_t j = from; j < base.size(); ++j) {
            int u = g[base[j]];
            if (tv[j][u].empty()) return std::pair<size_t, Perm>(j, std::move(g));
            g = compose(inverse(tv[j][u]), g);
        }
        return std::pair<size_t, Perm>(base.size(), std::move(g));
    };

    size_t i = base.size();
    while (i >= 1) {
        size_t k = i - 1;
        recompute(k);
        bool complete = true;
        auto gs = gens_for(k);
        std::vector<int> orbit_pts;
        for (int p = 0; p < n; ++p)
            if (!tv[k][p].empty()) orbit_pts.push_back(p);
        for (size_t oi = 0; oi < orbit_pts.size() && complete; ++oi) {
            int u = orbit_pts[oi];
            for (size_t gi : gs) {
                Perm schreier =
                    compose(inverse(tv[k][gens[gi][u]]), compose(gens[gi], tv[k][u]));
                if (schreier == id) continue;
                auto [lvl, residue] = strip(std::move(schreier), k + 1);
                if (residue == id) continue;
                complete = false;
                extend_base_for(residue);
                gens.push_back(std::move(residue));
                recompute_all();
                i = std::min(lvl + 1, base.size());
                break;
            }
        }
        if (complete) --i;
    }

    std::uint64_t total = 1;
    for (size_t k = 0; k < base.size(); ++k) {
        std::uint64_t orbit_size = 0;
        for (int p = 0; p < n; ++p)
            if (!tv[k][p].empty()) ++orbit_size;
        total *= orbit_size;
    }
    return total;
}

std::uint64_t group_order(const CanonicalForm& cf) {
    return group_order(cf.generators, static_cast<int>(cf.labeling.size()));
}

std::vector<int> vertex_orbits(const std::vector<Perm>& gens, int n) {
    UnionFind uf;
    uf.init(n);
    for (const Perm& p : gens)
        for (int v = 0; v < n; ++v) uf.unite(v, p[v]);
    std::vector<int> orbit(n);
    for (int v = 0; v < n; ++v) orbit[v] = uf.find(v);
    return orbit;
}

std::vector<int> set_orbit_classes(const std::vector<Perm>& gens, const std::vector<Bits>& sets) {
    std::map<Bits, int> index;
    for (size_t i = 0; i < sets.size(); ++i) index.emplace(sets[i], static_cast<int>(i));
    std::vector<int> parent(sets.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a < b) parent[b] = a;
        else if (b < a) parent[a] = b;
    };
    for (size_t i = 0; i < sets.size(); ++i)
        for (const Perm& p : gens) {
            auto it = index.find(apply_perm(p, sets[i]));
            if (it != index.end()) unite(static_cast<int>(i), it->second);
        }
    std::vector<int> cls(sets.size());
    for (size_t i = 0; i < sets.size(); ++i) cls[i] = find(static_cast<int>(i));
    return cls;
}

int vertex_orbit_canonical_rank(const Graph& g, int v) {
    CanonicalForm cf = canonical_form(g);
    int best = -1;
    for (int w = 0; w < g.n; ++w)
        if (cf.orbit[w] == cf.orbit[v]) best = std::max(best, cf.labeling[w]);
    return -best;
}

std::vector<Perm> enumerate_group(const std::vector<Perm>& gens, int n, std::size_t limit) {
    std::set<Perm> seen;
    std::vector<Perm> queue{identity_perm(n)};
    seen.insert(queue[0]);
    size_t head = 0;
    while (head < queue.size()) {
        Perm cur = queue[head++];
        for (const Perm& s : gens) {
            Perm next = compose(s, cur);
            if (seen.insert(next).second) {
                if (seen.size() > limit) throw std::runtime_error("enumerate_group: group too large");
                queue.push_back(std::move(next));
            }
        }
    }
    return queue;
}

}  // namespace ramsey
