#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <map>
#include <random>
#include <set>

#include "triangleramsey/canon.hpp"
#include "triangleramsey/graph.hpp"
#include "triangleramsey/oracle.hpp"
#include "triangleramsey/ramsey_driver.hpp"
#include "triangleramsey/ramsey_prune.hpp"

using namespace ramsey;

namespace {

Graph circulant13_1_5() {
    Graph g(13);
    for (int v = 0; v < 13; ++v) {
        g.add_edge(v, (v + 1) % 13);
        g.add_edge(v, (v + 5) % 13);
    }
    return g;
}

std::set<std::string> canonical_set(const std::vector<Graph>& graphs) {
    std::set<std::string> out;
    for (const Graph& g : graphs) out.insert(canonical_form(g).bytes);
    return out;
}

std::vector<Graph> test_battery() {
    return {complete(4), complete(5), cycle(5), complete_minus(5, path(2))};
}

}  // namespace

TEST_CASE("is_ramsey_graph examples") {
    RamseyContext k3 = make_ramsey_context(complete(3));
    CHECK(is_ramsey_graph(cycle(5), k3).is_ramsey);
    for (const Graph& m : oracle::mtf_universe(6)) {
        RamseyVerdict v = is_ramsey_graph(m, k3);
        CHECK(!v.is_ramsey);  // R(K3,K3) = 6: no triangle-free 6-vertex graph works
        CHECK(v.witness.has_value());
        CHECK(spanning_subgraph_of(induced_subgraph(m, *v.witness), complement(complete(3))));
    }

    RamseyContext k5 = make_ramsey_context(complete(5));
    CHECK(is_triangle_free(circulant13_1_5()));
    CHECK(is_ramsey_graph(circulant13_1_5(), k5).is_ramsey);

    // Too few vertices to host the target: trivially a Ramsey graph.
    RamseyContext k4 = make_ramsey_context(complete(4));
    CHECK(is_ramsey_graph(cycle(3 + 0), k4).is_ramsey);
}

TEST_CASE("pipeline equals brute containment over all small mtf graphs") {
    std::vector<Graph> universe;
    for (int n = 1; n <= 13; ++n)
        for (const Graph& m : oracle::mtf_universe(n)) universe.push_back(m);
    for (const Graph& target : test_battery()) {
        RamseyContext ctx = make_ramsey_context(target);
        for (const Graph& m : universe) {
            bool expected = !contains_subgraph(complement(m), target);
            CHECK(is_ramsey_graph(m, ctx).is_ramsey == expected);
        }
    }
}

TEST_CASE("cache is an accelerator only") {
    for (const Graph& target : test_battery()) {
        RamseyContext with_cache = make_ramsey_context(target, 100);
        RamseyContext no_cache = make_ramsey_context(target, 0);
        for (int n = 4; n <= 11; ++n)
            for (const Graph& m : oracle::mtf_universe(n)) {
                CHECK(is_ramsey_graph(m, with_cache).is_ramsey ==
                      is_ramsey_graph(m, no_cache).is_ramsey);
            }
        CHECK(no_cache.counters.cache_hits == 0);
    }
}

TEST_CASE("provenance restriction never changes the verdict") {
    // Expand Ramsey parents every possible way and compare the restricted
    // answer against the unrestricted one.
    for (const Graph& target : test_battery()) {
        for (int n = 4; n <= 9; ++n) {
            for (const Graph& parent : oracle::mtf_universe(n)) {
                RamseyContext probe = make_ramsey_context(target, 0);
                if (!is_ramsey_graph(parent, probe).is_ramsey) continue;
                for (const auto& s : oracle::brute_good_sets(parent)) {
                    Graph child = expand(parent, s);
                    ProvenanceTag prov{s.kind, parent.n, s.internal_edges, s.set};
                    RamseyContext a = make_ramsey_context(target, 0);
                    RamseyContext b = make_ramsey_context(target, 0);
                    CHECK(is_ramsey_graph(child, a, &prov).is_ramsey ==
                          is_ramsey_graph(child, b, nullptr).is_ramsey);
                }
            }
        }
    }
}

TEST_CASE("greedy candidate contracts") {
    Graph m = empty_graph(6);
    auto sets = greedy_candidates(m, 3);
    // Edgeless graph: the first seed grows to the first k vertices; one run
    // per seed, duplicates dropped.
    CHECK(sets[0] == (vbit(0) | vbit(1) | vbit(2)));
    CHECK(sets.size() <= 6);
    for (Bits s : sets) CHECK(popcount(s) == 3);

    Graph c13 = circulant13_1_5();
    auto big = greedy_candidates(c13, 5);
    CHECK(!big.empty());
    CHECK(big.size() <= 13);
    for (Bits s : big) CHECK(popcount(s) == 5);
}

TEST_CASE("approximating sets of C5 for K3") {
    Graph c5 = cycle(5);
    RamseyContext ctx = make_ramsey_context(complete(3));
    auto approx = find_approximating_sets(c5, ctx);
    // G^c_delta is the empty graph on two vertices: the approximating sets
    // are exactly the five non-adjacent pairs.
    CHECK(approx.size() == 5);
    for (Bits s : approx) {
        CHECK(popcount(s) == 2);
        int a = lowest_bit(s);
        int b = lowest_bit(s & (s - 1));
        CHECK(!c5.has_edge(a, b));
    }
}

TEST_CASE("child set admissibility") {
    GoodDominatingSet s;
    s.set = vbit(0) | vbit(1);
    CHECK(child_set_admissible(s, {}));
    CHECK(child_set_admissible(s, {vbit(1) | vbit(4)}));
    CHECK(!child_set_admissible(s, {vbit(2) | vbit(3)}));
}

TEST_CASE("pruned sets always lead to non-Ramsey children") {
    // Run a debug-checked pruned generation; violations counted inside.
    for (const Graph& target : {complete(4), complete(5)}) {
        RamseyContext::Counters totals;
        DriverOptions opts;
        opts.debug_prune_checks = true;
        opts.counters = &totals;
        all_ramsey_graphs(target, target.n == 4 ? 8 : 12, nullptr, opts);
        CHECK(totals.prune_checks > 0);
        CHECK(totals.prune_violations == 0);
    }
}

TEST_CASE("verify_ramsey_graph") {
    CHECK(verify_ramsey_graph(cycle(5), complete(3)));
    CHECK(verify_ramsey_graph(complete(2), complete(2)));
    CHECK(!verify_ramsey_graph(complete(3), complete(5)));  // has a triangle
    CHECK(!verify_ramsey_graph(empty_graph(3), complete(3)));
}

TEST_CASE("ramsey numbers at desk scale") {
    CHECK(ramsey_number(complete(3), 1, 10).value == 6);
    CHECK(ramsey_number(complete(4), 1, 12).value == 9);
    CHECK(ramsey_number(cycle(4), 1, 10).value == 7);
    CHECK(ramsey_number(path(4), 1, 10).value == 7);
    RamseyNumberOutcome capped = ramsey_number(complete(5), 1, 9);
    CHECK(!capped.exact);
    CHECK(capped.value == 10);  // budget exhausted: R >= 10
}

TEST_CASE("ramsey number agrees with the brute oracle on small targets") {
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : oracle::all_graphs(n)) {
            int expected = oracle::brute_ramsey_number(g, 14);
            CHECK(ramsey_number(g, 1, 14).value == expected);
        }
}

TEST_CASE("all Ramsey graphs") {
    auto k3_at_5 = all_ramsey_graphs(complete(3), 5);
    REQUIRE(k3_at_5.size() == 1);
    CHECK(canonical_form(k3_at_5[0]).bytes == canonical_form(cycle(5)).bytes);

    // K4 at order 8: the mtf graphs with no independent 4-set.
    auto k4_at_8 = all_ramsey_graphs(complete(4), 8);
    std::vector<Graph> expected;
    for (const Graph& m : oracle::mtf_universe(8))
        if (verify_ramsey_graph(m, complete(4))) expected.push_back(m);
    CHECK(canonical_set(k4_at_8) == canonical_set(expected));

    // Seeded continuation from the complete order-6 list.
    auto k4_at_6 = all_ramsey_graphs(complete(4), 6);
    auto k4_at_8_seeded = all_ramsey_graphs(complete(4), 8, &k4_at_6);
    CHECK(canonical_set(k4_at_8_seeded) == canonical_set(k4_at_8));
}

TEST_CASE("edge-deletion closure to all Ramsey graphs") {
    auto k3_at_5 = all_ramsey_graphs(complete(3), 5);
    auto closure = expand_to_all_ramsey_graphs_general(k3_at_5, complete(3));
    CHECK(closure.size() == 1);  // C5 alone: any deletion exposes a triangle in the complement

    // Oracle: filter every 5-vertex graph directly.
    std::vector<Graph> expected;
    for (const Graph& g : oracle::all_graphs(5))
        if (verify_ramsey_graph(g, complete(3))) expected.push_back(g);
    CHECK(canonical_set(closure) == canonical_set(expected));

    // Closure outputs are triangle-free Ramsey graphs and downward closed.
    auto k4_at_7 = all_ramsey_graphs(complete(4), 7);
    auto closure7 = expand_to_all_ramsey_graphs_general(k4_at_7, complete(4));
    std::set<std::string> codes = canonical_set(closure7);
    for (const Graph& f : closure7) {
        CHECK(verify_ramsey_graph(f, complete(4)));
        for (auto [u, v] : f.edges()) {
            Graph g = f;
            g.remove_edge(u, v);
            if (verify_ramsey_graph(g, complete(4))) CHECK(codes.count(canonical_form(g).bytes));
        }
    }
}

TEST_CASE("classification is order-independent and monotone") {
    auto connected4 = oracle::all_graphs(4, true);
    auto outcome = classify_candidates(connected4, 12);
    std::map<int, int> expected{{7, 5}, {9, 1}};
    CHECK(outcome.histogram == expected);

    std::mt19937 rng(17);
    std::shuffle(connected4.begin(), connected4.end(), rng);
    auto shuffled = classify_candidates(connected4, 12);
    CHECK(shuffled.histogram == expected);

    // Monotone: subgraphs never get a larger Ramsey number.
    std::map<std::string, int> verdict_by_code;
    for (auto& [g, r] : outcome.verdicts) verdict_by_code[canonical_form(g).bytes] = r;
    for (auto& [g, r] : outcome.verdicts)
        for (auto& [h, rh] : outcome.verdicts)
            if (contains_subgraph(g, h)) CHECK(rh <= r);
}

TEST_CASE("classification checkpoint resumes") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "tr_checkpoint_test";
    fs::remove_all(dir);
    auto connected4 = oracle::all_graphs(4, true);
    {
        ClassifyCheckpoint cp(dir.string());
        classify_candidates(connected4, 12, {}, &cp);
    }
    {
        ClassifyCheckpoint cp(dir.string());
        for (const Graph& g : connected4) CHECK(cp.lookup(g).has_value());
        auto outcome = classify_candidates(connected4, 12, {}, &cp);
        std::map<int, int> expected{{7, 5}, {9, 1}};
        CHECK(outcome.histogram == expected);
    }
    fs::remove_all(dir);
}

TEST_CASE("driver agrees with the brute oracle on every connected graph of order 4 and 5") {
    std::vector<Graph> battery;
    for (const Graph& g : oracle::all_graphs(4, true)) battery.push_back(g);
    for (const Graph& g : oracle::all_graphs(5, true)) battery.push_back(g);
    CHECK(battery.size() == 27);
    for (const Graph& g : battery) {
        int expected = oracle::brute_ramsey_number(g, 14);
        RamseyNumberOutcome got = ramsey_number(g, 1, 14);
        CHECK(got.exact);
        CHECK(got.value == expected);
    }
}

TEST_CASE("classification handles mixed-order candidate lists") {
    std::vector<Graph> mixed{complete(3), complete(4), path(3), cycle(5)};
    auto outcome = classify_candidates(mixed, 12);
    std::map<std::string, int> by_code;
    for (auto& [g, r] : outcome.verdicts) by_code[canonical_form(g).bytes] = r;
    CHECK(by_code[canonical_form(complete(3)).bytes] == 6);
    CHECK(by_code[canonical_form(complete(4)).bytes] == 9);
    CHECK(by_code[canonical_form(path(3)).bytes] == 5);
    CHECK(by_code[canonical_form(cycle(5)).bytes] == 9);
}
