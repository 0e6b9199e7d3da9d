#include <doctest.h>

#include <fstream>

#include "triangleramsey/family.hpp"
#include "triangleramsey/oracle.hpp"
#include "triangleramsey/ramsey_driver.hpp"
#include "triangleramsey/theory.hpp"

using namespace ramsey;

namespace {

KnownValues paper_axioms() {
    KnownValues known;
    known.add("K9", 36);
    known.add("K9-e", 31);
    known.add("K8", 28);
    return known;
}

}  // namespace

TEST_CASE("family spec parsing") {
    CHECK(parse_family_spec("K10").graph == complete(10));
    CHECK(parse_family_spec("K4-e").graph.edge_count() == 5);
    CHECK(parse_family_spec("K10-K1,3").graph.edge_count() == 45 - 3);
    CHECK(parse_family_spec("K10-K1,3-e").graph.edge_count() == 45 - 4);
    CHECK(parse_family_spec("K10-T3+").graph.edge_count() == 45 - 4);
    CHECK(parse_family_spec("K10-Delta4").graph.edge_count() == 45 - 5);
    CHECK(parse_family_spec("K10-D3,3").graph.edge_count() == 45 - 7);
    CHECK(parse_family_spec("K10-P5").graph.edge_count() == 45 - 4);
    CHECK(parse_family_spec("C5").graph == cycle(5));
    CHECK(parse_family_spec("P4").graph == path(4));
    CHECK(parse_family_spec("Dhc").graph == cycle(5));  // graph6 fallback
    CHECK_THROWS(parse_family_spec("K10-K1,8-e"));      // disjoint edge does not fit
    CHECK_THROWS(parse_family_spec("nonsense spec"));
}

TEST_CASE("hypothesis checkers") {
    CHECK(lemma1_hypothesis(36, 10, 2));   // 26*3 = 78 > 72
    CHECK(!lemma1_hypothesis(34, 10, 2));  // 72 > 72 fails
    CHECK(!lemma1_hypothesis(10, 10, 2));  // r = n
    CHECK_THROWS_AS(lemma1_hypothesis(36, 10, 10), std::invalid_argument);

    CHECK(prop_delta_implication(36, 10, 2));
    CHECK(!prop_delta_implication(30, 10, 2));  // 60 > 72 fails

    CHECK(prop_two_stars_hypothesis(31, 10, 3, 1));
    CHECK(!prop_two_stars_hypothesis(31, 10, 1, 3));  // s < t
    CHECK(!prop_two_stars_hypothesis(31, 10, 8, 1));  // s+t+2 > n
}

TEST_CASE("derived upper bounds") {
    KnownValues known = paper_axioms();
    CHECK(lemma1_upper_bound(10, 2, known) == 36);
    CHECK(lemma1_upper_bound(10, 9, known) == 36);
    CHECK(prop_tplus_bound(10, 3, known) == 31);
    CHECK(prop_tplus_bound(10, 8, known) == 31);
    CHECK(prop_doublestar_bound(8, known) == 28);  // max(28, 28)
    CHECK(prop_two_stars_bound(10, 3, 1, known) == 31);

    KnownValues with_k4;
    with_k4.add("K4", 9);
    CHECK(prop_doublestar_bound(4, with_k4) == 16);  // max(9, 16)

    KnownValues empty;
    CHECK(!lemma1_upper_bound(10, 2, empty).has_value());
    CHECK_THROWS_AS(prop_tplus_bound(10, 0, known), std::invalid_argument);
}

TEST_CASE("monotone lower bound") {
    KnownValues known = paper_axioms();
    CHECK(monotone_lower_bound(parse_family_spec("K10-K1,2").graph, known) == 36);
    KnownValues k8_only;
    k8_only.add("K8", 28);
    CHECK(monotone_lower_bound(parse_family_spec("K10-D3,3").graph, k8_only) == 28);
    KnownValues k3_only;
    k3_only.add("K3", 6);
    CHECK(monotone_lower_bound(cycle(5), k3_only) == 1);
}

TEST_CASE("disconnected union rule") {
    KnownValues known;
    known.add("K4", 9);
    known.add("K2", 3);
    known.add("P3", 5);
    auto u = disconnected_union_rule(complete(4), complete(2), known);
    REQUIRE(u.has_value());
    CHECK(*u == 9);
    // Cross-check against the driver on the union itself.
    Graph un = disjoint_union(complete(4), complete(2));
    CHECK(ramsey_number(un, 1, 12).value == 9);

    // Order of arguments does not matter.
    CHECK(disconnected_union_rule(complete(2), complete(4), known) == 9);

    // Hypothesis fails: P3 union P3 -> 5 - 3 = 2 < 5.
    CHECK(!disconnected_union_rule(path(3), path(3), known).has_value());

    KnownValues missing;
    missing.add("K4", 9);
    CHECK(!disconnected_union_rule(complete(4), complete(2), missing).has_value());
}

TEST_CASE("corollary bounds from the axioms") {
    KnownValues known = paper_axioms();
    for (int s = 2; s <= 9; ++s) {
        auto report = derive_bounds(parse_family_spec("K10-K1," + std::to_string(s)), known);
        REQUIRE(report.exact.has_value());
        CHECK(*report.exact == 36);
        CHECK(report.upper_rule == "star-removal");
    }
    for (int s = 3; s <= 8; ++s) {
        auto t = derive_bounds(parse_family_spec("K10-T" + std::to_string(s) + "+"), known);
        REQUIRE(t.exact.has_value());
        CHECK(*t.exact == 31);
        CHECK(t.upper_rule == "pendant-tree-removal");

        auto d = derive_bounds(parse_family_spec("K10-Delta" + std::to_string(s + 1)), known);
        REQUIRE(d.exact.has_value());
        CHECK(*d.exact == 31);
        CHECK(d.upper_rule == "triangle-tip-removal");
    }
    auto ds = derive_bounds(parse_family_spec("K10-D3,3"), known);
    REQUIRE(ds.exact.has_value());
    CHECK(*ds.exact == 28);
    CHECK(ds.upper_rule == "double-star-removal");

    for (int s = 3; s <= 7; ++s) {
        auto e = derive_bounds(parse_family_spec("K10-K1," + std::to_string(s) + "-e"), known);
        REQUIRE(e.exact.has_value());
        CHECK(*e.exact == 31);
        CHECK(e.upper_rule == "two-star-removal");
    }

    // No axioms: explicit failure in the log, no upper bound.
    KnownValues empty;
    auto r = derive_bounds(parse_family_spec("K10-K1,2"), empty);
    CHECK(!r.upper.has_value());
    REQUIRE(!r.log.empty());
    CHECK(r.log[0].detail.find("insufficient axioms") != std::string::npos);
}

TEST_CASE("delta implication spot check on concrete graphs") {
    // Where the hypothesis holds, complements containing K5 - Delta_3 also
    // contain K5 - T_{2+}; checked over mtf graphs on 12 vertices.
    const int r = 12, n = 5, s = 2;
    REQUIRE(prop_delta_implication(r, n, s));  // 7*3 = 21 > 12
    Graph delta_removed = complete_minus(n, delta_graph(s + 1));
    Graph tplus_removed = complete_minus(n, t_plus(s));
    int checked = 0;
    for (const Graph& m : oracle::mtf_universe(r)) {
        Graph mc = complement(m);
        if (!contains_subgraph(mc, delta_removed)) continue;
        ++checked;
        CHECK(contains_subgraph(mc, tplus_removed));
    }
    CHECK(checked > 0);
}

TEST_CASE("known values file") {
    std::string path = "known_test.tsv";
    {
        std::ofstream out(path);
        out << "# axioms\nK9\t36\nK9-e\t31\nK8\t28\n";
    }
    KnownValues known = load_known_values(path);
    CHECK(known.value_of("K9") == 36);
    CHECK(known.value_of("K8") == 28);
    CHECK(!known.value_of("K7").has_value());
    CHECK(known.value_of_graph(complete(9)) == 36);
    std::remove(path.c_str());
}

TEST_CASE("star-removal containment holds empirically on the order-14 mtf list") {
    // With r=14, n=5, s=2 the hypothesis (r-n)(s+1) > (n-1)(n-2) holds, so
    // every complement containing K4 must also contain K5 - K_{1,2}.
    REQUIRE(lemma1_hypothesis(14, 5, 2));
    Graph conclusion = complete_minus(5, star(2));
    int with_k4 = 0;
    const auto universe = oracle::mtf_universe(14);
    CHECK(universe.size() == 1274);
    for (const Graph& m : universe) {
        Graph mc = complement(m);
        if (!contains_subgraph(mc, complete(4))) continue;
        ++with_k4;
        CHECK(contains_subgraph(mc, conclusion));
    }
    CHECK(with_k4 > 0);
}
