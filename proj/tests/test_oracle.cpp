#include <doctest.h>

#include <set>
#include <utility>

#include "triangleramsey/canon.hpp"
#include "triangleramsey/mtfgen.hpp"
#include "triangleramsey/oracle.hpp"

using namespace ramsey;

namespace {

std::set<std::string> canonical_set(const std::vector<Graph>& graphs) {
    std::set<std::string> out;
    for (const Graph& g : graphs) out.insert(canonical_form(g).bytes);
    return out;
}

}  // namespace

TEST_CASE("brute mtf counts") {
    CHECK(oracle::brute_mtf(5).size() == 3);
    CHECK(oracle::brute_mtf(8).size() == 10);
    CHECK_THROWS_AS(oracle::brute_mtf(11), std::invalid_argument);
}

TEST_CASE("the two oracle enumerations agree") {
    for (int n = 1; n <= 9; ++n)
        CHECK(canonical_set(oracle::brute_mtf(n)) == canonical_set(oracle::mtf_universe(n)));
}

TEST_CASE("brute good sets") {
    Graph c5 = cycle(5);
    auto sets = oracle::brute_good_sets(c5);
    int kind0 = 0;
    for (const auto& s : sets)
        if (s.kind == 0) ++kind0;
    CHECK(kind0 == 5);
    for (const auto& s : sets) CHECK(popcount(s.set) >= 2);  // singletons cannot dominate C5
}

TEST_CASE("brute ramsey numbers") {
    CHECK(oracle::brute_ramsey_number(complete(3), 14) == 6);
    CHECK(oracle::brute_ramsey_number(complete(4), 14) == 9);
    CHECK(oracle::brute_ramsey_number(cycle(4), 14) == 7);
    CHECK_THROWS_AS(oracle::brute_ramsey_number(complete(6), 14), std::invalid_argument);
}

TEST_CASE("all graphs enumeration") {
    CHECK(oracle::all_graphs(4).size() == 11);
    CHECK(oracle::all_graphs(5).size() == 34);
    CHECK(oracle::all_graphs(6).size() == 156);
    CHECK(oracle::all_graphs(4, true).size() == 6);
    CHECK(oracle::all_graphs(5, true).size() == 21);
    CHECK(oracle::all_graphs(6, true).size() == 112);
    CHECK(oracle::all_triangle_free_graphs(7).size() == 107);
}

TEST_CASE("good-set enumeration agreement on the order-11 list") {
    auto universe = oracle::mtf_universe(11);
    CHECK(universe.size() == 61);
    for (const Graph& g : universe) {
        auto fast = enumerate_good_dominating_sets(g, {}, g.n);
        auto brute = oracle::brute_good_sets(g);
        std::multiset<std::pair<Bits, int>> a, b;
        for (const auto& s : fast) a.insert({s.set, s.kind});
        for (const auto& s : brute) b.insert({s.set, s.kind});
        CHECK(a == b);
    }
}

TEST_CASE("oracle report TSV") {
    auto reports = oracle::compare_mtf_generation(4, 5);
    REQUIRE(reports.size() == 2);
    for (const auto& r : reports) CHECK(r.match);
    std::string tsv = oracle::to_tsv(reports);
    CHECK(tsv.find("order 4") != std::string::npos);
    CHECK(tsv.find("yes") != std::string::npos);
}
