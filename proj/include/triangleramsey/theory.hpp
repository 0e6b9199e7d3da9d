#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triangleramsey/family.hpp"
#include "triangleramsey/graph.hpp"

namespace ramsey {

// Caller-supplied Ramsey numbers treated as axioms, keyed by family spec.
struct KnownValues {
    struct Entry {
        std::string name;
        Graph graph;
        int value;
    };
    std::vector<Entry> entries;

    void add(const std::string& spec, int value);
    std::optional<int> value_of(const std::string& spec) const;
    std::optional<int> value_of_graph(const Graph& g) const;  // matched up to isomorphism
};

KnownValues load_known_values(const std::string& path);  // TSV: spec \t value

inline constexpr int kBoundScanLimit = 1000;

// Hypothesis checkers; pure integer arithmetic.
bool lemma1_hypothesis(int r, int n, int s);          // (r-n)(s+1) > (n-1)(n-2), 1 <= s < n
bool prop_delta_implication(int r, int n, int s);     // same inequality, Delta_{s+1} -> T_{s+}
bool prop_two_stars_hypothesis(int r, int n, int s, int t);

// Derived upper bounds; absent when no r <= kBoundScanLimit qualifies or a
// required axiom is missing (reported via the derivation log).
std::optional<int> lemma1_upper_bound(int n, int s, const KnownValues& known);   // K_n - K_{1,s}
std::optional<int> prop_tplus_bound(int n, int s, const KnownValues& known);     // K_n - T_{s+}
std::optional<int> prop_doublestar_bound(int n, const KnownValues& known);       // K_{n+2}-D_{m,m}
std::optional<int> prop_two_stars_bound(int n, int s, int t, const KnownValues& known);

// Largest known R(K3,H) over H contained in g; 1 when none applies.
int monotone_lower_bound(const Graph& g, const KnownValues& known);

// R(K3, G1 u G2) = R(K3, G1) when R(K3,G1) - |V(G1)| >= R(K3,G2), taking G1
// as the component with the larger known value.
std::optional<int> disconnected_union_rule(const Graph& g1, const Graph& g2,
                                           const KnownValues& known);

struct Derivation {
    std::string rule;
    std::string detail;
    bool holds = false;
    std::optional<int> bound;
};

struct BoundReport {
    std::optional<int> upper;
    std::string upper_rule;
    int lower = 1;
    std::string lower_rule;
    std::optional<int> exact;
    std::vector<Derivation> log;
};

// Dispatch on the family structure, instantiate every applicable
// proposition, and combine with the monotone lower bound.
BoundReport derive_bounds(const FamilySpec& spec, const KnownValues& known);

}  // namespace ramsey
