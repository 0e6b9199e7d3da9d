#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "triangleramsey/graph.hpp"

namespace ramsey {

using Perm = std::vector<int>;  // perm[v] = image of v

Perm identity_perm(int n);
Perm compose(const Perm& outer, const Perm& inner);  // outer ∘ inner
Perm inverse(const Perm& p);
bool is_automorphism(const Graph& g, const Perm& p);
Bits apply_perm(const Perm& p, Bits s);

// Canonical labeling via equitable partition refinement plus backtracking
// over target cells. Isomorphic graphs yield identical `bytes`; the
// recorded generators generate Aut(g); `orbit[v]` is the smallest vertex in
// v's orbit.
struct CanonicalForm {
    std::string bytes;          // upper-triangle bits of the relabeled matrix, row-major
    Perm labeling;              // original vertex -> canonical label
    std::vector<Perm> generators;
    std::vector<int> orbit;
};

CanonicalForm canonical_form(const Graph& g);

// Encoding of g relabeled by `label` (label[v] = position); used for
// tie-breaking among candidate parents.
std::string encode_with_labeling(const Graph& g, const Perm& label);

// Order of the group generated by `gens` (Schreier-Sims).
std::uint64_t group_order(const std::vector<Perm>& gens, int n);
std::uint64_t group_order(const CanonicalForm& cf);

std::vector<int> vertex_orbits(const std::vector<Perm>& gens, int n);

// Partition `sets` into classes connected by generator images. For a family
// closed under the group this yields exactly the orbits. Returns a class id
// per set (the smallest member index).
std::vector<int> set_orbit_classes(const std::vector<Perm>& gens, const std::vector<Bits>& sets);

// -max{canonical label of w : w in v's orbit}.
int vertex_orbit_canonical_rank(const Graph& g, int v);

// All group elements by closure over the generators. Throws if the group
// exceeds `limit` elements.
std::vector<Perm> enumerate_group(const std::vector<Perm>& gens, int n, std::size_t limit = 2'000'000);

}  // namespace ramsey
