#pragma once

#include <optional>
#include <string>

#include "triangleramsey/graph.hpp"

namespace ramsey {

// Mini-language for naming graphs on the command line and in axiom files:
//   K<n>            complete graph
//   K<n>-e          K_n minus one edge
//   K<n>-K1,<s>     K_n minus a star (center 0, leaves 1..s)
//   K<n>-K1,<s>-e   additionally minus the disjoint edge (s+1, s+2)
//   K<n>-T<s>+      K_n minus the tree T_{s+}
//   K<n>-Delta<s>   K_n minus the triangle-tipped star Delta_s
//   K<n>-D<s>,<t>   K_n minus the double star D_{s,t}
//   K<n>-P<x>       K_n minus the path on x vertices
//   C<n>, P<n>      cycle, path
// Anything else is decoded as graph6.
struct FamilySpec {
    enum class Kind {
        kComplete,
        kCompleteMinusEdge,
        kCompleteMinusStar,
        kCompleteMinusStarMinusEdge,
        kCompleteMinusTplus,
        kCompleteMinusDelta,
        kCompleteMinusDoubleStar,
        kCompleteMinusPath,
        kCycle,
        kPath,
        kRaw,
    };
    Kind kind = Kind::kRaw;
    int n = 0;
    int s = 0;
    int t = 0;
    std::string text;
    Graph graph;
};

FamilySpec parse_family_spec(const std::string& text);

}  // namespace ramsey
