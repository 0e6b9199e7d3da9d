#include "triangleramsey/family.hpp"

#include <regex>
#include <stdexcept>

namespace ramsey {

namespace {

int to_int(const std::string& s) { return std::stoi(s); }

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
    FamilySpec spec;
    spec.text = text;
    std::smatch m;

    static const std::regex complete_re(R"(^K(\d+)$)");
    static const std::regex minus_e_re(R"(^K(\d+)-e$)");
    static const std::regex minus_star_re(R"(^K(\d+)-K1,(\d+)$)");
    static const std::regex minus_star_e_re(R"(^K(\d+)-K1,(\d+)-e$)");
    static const std::regex minus_tplus_re(R"(^K(\d+)-T(\d+)\+$)");
    static const std::regex minus_delta_re(R"(^K(\d+)-Delta(\d+)$)");
    static const std::regex minus_dstar_re(R"(^K(\d+)-D(\d+),(\d+)$)");
    static const std::regex minus_path_re(R"(^K(\d+)-P(\d+)$)");
    static const std::regex cycle_re(R"(^C(\d+)$)");
    static const std::regex path_re(R"(^P(\d+)$)");

    if (std::regex_match(text, m, complete_re)) {
        spec.kind = FamilySpec::Kind::kComplete;
        spec.n = to_int(m[1]);
        spec.graph = complete(spec.n);
    } else if (std::regex_match(text, m, minus_e_re)) {
        spec.kind = FamilySpec::Kind::kCompleteMinusEdge;
        spec.n = to_int(m[1]);
        spec.graph = complete_minus(spec.n, path(2));
    } else if (std::regex_match(text, m, minus_star_re)) {
        spec.kind = FamilySpec::Kind::kCompleteMinusStar;
        spec.n = to_int(m[1]);
        spec.s = to_int(m[2]);
        spec.graph = complete_minus(spec.n, star(spec.s));
    } else if (std::regex_match(text, m, minus_star_e_re)) {
        spec.kind = FamilySpec::Kind::kCompleteMinusStarMinusEdge;
        spec.n = to_int(m[1]);
        spec.s = to_int(m[2]);
        spec.t = 1;
        if (spec.s + 3 > spec.n)
            throw std::invalid_argument(text + ": the disjoint edge does not fit");
        Graph removed(spec.s + 3);
        for (int v = 1; v <= spec.s; ++v) removed.add_edge(0, v);
        removed.add_edge(spec.s + 1, spec.s + 2);
        spec.graph = complete_minus(spec.n, removed);
    } else if (std::regex_match(text, m, minus_tplus_re)) {
        spec.kind = FamilySpec::Kind::kCompleteMinusTplus;
        spec.n = to_int(m[1]);
        spec.s = to_int(m[2]);
        spec.graph = complete_minus(spec.n, t_plus(spec.s));
    } else if (std::regex_match(text, m, minus_delta_re)) {
        spec.kind = FamilySpec::Kind::kCompleteMinusDelta;
        spec.n = to_int(m[1]);
        spec.s = to_int(m[2]);
        spec.graph = complete_minus(spec.n, delta_graph(spec.s));
    } else if (std::regex_match(text, m, minus_dstar_re)) {
        spec.kind = FamilySpec::Kind::kCompleteMinusDoubleStar;
        spec.n = to_int(m[1]);
        spec.s = to_int(m[2]);
        spec.t = to_int(m[3]);
        spec.graph = complete_minus(spec.n, double_star(spec.s, spec.t));
    } else if (std::regex_match(text, m, minus_path_re)) {
        spec.kind = FamilySpec::Kind::kCompleteMinusPath;
        spec.n = to_int(m[1]);
        spec.s = to_int(m[2]);
        spec.graph = complete_minus(spec.n, path(spec.s));
    } else if (std::regex_match(text, m, cycle_re)) {
        spec.kind = FamilySpec::Kind::kCycle;
        spec.n = to_int(m[1]);
        spec.graph = cycle(spec.n);
    } else if (std::regex_match(text, m, path_re)) {
        spec.kind = FamilySpec::Kind::kPath;
        spec.n = to_int(m[1]);
        spec.graph = path(spec.n);
    } else {
        spec.kind = FamilySpec::Kind::kRaw;
        spec.graph = from_graph6(text);
        spec.n = spec.graph.n;
    }
    return spec;
}

}  // namespace ramsey
