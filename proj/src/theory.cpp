#include "triangleramsey/theory.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "triangleramsey/canon.hpp"

namespace ramsey {

void KnownValues::add(const std::string& spec, int value) {
    entries.push_back({spec, parse_family_spec(spec).graph, value});
}

std::optional<int> KnownValues::value_of(const std::string& spec) const {
    for (const auto& e : entries)
        if (e.name == spec) return e.value;
    return std::nullopt;
}

std::optional<int> KnownValues::value_of_graph(const Graph& g) const {
    std::string bytes = canonical_form(g).bytes;
    for (const auto& e : entries)
        if (e.graph.n == g.n && canonical_form(e.graph).bytes == bytes) return e.value;
    return std::nullopt;
}

KnownValues load_known_values(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    KnownValues known;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string spec;
        int value;
        if (!(ss >> spec >> value)) throw std::runtime_error("bad axiom line: " + line);
        known.add(spec, value);
    }
    return known;
}

bool lemma1_hypothesis(int r, int n, int s) {
    if (s < 1 || s >= n) throw std::invalid_argument("lemma1_hypothesis: need 1 <= s < n");
    return static_cast<long long>(r - n) * (s + 1) > static_cast<long long>(n - 1) * (n - 2);
}

bool prop_delta_implication(int r, int n, int s) {
    if (s < 1 || s >= n) throw std::invalid_argument("prop_delta_implication: need 1 <= s < n");
    return static_cast<long long>(r - n) * (s + 1) > static_cast<long long>(n - 1) * (n - 2);
}

bool prop_two_stars_hypothesis(int r, int n, int s, int t) {
    if (s + t + 2 > n) return false;
    if (!(s >= t && t > 0)) return false;
    if (static_cast<long long>(r - n) * (s + 1) <= static_cast<long long>(n - 1) * (n - 2))
        return false;
    return static_cast<long long>(r - (n - 1)) * (s + 1) >
           static_cast<long long>(n + 2 * (s - t) - 2) * (n - 3);
}

std::optional<int> lemma1_upper_bound(int n, int s, const KnownValues& known) {
    auto base = known.value_of("K" + std::to_string(n - 1));
    if (!base) return std::nullopt;
    for (int r = *base; r <= kBoundScanLimit; ++r)
        if (lemma1_hypothesis(r, n, s)) return r;
    return std::nullopt;
}

std::optional<int> prop_tplus_bound(int n, int s, const KnownValues& known) {
    if (s < 1) throw std::invalid_argument("prop_tplus_bound: s must be positive");
    auto base = known.value_of("K" + std::to_string(n - 1) + "-e");
    if (!base) return std::nullopt;
    for (int r = *base; r <= kBoundScanLimit; ++r) {
        bool cond1 = static_cast<long long>(r - n + 1) * s > static_cast<long long>(n - 2) * (n - 3);
        bool cond2 = static_cast<long long>(r - n) * (s + 1) > static_cast<long long>(n - 1) * (n - 2);
        if (cond1 && cond2) return r;
    }
    return std::nullopt;
}

std::optional<int> prop_doublestar_bound(int n, const KnownValues& known) {
    auto base = known.value_of("K" + std::to_string(n));
    if (!base) return std::nullopt;
    return std::max(*base, 3 * n + 4);
}

std::optional<int> prop_two_stars_bound(int n, int s, int t, const KnownValues& known) {
    auto base = known.value_of("K" + std::to_string(n - 1) + "-e");
    if (!base) return std::nullopt;
    for (int r = *base; r <= kBoundScanLimit; ++r)
        if (prop_two_stars_hypothesis(r, n, s, t)) return r;
    return std::nullopt;
}

int monotone_lower_bound(const Graph& g, const KnownValues& known) {
    int best = 1;
    for (const auto& e : known.entries)
        if (e.value > best && contains_subgraph(g, e.graph)) best = e.value;
    return best;
}

std::optional<int> disconnected_union_rule(const Graph& g1, const Graph& g2,
                                           const KnownValues& known) {
    auto r1 = known.value_of_graph(g1);
    auto r2 = known.value_of_graph(g2);
    if (!r1 || !r2) return std::nullopt;
    const Graph* big = &g1;
    int rb = *r1, rs = *r2;
    if (rs > rb) {
        big = &g2;
        std::swap(rb, rs);
    }
    if (rb - big->n >= rs) return rb;
    return std::nullopt;
}

namespace {

std::string ineq(long long lhs, long long rhs, bool strict_gt) {
    std::ostringstream ss;
    ss << lhs << (strict_gt ? " > " : " >= ") << rhs;
    return ss.str();
}

void log_missing(BoundReport& report, const std::string& rule, const std::string& axiom) {
    report.log.push_back({rule, "insufficient axioms: needs R(K3," + axiom + ")", false, {}});
}

}  // namespace

BoundReport derive_bounds(const FamilySpec& spec, const KnownValues& known) {
    BoundReport report;
    using Kind = FamilySpec::Kind;
    const int n = spec.n, s = spec.s, t = spec.t;

    auto set_upper = [&](std::optional<int> bound, const std::string& rule,
                         const std::string& detail) {
        report.log.push_back({rule, detail, bound.has_value(), bound});
        if (bound && (!report.upper || *bound < *report.upper)) {
            report.upper = bound;
            report.upper_rule = rule;
        }
    };

    switch (spec.kind) {
        case Kind::kComplete: {
            auto v = known.value_of(spec.text);
            if (v) set_upper(v, "axiom", "R(K3," + spec.text + ") supplied");
            break;
        }
        case Kind::kCompleteMinusStar: {
            std::string axiom = "K" + std::to_string(n - 1);
            auto base = known.value_of(axiom);
            if (!base) {
                log_missing(report, "star-removal", axiom);
                break;
            }
            auto bound = lemma1_upper_bound(n, s, known);
            std::string detail = "r=" + std::to_string(bound.value_or(-1)) + ": (r-" +
                                 std::to_string(n) + ")(s+1) " +
                                 (bound ? ineq(static_cast<long long>(*bound - n) * (s + 1),
                                               static_cast<long long>(n - 1) * (n - 2), true)
                                        : std::string("unsatisfied up to scan limit"));
            set_upper(bound, "star-removal", detail);
            break;
        }
        case Kind::kCompleteMinusTplus: {
            std::string axiom = "K" + std::to_string(n - 1) + "-e";
            if (!known.value_of(axiom)) {
                log_missing(report, "pendant-tree-removal", axiom);
                break;
            }
            auto bound = prop_tplus_bound(n, s, known);
            std::string detail;
            if (bound) {
                detail = "r=" + std::to_string(*bound) + ": " +
                         ineq(static_cast<long long>(*bound - n + 1) * s,
                              static_cast<long long>(n - 2) * (n - 3), true) +
                         " and " +
                         ineq(static_cast<long long>(*bound - n) * (s + 1),
                              static_cast<long long>(n - 1) * (n - 2), true);
            } else {
                detail = "unsatisfied up to scan limit";
            }
            set_upper(bound, "pendant-tree-removal", detail);
            break;
        }
        case Kind::kCompleteMinusDelta: {
            // K_n - Delta_s is contained in K_n - T_{(s-1)+}, so that bound
            // carries over; the implication hypothesis is logged alongside.
            if (s < 2) break;
            std::string axiom = "K" + std::to_string(n - 1) + "-e";
            if (!known.value_of(axiom)) {
                log_missing(report, "triangle-tip-removal", axiom);
                break;
            }
            auto bound = prop_tplus_bound(n, s - 1, known);
            std::string detail;
            if (bound) {
                bool hyp = prop_delta_implication(*bound, n, s - 1);
                detail = "via containment in K" + std::to_string(n) + "-T" + std::to_string(s - 1) +
                         "+; implication hypothesis at r=" + std::to_string(*bound) +
                         (hyp ? " holds" : " fails");
            } else {
                detail = "unsatisfied up to scan limit";
            }
            set_upper(bound, "triangle-tip-removal", detail);
            break;
        }
        case Kind::kCompleteMinusDoubleStar: {
            int base_n = n - 2;
            if (s == t && s == (base_n - 1) / 2) {
                std::string axiom = "K" + std::to_string(base_n);
                if (!known.value_of(axiom)) {
                    log_missing(report, "double-star-removal", axiom);
                    break;
                }
                auto bound = prop_doublestar_bound(base_n, known);
                std::string detail = "max(R(K3," + axiom + "), 3*" + std::to_string(base_n) +
                                     "+4) = " + std::to_string(bound.value_or(-1));
                set_upper(bound, "double-star-removal", detail);
            } else {
                report.log.push_back({"double-star-removal",
                                      "m = floor((n-1)/2) mismatch: no applicable bound", false,
                                      {}});
            }
            break;
        }
        case Kind::kCompleteMinusStarMinusEdge: {
            std::string axiom = "K" + std::to_string(n - 1) + "-e";
            if (!known.value_of(axiom)) {
                log_missing(report, "two-star-removal", axiom);
                break;
            }
            if (s + t + 2 > n) {
                report.log.push_back({"two-star-removal",
                                      "s+t+2 <= n fails: not derivable from this proposition",
                                      false,
                                      {}});
                break;
            }
            auto bound = prop_two_stars_bound(n, s, t, known);
            std::string detail;
            if (bound) {
                detail = "r=" + std::to_string(*bound) + ": " +
                         ineq(static_cast<long long>(*bound - n) * (s + 1),
                              static_cast<long long>(n - 1) * (n - 2), true) +
                         " and " +
                         ineq(static_cast<long long>(*bound - (n - 1)) * (s + 1),
                              static_cast<long long>(n + 2 * (s - t) - 2) * (n - 3), true);
            } else {
                detail = "unsatisfied up to scan limit";
            }
            set_upper(bound, "two-star-removal", detail);
            break;
        }
        default:
            break;
    }

    report.lower = monotone_lower_bound(spec.graph, known);
    report.lower_rule = "monotone containment";
    for (const auto& e : known.entries)
        if (e.value == report.lower && contains_subgraph(spec.graph, e.graph)) {
            report.lower_rule = e.name + " contained in target";
            break;
        }
    if (report.upper && *report.upper == report.lower) report.exact = report.lower;
    return report;
}

}  // namespace ramsey
