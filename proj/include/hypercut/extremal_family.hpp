#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercut/link_graph.hpp"

namespace hypercut {

// Structure of H = Gbar \ v1 for candidate extremal complement links:
// a perfect matching, a matching plus an isolated vertex, or a matching plus
// an isolated vertex and a 3-vertex path. Parity of n decides which occur.
enum class FamilyVariant { Auto, Matching, MatchingIsolated, MatchingIsolatedP3 };

inline std::string to_string(FamilyVariant v) {
    switch (v) {
        case FamilyVariant::Matching: return "matching";
        case FamilyVariant::MatchingIsolated: return "matching+isolated";
        case FamilyVariant::MatchingIsolatedP3: return "matching+isolated+p3";
        default: return "auto";
    }
}

namespace detail {

// Appends every admissible attachment of the hub v1 for the given component
// layout. Constraints from the structure lemma: v1 has a neighbour in every
// component of H, is fully connected to at most one component (an attached
// isolated vertex counts as fully connected), and has exactly one endpoint
// neighbour in a 3-vertex path (the midpoint may or may not be attached).
inline void emit_candidates(int n, bool with_isolated, bool with_p3,
                            std::vector<LinkGraph>& out) {
    const Vertex hub = 0;
    const Vertex center = n - 1;  // the link vertex of the eventual cut
    Vertex next = 1;
    const Vertex isolated = with_isolated ? next : -1;
    if (with_isolated) ++next;
    Vertex p3a = -1, p3b = -1, p3c = -1;
    if (with_p3) {
        p3a = next;
        p3b = next + 1;
        p3c = next + 2;
        next += 3;
    }
    std::vector<std::pair<Vertex, Vertex>> matching;
    while (next + 1 <= n - 2) {
        matching.push_back({next, next + 1});
        next += 2;
    }
    if (next != n - 1) return;  // parity mismatch: no candidates of this shape

    const int k = static_cast<int>(matching.size());
    // full = index of the fully connected matching edge, or -1; only allowed
    // when no isolated vertex consumes the budget
    const int full_lo = -1;
    const int full_hi = with_isolated ? -1 : k - 1;
    for (int full = full_lo; full <= full_hi; ++full) {
        for (std::uint32_t pick = 0; pick < (1u << k); ++pick) {
            // p3 attachment: endpoint choice x optional midpoint
            const int p3_patterns = with_p3 ? 4 : 1;
            for (int pat = 0; pat < p3_patterns; ++pat) {
                LinkGraph g(n, center);
                for (int e = 0; e < k; ++e) g.add_edge(matching[e].first, matching[e].second);
                if (with_p3) {
                    g.add_edge(p3a, p3b);
                    g.add_edge(p3b, p3c);
                }
                for (int e = 0; e < k; ++e) {
                    if (e == full) {
                        g.add_edge(hub, matching[e].first);
                        g.add_edge(hub, matching[e].second);
                    } else {
                        g.add_edge(hub, ((pick >> e) & 1) ? matching[e].second
                                                          : matching[e].first);
                    }
                }
                if (with_isolated) g.add_edge(hub, isolated);
                if (with_p3) {
                    g.add_edge(hub, (pat & 1) ? p3c : p3a);
                    if (pat & 2) g.add_edge(hub, p3b);
                }
                out.push_back(std::move(g));
            }
        }
    }
}

}  // namespace detail

// Candidate complement links Gbar on n-1 labeled vertices (hub = vertex 0,
// link vertex = n-1). Duplicate attachment patterns that differ only by the
// within-edge endpoint choice are kept; callers dealing in isomorphism
// classes deduplicate afterwards.
inline std::vector<LinkGraph> extremal_link_family(int n,
                                                   FamilyVariant variant = FamilyVariant::Auto) {
    if (n < 8) throw std::invalid_argument("extremal_link_family: need n >= 8");
    std::vector<LinkGraph> out;
    const bool even = (n % 2 == 0);
    auto want = [&](FamilyVariant v) {
        return variant == FamilyVariant::Auto || variant == v;
    };
    if (even && want(FamilyVariant::Matching)) detail::emit_candidates(n, false, false, out);
    if (!even && want(FamilyVariant::MatchingIsolated)) detail::emit_candidates(n, true, false, out);
    if (want(FamilyVariant::MatchingIsolatedP3)) detail::emit_candidates(n, true, true, out);
    return out;
}

// f(Gbar) = n*m - sum d_i^2 + 4t; the size of the generated complement
// coboundary, hence C(n,3) - f is the size of the candidate cut.
inline long long family_f_value(const LinkGraph& gbar, int n) {
    long long sum_sq = 0;
    for (Vertex v = 0; v < gbar.n; ++v) {
        const long long d = gbar.degree(v);
        sum_sq += d * d;
    }
    return static_cast<long long>(n) * static_cast<long long>(gbar.edge_count()) - sum_sq +
           4 * static_cast<long long>(gbar.triangle_count());
}

}  // namespace hypercut
