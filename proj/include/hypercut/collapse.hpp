#pragma once

#include <cstdint>
#include <deque>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hypercut/boundary.hpp"
#include "hypercut/simplex.hpp"

namespace hypercut {

// One elementary d-collapse: the exposed (d-1)-face and the unique d-face it
// was removed with.
struct CollapseStep {
    Simplex exposed;
    Simplex removed;
};

struct CollapseSequence {
    std::vector<CollapseStep> steps;
    FaceSet remaining;  // d-faces left when no exposed face remains

    std::size_t residual() const { return remaining.size(); }
    bool collapsed() const { return remaining.empty(); }
};

namespace detail {
// coface lists keyed by (d-1)-face colex index
inline std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> coface_map(
    const FaceSet& fs) {
    std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> m;
    for (std::uint32_t f : fs.idx)
        for (const auto& [r, v] : boundary_column(fs.d, f)) {
            (void)v;
            m[r].push_back(f);
        }
    return m;
}
}  // namespace detail

// (d-1)-faces contained in exactly one d-face, with that face.
inline std::vector<std::pair<Simplex, Simplex>> exposed_faces(const FaceSet& fs) {
    auto cof = detail::coface_map(fs);
    std::vector<std::uint32_t> keys;
    keys.reserve(cof.size());
    for (const auto& [k, v] : cof)
        if (v.size() == 1) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    std::vector<std::pair<Simplex, Simplex>> out;
    out.reserve(keys.size());
    for (auto k : keys)
        out.emplace_back(Simplex(colex_unrank(k, fs.d)),
                         Simplex(colex_unrank(cof[k][0], fs.d + 1)));
    return out;
}

// Greedy queue-driven collapsing. Elementary collapses are locally confluent
// on the set of remaining d-faces, so any maximal greedy run decides
// d-collapsibility; the queue is seeded with exposed faces in colex order.
inline CollapseSequence collapse_all(const FaceSet& fs) {
    auto cof = detail::coface_map(fs);
    std::vector<char> alive(fs.ambient_count(), 0);
    for (std::uint32_t f : fs.idx) alive[f] = 1;

    std::deque<std::uint32_t> queue;
    {
        std::vector<std::uint32_t> seed;
        for (const auto& [tau, list] : cof)
            if (list.size() == 1) seed.push_back(tau);
        std::sort(seed.begin(), seed.end());
        queue.assign(seed.begin(), seed.end());
    }

    CollapseSequence out;
    while (!queue.empty()) {
        const std::uint32_t tau = queue.front();
        queue.pop_front();
        auto it = cof.find(tau);
        if (it == cof.end()) continue;
        auto& list = it->second;
        list.erase(std::remove_if(list.begin(), list.end(),
                                  [&](std::uint32_t f) { return !alive[f]; }),
                   list.end());
        if (list.size() != 1) continue;
        const std::uint32_t sigma = list[0];
        alive[sigma] = 0;
        out.steps.push_back({Simplex(colex_unrank(tau, fs.d)),
                             Simplex(colex_unrank(sigma, fs.d + 1))});
        for (const auto& [r, v] : boundary_column(fs.d, sigma)) {
            (void)v;
            if (r == tau) continue;
            auto jt = cof.find(r);
            if (jt == cof.end()) continue;
            std::size_t live = 0;
            for (std::uint32_t f : jt->second)
                if (alive[f]) ++live;
            if (live == 1) queue.push_back(r);
        }
    }

    out.remaining = FaceSet(fs.n, fs.d);
    for (std::uint32_t f : fs.idx)
        if (alive[f]) out.remaining.idx.push_back(f);
    return out;
}

}  // namespace hypercut
