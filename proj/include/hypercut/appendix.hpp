#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hypercut/combinat.hpp"
#include "hypercut/exact_matrix.hpp"

namespace hypercut {

// A point of the appendix optimization problem: minimize
// g(gamma,x,y) = gamma - x^2 - gamma*y + y/2 + x*y subject to
//   1 <= gamma <= 9/4,  0 <= y <= x <= min(gamma/2, 1),
//   x + y <= gamma - 1/2,  x + y <= (1 + gamma)/2.
struct OptPoint {
    Rational gamma, x, y;
};

inline Rational appendix_g(const OptPoint& p) {
    return p.gamma - p.x * p.x - p.gamma * p.y + p.y / 2 + p.x * p.y;
}

inline Rational appendix_h(const OptPoint& p) {
    return appendix_g(p) - Rational(3, 4);
}

inline bool appendix_feasible(const OptPoint& p) {
    if (p.gamma < 1 || p.gamma > Rational(9, 4)) return false;
    if (p.y < 0 || p.y > p.x) return false;
    if (p.x > 1 || 2 * p.x > p.gamma) return false;
    if (p.x + p.y > p.gamma - Rational(1, 2)) return false;
    if (2 * (p.x + p.y) > 1 + p.gamma) return false;
    return true;
}

inline double appendix_g(double gamma, double x, double y) {
    return gamma - x * x - gamma * y + y / 2 + x * y;
}

inline bool appendix_feasible(double gamma, double x, double y) {
    return gamma >= 1.0 && gamma <= 2.25 && y >= 0.0 && y <= x &&
           x <= std::min(gamma / 2, 1.0) && x + y <= gamma - 0.5 &&
           x + y <= (1 + gamma) / 2;
}

struct GridScanResult {
    double step = 0.0;
    double min_value = 0.0;
    std::uint64_t feasible_points = 0;
    std::vector<std::array<double, 3>> near_optima;  // within 10*step of the minimum
    Rational value_at_optimum_1;                     // g(1, 1/2, 0)
    Rational value_at_optimum_2;                     // g(2, 1, 1/2)
};

// Grid scan over the feasible region plus exact evaluation at the two
// two exact optima (1, 1/2, 0) and (2, 1, 1/2).
inline GridScanResult minimize_g(double step) {
    if (step <= 0) throw std::invalid_argument("minimize_g: step must be positive");
    GridScanResult res;
    res.step = step;
    res.min_value = 1e300;
    const long long gi_max = static_cast<long long>((2.25 - 1.0) / step + 0.5);
    const long long xi_max = static_cast<long long>(1.0 / step + 0.5);
    std::vector<std::array<double, 3>> best_points;
    for (long long gi = 0; gi <= gi_max; ++gi) {
        const double gamma = 1.0 + gi * step;
        for (long long xi = 0; xi <= xi_max; ++xi) {
            const double x = xi * step;
            if (x > std::min(gamma / 2, 1.0)) break;
            const double ymax =
                std::min({x, gamma - 0.5 - x, (1 + gamma) / 2 - x});
            if (ymax < 0) continue;
            for (long long yi = 0;; ++yi) {
                const double y = yi * step;
                if (y > ymax) break;
                ++res.feasible_points;
                const double v = appendix_g(gamma, x, y);
                if (v < res.min_value) res.min_value = v;
                best_points.push_back({gamma, x, y});
                // keep the candidate list small: drop anything already far
                if (best_points.size() > 4096) {
                    const double cut = res.min_value + 10 * step;
                    best_points.erase(
                        std::remove_if(best_points.begin(), best_points.end(),
                                       [&](const auto& p) {
                                           return appendix_g(p[0], p[1], p[2]) > cut;
                                       }),
                        best_points.end());
                }
            }
        }
    }
    const double cut = res.min_value + 10 * step;
    for (const auto& p : best_points)
        if (appendix_g(p[0], p[1], p[2]) <= cut) res.near_optima.push_back(p);
    res.value_at_optimum_1 = appendix_g(OptPoint{1, Rational(1, 2), 0});
    res.value_at_optimum_2 = appendix_g(OptPoint{2, 1, Rational(1, 2)});
    return res;
}

// Draws pseudo-random rational feasible points (denominator 10^4) and checks
// h >= 0 exactly at each; returns the number of violations.
inline std::uint64_t appendix_sample_violations(std::uint64_t samples, std::uint64_t seed,
                                                std::uint64_t* accepted = nullptr) {
    constexpr long long kDen = 10000;
    std::uint64_t bad = 0, got = 0, state = seed;
    auto draw = [&](long long lo, long long hi) {
        state = splitmix64(state);
        return lo + static_cast<long long>(state % static_cast<std::uint64_t>(hi - lo + 1));
    };
    while (got < samples) {
        OptPoint p;
        p.gamma = Rational(draw(kDen, kDen * 9 / 4), kDen);
        p.x = Rational(draw(0, kDen), kDen);
        p.y = Rational(draw(0, kDen), kDen);
        if (!appendix_feasible(p)) continue;
        ++got;
        if (appendix_h(p) < 0) ++bad;
    }
    if (accepted) *accepted = got;
    return bad;
}

}  // namespace hypercut
