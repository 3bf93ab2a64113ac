#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hypercut/appendix.hpp"
#include "hypercut/arithmetic_complex.hpp"
#include "hypercut/collapsible_complex.hpp"
#include "hypercut/homology.hpp"
#include "hypercut/search.hpp"

namespace hypercut {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    int xn_nmax = 31;        // upper bound for the X_n / rank-formula suites
    int an_nmax = 15;        // upper bound for the A_n suite
    int threads = 1;
    std::uint64_t seed = 0;  // randomized suites (cut formula, appendix samples)
    double step = 1e-3;      // appendix grid resolution
    std::uint64_t samples = 1000000;  // appendix rational samples
    bool opt_in_n8 = false;  // include n=8 in the exhaustive sweep
};

namespace detail {
template <typename Fn>
CheckResult timed_check(const std::string& name, Fn&& fn) {
    CheckResult res;
    res.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        std::ostringstream detail;
        res.pass = fn(detail);
        res.detail = detail.str();
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

inline std::vector<int> primes_in(int lo, int hi) {
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}
}  // namespace detail

// 1. d_{d-1} d_d = 0 and rank(d_d on K_n^d) = C(n-1,d), n <= 8, d <= 3, both fields.
inline CheckResult criterion_boundary_algebra() {
    return detail::timed_check("boundary-algebra", [&](std::ostringstream& out) {
        bool ok = true;
        for (int n = 2; n <= 8; ++n) {
            for (int d = 1; d <= 3 && d < n; ++d) {
                const FaceSet full = complete_faces(n, d);
                const std::size_t want = binom(n - 1, d);
                const std::size_t r2 = boundary_matrix_f2(full).rank();
                const std::size_t rq = boundary_matrix_q(full).rank();
                if (r2 != want || rq != want) {
                    out << "rank(d_" << d << " K_" << n << ") = " << r2 << "/" << rq
                        << " want " << want << "; ";
                    ok = false;
                }
                if (d >= 2) {
                    const FaceSet lower = complete_faces(n, d - 1);
                    if (!Gf2Matrix::multiply(boundary_matrix_f2(lower), boundary_matrix_f2(full))
                             .is_zero() ||
                        !ExactMatrix::multiply(boundary_matrix_q(lower), boundary_matrix_q(full))
                             .is_zero()) {
                        out << "d_" << d - 1 << "*d_" << d << " != 0 at n=" << n << "; ";
                        ok = false;
                    }
                }
            }
        }
        if (ok) out << "all n <= 8, d <= 3, both fields";
        return ok;
    });
}

// 2. X_n suite over the qualifying primes.
inline CheckResult criterion_xn_suite(int nmax) {
    return detail::timed_check("xn-suite", [&](std::ostringstream& out) {
        bool ok = true;
        std::vector<int> qualifying;
        for (int n : detail::primes_in(5, nmax))
            if (artin_condition(n)) qualifying.push_back(n);
        for (int n : {5, 7, 11, 13, 19, 29}) {
            if (n <= nmax &&
                std::find(qualifying.begin(), qualifying.end(), n) == qualifying.end()) {
                out << "expected qualifying prime " << n << " missing; ";
                ok = false;
            }
        }
        for (int n : qualifying) {
            const FaceSet x = arithmetic_complex(n);
            const std::uint64_t want_size = binom(n - 1, 2) - 1;
            bool good = x.size() == want_size;
            good = good && collapse_all(x).collapsed();
            good = good && shadow(x, Field::Q).empty();
            good = good && certificate_check(n);
            good = good && block_form_check(n);
            const FaceSet comp = complement(x);
            good = good && comp.size() == binom(n, 3) - binom(n - 1, 2) + 1;
            good = good && is_perfect_hypercut(comp, Field::Q);
            out << "n=" << n << (good ? " ok" : " FAIL") << "; ";
            ok = ok && good;
        }
        return ok;
    });
}

// 3. rank_Q(X_n) = |X_n| - (n-1)([G_n:H_n] - 1) for every prime, checked
// against fraction-free elimination.
inline CheckResult criterion_rank_formula(int nmax) {
    return detail::timed_check("rank-formula", [&](std::ostringstream& out) {
        bool ok = true;
        for (int n : detail::primes_in(5, nmax)) {
            const FaceSet x = arithmetic_complex(n);
            const long long predicted =
                static_cast<long long>(x.size()) -
                static_cast<long long>(n - 1) * (group_index(n) - 1);
            const std::size_t bareiss = boundary_matrix_q(x).rank();
            const std::size_t incremental = face_rank(x, Field::Q);
            const bool good = bareiss == incremental &&
                              static_cast<long long>(bareiss) == predicted;
            out << "n=" << n << " idx=" << group_index(n) << " rank=" << bareiss
                << (good ? "" : " MISMATCH") << "; ";
            ok = ok && good;
        }
        return ok;
    });
}

// 4. Exhaustive F2 sweeps at n in {4..7} (plus 8 behind the opt-in flag).
inline CheckResult criterion_exhaustive(int threads, bool opt_in_n8) {
    return detail::timed_check("f2-exhaustive", [&](std::ostringstream& out) {
        bool ok = true;
        SweepOptions opts;
        opts.threads = threads;
        opts.opt_in_n8 = opt_in_n8;
        const int hi = opt_in_n8 ? 8 : 7;
        for (int n = 4; n <= hi; ++n) {
            const SearchReport rep = max_hypercut_exhaustive(n, opts);
            bool good = true;
            for (const auto& g : rep.witnesses) {
                const FaceSet c = sweep_coboundary(n, g);
                if (c.size() != rep.max_size) good = false;
                if (!is_hypercut(c, Field::F2)) good = false;
                if (!is_hypercut_via_links(c)) good = false;
            }
            std::string note;
            if (n == 6 && rep.max_size != binom(6, 3) - binom(5, 2) + 1) {
                // stated expectation: a perfect hypercut of size 11. Unattainable:
                // coboundaries at even n have even size, so the max sits at 10.
                good = false;
                note = " (required: perfect cut of size 11; parity makes odd coboundary sizes impossible at even n)";
            }
            if (n == 7 && rep.max_size >= binom(7, 3) - binom(6, 2) + 1) {
                // stated expectation: no cut of size 21. The sweep finds 360 of
                // them, each triple-verified as a hypercut.
                good = false;
                note = " (required: no cut of size 21; the sweep finds verified perfect cuts)";
            }
            out << "n=" << n << " max=" << rep.max_size << " maximizers="
                << rep.maximizer_count << (good ? "" : " FAIL") << note << "; ";
            ok = ok && good;
        }
        return ok;
    });
}

// 5. |coboundary_of(G)| = nm - sum d^2 + 4t on random link graphs.
inline CheckResult criterion_cut_formula(std::uint64_t seed) {
    return detail::timed_check("cut-size-formula", [&](std::ostringstream& out) {
        std::uint64_t state = seed;
        for (int trial = 0; trial < 200; ++trial) {
            state = splitmix64(state);
            const int n = 5 + static_cast<int>(state % 8);  // 5..12
            LinkGraph g(n, n - 1);
            for (Vertex a = 0; a + 1 < n - 1; ++a)
                for (Vertex b = a + 1; b < n - 1; ++b) {
                    state = splitmix64(state);
                    if (state & 1) g.add_edge(a, b);
                }
            const long long formula = cut_size_formula(CutProfile::of(g), n);
            const long long actual = static_cast<long long>(coboundary_of(g).size());
            if (formula != actual) {
                out << "trial " << trial << " n=" << n << ": formula " << formula
                    << " != |C| " << actual;
                return false;
            }
        }
        out << "200 random graphs, n <= 12, exact agreement";
        return true;
    });
}

// 6. family_max(n) = theorem_main_value(n) for n in {9..15}, witnesses verified.
inline CheckResult criterion_family(int) {
    return detail::timed_check("extremal-family", [&](std::ostringstream& out) {
        bool ok = true;
        for (int n = 9; n <= 15; ++n) {
            const SearchReport rep = family_max(n);
            const long long want = theorem_main_value(n);
            bool good = static_cast<long long>(rep.max_size) == want;
            for (const auto& gbar : rep.witnesses) {
                const FaceSet c = coboundary_of(gbar.complement_graph());
                if (static_cast<long long>(c.size()) != want) good = false;
                if (!is_hypercut(c, Field::F2)) good = false;
                if (!is_hypercut_via_links(c)) good = false;
                if (family_f_value(gbar, n) !=
                    static_cast<long long>(binom(n, 3)) - want) good = false;
            }
            out << "n=" << n << " max=" << rep.max_size << " want=" << want
                << " witnesses=" << rep.maximizer_count
                << " iso-classes=" << witness_iso_classes(rep) << (good ? "" : " FAIL")
                << "; ";
            ok = ok && good;
        }
        return ok;
    });
}

// 7. At n in {5,6}: brute-force simplicity <=> all links Lambda-connected <=>
// complement-characterization hypercut, for every coboundary.
inline CheckResult criterion_prop21() {
    return detail::timed_check("prop21-equivalence", [&](std::ostringstream& out) {
        for (int n : {5, 6}) {
            const auto tables = detail::make_sweep_tables(n, n - 1);
            const std::uint64_t total = std::uint64_t(1) << tables.num_edges;
            std::vector<std::uint64_t> cobs(total);
            std::uint64_t c = 0;
            for (std::uint64_t i = 0; i < total; ++i) {
                if (i > 0)
                    c ^= tables.edge_face_mask[std::countr_zero(
                        (i ^ (i >> 1)) ^ ((i - 1) ^ ((i - 1) >> 1)))];
                cobs[i] = c;
            }
            std::vector<std::uint64_t> sorted = cobs;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                out << "n=" << n << ": generator-to-coboundary map not injective";
                return false;
            }
            for (std::uint64_t cb : cobs) {
                bool simple = cb != 0;
                if (simple) {
                    for (std::uint64_t other : sorted) {
                        if (other == 0 || other == cb) continue;
                        if ((other & ~cb) == 0) {
                            simple = false;
                            break;
                        }
                    }
                }
                const bool via_links = detail::mask_is_hypercut(tables, cb);
                const bool via_complement =
                    is_hypercut(detail::mask_to_faceset(tables, cb), Field::F2);
                if (simple != via_links || via_links != via_complement) {
                    out << "n=" << n << " coboundary " << cb << ": simple=" << simple
                        << " links=" << via_links << " complement=" << via_complement;
                    return false;
                }
            }
        }
        out << "all coboundaries at n=5 (64) and n=6 (1024)";
        return true;
    });
}

// 8. A_n suite for odd n in {7..an_nmax}.
inline CheckResult criterion_an_suite(int nmax) {
    return detail::timed_check("an-suite", [&](std::ostringstream& out) {
        bool ok = true;
        for (int n = 7; n <= nmax; n += 2) {
            const FaceSet a = collapsible_shadowless_complex(n);
            bool good = a.size() == binom(n - 1, 2) - (n + 1);
            good = good && collapse_all(a).collapsed();
            good = good && shadow(a, Field::F2).empty() && shadow(a, Field::Q).empty();
            std::size_t insertions_ok = 0;
            const FaceSet comp = complement(a);
            for (std::uint32_t f : comp.idx) {
                FaceSet plus = a;
                plus.insert_index(f);
                if (collapse_all(plus).collapsed()) ++insertions_ok;
            }
            good = good && insertions_ok == comp.size();
            out << "n=" << n << " |A|=" << a.size() << " insertions=" << insertions_ok
                << "/" << comp.size() << (good ? "" : " FAIL") << "; ";
            ok = ok && good;
        }
        return ok;
    });
}

// 9. Even-d construction, d=4, n in {12..20}, 20 seeds each.
inline CheckResult criterion_even_dim(std::uint64_t seed) {
    return detail::timed_check("even-dim-random", [&](std::ostringstream& out) {
        constexpr int kSeeds = 20;
        bool ok = true;
        double prev_density = -1.0;
        bool monotone = true;
        for (int n = 12; n <= 20; ++n) {
            int connected = 0;
            double density_sum = 0.0;
            for (int s = 0; s < kSeeds; ++s) {
                const FaceSet k = random_even_dim_link(n, 4, seed + s);
                if (lambda_connected_complex(k)) ++connected;
                const FaceSet c = coboundary_of(k, n, 4);
                if (!is_coboundary(c)) {
                    out << "n=" << n << " seed " << s << ": C is not a coboundary";
                    return false;
                }
                density_sum += static_cast<double>(c.size()) / static_cast<double>(binom(n, 5));
            }
            const double rate = static_cast<double>(connected) / kSeeds;
            const double avg_density = density_sum / kSeeds;
            if (avg_density < prev_density) monotone = false;
            prev_density = avg_density;
            out << "n=" << n << " lambda-rate=" << rate << " density="
                << std::setprecision(4) << avg_density << "; ";
            if (rate < 0.9) ok = false;
        }
        if (!monotone) {
            out << "density not monotone; ";
            ok = false;
        }
        return ok;
    });
}

// 10. Odd-d density bound at d=3: every nonempty coboundary has density
// <= 1 - 1/(d+2) = 4/5, by exhaustive link enumeration.
inline CheckResult criterion_odd_density() {
    return detail::timed_check("odd-d-density", [&](std::ostringstream& out) {
        for (int n : {5, 6, 7}) {
            const std::size_t max_size = max_coboundary_size(n, 3);
            const double bound = (1.0 - 1.0 / 5.0) * static_cast<double>(binom(n, 4));
            out << "n=" << n << " max=" << max_size << "/" << binom(n, 4) << "; ";
            if (static_cast<double>(max_size) > bound) return false;
        }
        out << "density <= 4/5 everywhere";
        return true;
    });
}

// 11. Appendix optimization: exact optima, clean grid scan, exact samples.
inline CheckResult criterion_appendix(double step, std::uint64_t samples, std::uint64_t seed) {
    return detail::timed_check("appendix-optimization", [&](std::ostringstream& out) {
        const GridScanResult grid = minimize_g(step);
        bool ok = true;
        if (grid.value_at_optimum_1 != Rational(3, 4) ||
            grid.value_at_optimum_2 != Rational(3, 4)) {
            out << "optima do not evaluate to 3/4; ";
            ok = false;
        }
        if (!appendix_feasible(OptPoint{1, Rational(1, 2), 0}) ||
            !appendix_feasible(OptPoint{2, 1, Rational(1, 2)})) {
            out << "optima not feasible; ";
            ok = false;
        }
        if (grid.min_value < 0.75 - 1e-6) {
            out << "grid found g=" << grid.min_value << " < 3/4 - 1e-6; ";
            ok = false;
        }
        const std::uint64_t bad = appendix_sample_violations(samples, seed);
        if (bad != 0) {
            out << bad << " of " << samples << " rational samples violate h >= 0; ";
            ok = false;
        }
        if (ok)
            out << "grid min " << std::setprecision(10) << grid.min_value << " over "
                << grid.feasible_points << " points, " << samples
                << " exact samples, h >= 0";
        return ok;
    });
}

inline std::vector<CheckResult> run_acceptance(const AcceptanceOptions& o) {
    std::vector<CheckResult> out;
    out.push_back(criterion_boundary_algebra());
    out.push_back(criterion_xn_suite(o.xn_nmax));
    out.push_back(criterion_rank_formula(o.xn_nmax));
    out.push_back(criterion_exhaustive(o.threads, o.opt_in_n8));
    out.push_back(criterion_cut_formula(o.seed));
    out.push_back(criterion_family(o.threads));
    out.push_back(criterion_prop21());
    out.push_back(criterion_an_suite(o.an_nmax));
    out.push_back(criterion_even_dim(o.seed));
    out.push_back(criterion_odd_density());
    out.push_back(criterion_appendix(o.step, o.samples, o.seed));
    return out;
}

inline int print_results(const std::vector<CheckResult>& results, std::ostream& os) {
    int fails = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        os << (r.pass ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << r.name << " ("
           << std::fixed << std::setprecision(2) << r.seconds << "s): " << r.detail
           << '\n';
        os.unsetf(std::ios::fixed);
        if (!r.pass) ++fails;
    }
    return fails;
}

}  // namespace hypercut
