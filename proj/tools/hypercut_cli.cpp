// Command-line front end: construction, verification, search, and export of
// the simplicial structures handled by the library.
//
// Exit codes: 0 success / property verified, 1 property violation found,
// 2 usage or input error.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "hypercut/hypercut.hpp"

namespace {

using namespace hypercut;

Field parse_field(const std::string& s) {
    if (s == "f2" || s == "F2") return Field::F2;
    if (s == "q" || s == "Q") return Field::Q;
    throw CLI::ValidationError("--field", "must be f2 or q");
}

FaceSet load_complex(const std::string& path) { return read_complex_file(path); }

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    return out;
}

int cmd_construct(const std::string& kind, int n, int d, std::uint64_t seed,
                  bool with_classes, const std::string& out_path) {
    if (kind == "extremal-family") {
        const auto family = extremal_link_family(n);
        int idx = 0;
        for (const auto& gbar : family) {
            FaceSet edges(gbar.n, 1);
            for (const auto& [a, b] : gbar.edges()) edges.insert(Simplex{a, b});
            std::ostringstream name;
            name << out_path << '_' << std::setw(3) << std::setfill('0') << idx++ << ".cx";
            auto out = open_out(name.str());
            out << "# extremal-family candidate, f = " << family_f_value(gbar, n) << '\n';
            write_complex(edges, out);
        }
        std::cout << "wrote " << idx << " candidates to " << out_path << "_*.cx\n";
        return 0;
    }

    FaceSet fs;
    if (kind == "xn")
        fs = arithmetic_complex(n);
    else if (kind == "an")
        fs = collapsible_shadowless_complex(n);
    else if (kind == "star")
        fs = star_hypertree(n, d);
    else if (kind == "random-link")
        fs = random_even_dim_link(n, d, seed);
    else
        throw CLI::ValidationError("construct", "unknown generator " + kind);

    std::ostringstream body;
    if (kind == "random-link")
        body << "# random-link n=" << n << " d=" << d << " seed=" << seed
             << " p=" << std::setprecision(17) << random_link_probability(n, d) << '\n';
    write_complex(fs, body);
    if (kind == "xn" && with_classes) {
        const ArithClasses cls = arith_classes(n);
        for (int i = 0; i < cls.m; ++i) {
            body << "# class E 2^" << i << " (difference " << cls.pow2[i] << "):";
            for (const auto& [p, q] : cls.e_class[i]) body << ' ' << p << '-' << q;
            body << '\n';
        }
        for (int j = 0; j + 1 < cls.m; ++j) {
            body << "# class F 2^" << j << ":";
            for (const auto& t : cls.f_class[j]) body << ' ' << t[0] << '-' << t[1] << '-' << t[2];
            body << '\n';
        }
    }
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        auto out = open_out(out_path);
        out << body.str();
        std::cout << "wrote " << fs.size() << " faces to " << out_path << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "hypercut: boundary algebra, shadows, hypertrees, hypercuts and the associated "
        "extremal constructions over F2 and Q"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "generate a named complex");
    std::string gen_kind, out_path;
    int gen_n = 11, gen_d = 2;
    std::uint64_t gen_seed = 0;
    bool with_classes = false;
    construct->add_option("generator", gen_kind, "xn | an | star | random-link | extremal-family")
        ->required();
    construct->add_option("--n", gen_n, "vertex count")->required();
    construct->add_option("--d", gen_d, "dimension (star, random-link)");
    construct->add_option("--seed", gen_seed, "PRNG seed (random-link)");
    construct->add_flag("--classes", with_classes, "emit E/F class partition (xn)");
    construct->add_option("-o,--output", out_path, "output file (or prefix for extremal-family)");

    // rank
    auto* rank_cmd = app.add_subcommand("rank", "rank of a complex (or SMS matrix) over a field");
    std::string rank_field = "q", rank_input;
    bool rank_kernel = false;
    rank_cmd->add_option("--field", rank_field, "f2 | q")->required();
    rank_cmd->add_option("input", rank_input, "complex file (.cx) or SMS matrix (.sms)")->required();
    rank_cmd->add_flag("--kernel", rank_kernel, "also print the kernel dimension");

    // shadow
    auto* shadow_cmd = app.add_subcommand("shadow", "shadow of a face set");
    std::string shadow_field, shadow_input, shadow_out;
    shadow_cmd->add_option("--field", shadow_field, "f2 | q")->required();
    shadow_cmd->add_option("input", shadow_input)->required();
    shadow_cmd->add_option("-o,--output", shadow_out, "write shadow faces to a file");

    // collapse
    auto* collapse_cmd = app.add_subcommand("collapse", "greedy d-collapse; exit 1 if residual");
    std::string collapse_input, collapse_out;
    collapse_cmd->add_option("input", collapse_input)->required();
    collapse_cmd->add_option("-o,--output", collapse_out, "write the collapse sequence");

    // hypercut
    auto* hypercut_cmd = app.add_subcommand("hypercut", "test the hypercut predicates");
    std::string hc_field, hc_input;
    hypercut_cmd->add_option("--field", hc_field, "f2 | q")->required();
    hypercut_cmd->add_option("input", hc_input)->required();

    // lambda
    auto* lambda_cmd = app.add_subcommand("lambda", "Lambda-connectivity of a (d-1)-complex");
    std::string lambda_input;
    lambda_cmd->add_option("input", lambda_input)->required();

    // search
    auto* search_cmd = app.add_subcommand("search", "maximum hypercut search over F2");
    int search_n = 6, search_threads = 0;
    bool opt_in_n8 = false;
    std::string search_mode = "auto", search_out;
    search_cmd->add_option("--n", search_n, "vertex count")->required();
    search_cmd->add_option("--mode", search_mode, "auto | exhaustive | family");
    search_cmd->add_option("--threads", search_threads, "worker threads (default: cores)");
    search_cmd->add_flag("--opt-in-n8", opt_in_n8, "allow the 2^21 exhaustive sweep at n=8");
    search_cmd->add_option("-o,--output", search_out, "report file (default stdout)");

    // appendix
    auto* appendix_cmd = app.add_subcommand("appendix", "verify the optimization minimum 3/4");
    double app_step = 1e-3;
    std::uint64_t app_samples = 1000000, app_seed = 0;
    appendix_cmd->add_option("--step", app_step, "grid resolution");
    appendix_cmd->add_option("--samples", app_samples, "exact rational samples");
    appendix_cmd->add_option("--seed", app_seed, "sample seed");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run acceptance suites");
    std::string suite = "all";
    int verify_nmax = 31, verify_an_nmax = 15, verify_threads = 0;
    std::uint64_t verify_seed = 0;
    bool verify_n8 = false;
    verify_cmd->add_option("--suite", suite,
                           "all | boundary | xn | rank-formula | exhaustive | cut-formula | "
                           "family | prop21 | an | even-dim | odd-density | appendix");
    verify_cmd->add_option("--nmax", verify_nmax, "prime bound for xn/rank-formula");
    verify_cmd->add_option("--an-nmax", verify_an_nmax, "bound for the an suite");
    verify_cmd->add_option("--threads", verify_threads, "worker threads");
    verify_cmd->add_option("--seed", verify_seed, "seed for randomized suites");
    verify_cmd->add_flag("--opt-in-n8", verify_n8, "include n=8 in the exhaustive sweep");
    double verify_step = 1e-3;
    std::uint64_t verify_samples = 1000000;
    verify_cmd->add_option("--step", verify_step, "appendix grid resolution");
    verify_cmd->add_option("--samples", verify_samples, "appendix rational samples");

    // export
    auto* export_cmd = app.add_subcommand("export", "boundary matrix of a complex as SMS");
    std::string export_field, export_input, export_out;
    export_cmd->add_option("--field", export_field, "f2 | q")->required();
    export_cmd->add_option("input", export_input)->required();
    export_cmd->add_option("-o,--output", export_out)->required();

    try {
        app.parse(argc, argv);

        if (*construct)
            return cmd_construct(gen_kind, gen_n, gen_d, gen_seed, with_classes, out_path);

        if (*rank_cmd) {
            const Field f = parse_field(rank_field);
            std::size_t r = 0, cols = 0;
            if (rank_input.size() > 4 && rank_input.substr(rank_input.size() - 4) == ".sms") {
                const ExactMatrix m = read_sms_file(rank_input);
                cols = m.cols();
                if (f == Field::Q) {
                    r = m.rank();
                } else {
                    Gf2Matrix g(m.rows(), m.cols());
                    for (std::size_t i = 0; i < m.rows(); ++i)
                        for (std::size_t j = 0; j < m.cols(); ++j)
                            if (m.at(i, j) % 2 != 0) g.set(i, j, true);
                    r = g.rank();
                }
            } else {
                const FaceSet fs = load_complex(rank_input);
                cols = fs.size();
                r = face_rank(fs, f);
            }
            std::cout << "rank (" << to_string(f) << "): " << r << '\n';
            if (rank_kernel) std::cout << "kernel dimension: " << cols - r << '\n';
            return 0;
        }

        if (*shadow_cmd) {
            const Field f = parse_field(shadow_field);
            const FaceSet fs = load_complex(shadow_input);
            const FaceSet sh = shadow(fs, f);
            if (sh.empty())
                std::cout << "shadow: empty\n";
            else
                std::cout << "shadow: " << sh.size() << " faces\n";
            if (!shadow_out.empty()) {
                auto out = open_out(shadow_out);
                write_complex(sh, out);
            }
            return 0;
        }

        if (*collapse_cmd) {
            const FaceSet fs = load_complex(collapse_input);
            const CollapseSequence seq = collapse_all(fs);
            std::cout << "steps: " << seq.steps.size() << ", residual: " << seq.residual()
                      << '\n';
            if (!collapse_out.empty()) {
                auto out = open_out(collapse_out);
                write_collapse_sequence(seq, out);
            }
            return seq.collapsed() ? 0 : 1;
        }

        if (*hypercut_cmd) {
            const Field f = parse_field(hc_field);
            const FaceSet fs = load_complex(hc_input);
            const bool cut = is_hypercut(fs, f);
            const bool perfect = cut && is_perfect_hypercut(fs, f);
            std::cout << "hypercut (" << to_string(f) << "): " << (cut ? "yes" : "no") << '\n';
            if (cut) std::cout << "perfect: " << (perfect ? "yes" : "no") << '\n';
            if (f == Field::F2 && fs.d == 2 && is_coboundary(fs))
                std::cout << "link criterion: "
                          << (is_hypercut_via_links(fs) ? "yes" : "no") << '\n';
            return cut ? 0 : 1;
        }

        if (*lambda_cmd) {
            const FaceSet fs = load_complex(lambda_input);
            const std::size_t classes = lambda_classes_complex(fs);
            std::cout << "lambda classes: " << classes << '\n';
            const bool connected = classes == 1;
            std::cout << "lambda-connected: " << (connected ? "yes" : "no") << '\n';
            return connected ? 0 : 1;
        }

        if (*search_cmd) {
            SearchReport rep;
            const int threads = search_threads > 0
                                    ? search_threads
                                    : std::max(1u, std::thread::hardware_concurrency());
            const bool exhaustive =
                search_mode == "exhaustive" ||
                (search_mode == "auto" && (search_n <= 7 || (search_n == 8 && opt_in_n8)));
            if (exhaustive) {
                SweepOptions opts;
                opts.threads = threads;
                opts.opt_in_n8 = opt_in_n8;
                rep = max_hypercut_exhaustive(search_n, opts);
            } else {
                rep = family_max(search_n);
            }
            if (search_out.empty()) {
                rep.write(std::cout);
            } else {
                auto out = open_out(search_out);
                rep.write(out);
                std::cout << "max hypercut size at n=" << search_n << ": " << rep.max_size
                          << " (" << rep.mode << ", theorem value "
                          << theorem_main_value(search_n) << ")\n";
            }
            return 0;
        }

        if (*appendix_cmd) {
            const auto res = hypercut::criterion_appendix(app_step, app_samples, app_seed);
            std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << res.name << ": " << res.detail
                      << '\n';
            return res.pass ? 0 : 1;
        }

        if (*verify_cmd) {
            AcceptanceOptions opts;
            opts.xn_nmax = verify_nmax;
            opts.an_nmax = verify_an_nmax;
            opts.seed = verify_seed;
            opts.opt_in_n8 = verify_n8;
            opts.step = verify_step;
            opts.samples = verify_samples;
            opts.threads = verify_threads > 0
                               ? verify_threads
                               : std::max(1u, std::thread::hardware_concurrency());
            std::vector<CheckResult> results;
            auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
            if (want("boundary")) results.push_back(criterion_boundary_algebra());
            if (want("xn")) results.push_back(criterion_xn_suite(opts.xn_nmax));
            if (want("rank-formula")) results.push_back(criterion_rank_formula(opts.xn_nmax));
            if (want("exhaustive"))
                results.push_back(criterion_exhaustive(opts.threads, opts.opt_in_n8));
            if (want("cut-formula")) results.push_back(criterion_cut_formula(opts.seed));
            if (want("family")) results.push_back(criterion_family(opts.threads));
            if (want("prop21")) results.push_back(criterion_prop21());
            if (want("an")) results.push_back(criterion_an_suite(opts.an_nmax));
            if (want("even-dim")) results.push_back(criterion_even_dim(opts.seed));
            if (want("odd-density")) results.push_back(criterion_odd_density());
            if (want("appendix"))
                results.push_back(criterion_appendix(opts.step, opts.samples, opts.seed));
            if (results.empty()) throw CLI::ValidationError("--suite", "unknown suite " + suite);
            const int fails = print_results(results, std::cout);
            return fails == 0 ? 0 : 1;
        }

        if (*export_cmd) {
            const Field f = parse_field(export_field);
            const FaceSet fs = load_complex(export_input);
            auto out = open_out(export_out);
            write_sms(boundary_matrix(fs, f), out);
            std::cout << "wrote " << binom(fs.n, fs.d) << " x " << fs.size() << " matrix to "
                      << export_out << '\n';
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
