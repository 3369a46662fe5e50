// minksum: exact Minkowski sums of convex polytopes from face lattices.
//
// Exit codes: 0 success; 1 failed check/cmp; 2 degenerate input (report on
// stderr); 64 usage error; 70 internal error; 74 I/O or input-file error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "minksum/gen.hpp"
#include "minksum/io.hpp"
#include "minksum/minkd.hpp"
#include "minksum/multi.hpp"
#include "minksum/oracle.hpp"
#include "minksum/planar.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;
constexpr int kExitIo = 74;

uint64_t default_seed() {
    if (const char* env = std::getenv("MINKSUM_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw minksum::InvalidArgument("MINKSUM_SEED is not an integer");
        }
    }
    return 1;
}

std::vector<minksum::Polytope> load_all(const std::vector<std::string>& paths) {
    std::vector<minksum::Polytope> out;
    out.reserve(paths.size());
    for (const auto& p : paths) out.push_back(minksum::load_polytope(p));
    return out;
}

std::vector<const minksum::Polytope*> pointers(const std::vector<minksum::Polytope>& ps) {
    std::vector<const minksum::Polytope*> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(&p);
    return out;
}

double elapsed_ms(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

int run_bench(const std::vector<int>& dims, const std::vector<int>& sizes,
              const std::vector<uint64_t>& seeds, const std::string& csv_path,
              bool paranoid) {
    using namespace minksum;
    std::ostringstream csv;
    csv << "dim,n_size,m_size,out_size,pairs_tested,millis,mode\n";
    const char* mode_name = paranoid ? "paranoid" : "fast";
    for (int dim : dims) {
        for (int size : sizes) {
            for (uint64_t seed : seeds) {
                // Draw a pair; if a draw happens to be degenerate, bump the
                // derived seed and retry so every row gets filled.
                bool done = false;
                for (uint64_t bump = 0; bump < 20 && !done; ++bump) {
                    const uint64_t s = seed + bump * 7919;
                    const Polytope p = random_polytope({dim, size, s, 1000});
                    const Polytope q = generic_rotate(
                        random_polytope({dim, size, s ^ 0xa5a5a5a5a5a5a5a5ULL, 1000}), s + 1);
                    try {
                        MinkStats stats;
                        const auto start = std::chrono::steady_clock::now();
                        const Polytope sum = minkowski_sum(
                            p, q, paranoid ? SumMode::paranoid : SumMode::fast, &stats);
                        const double ms = elapsed_ms(start);
                        csv << dim << "," << p.lattice.size() << "," << q.lattice.size() << ","
                            << sum.lattice.size() << "," << stats.pairs_tested << "," << ms
                            << "," << mode_name << "\n";
                        done = true;
                    } catch (const DegenerateInput&) {
                        continue;
                    }
                }
                if (!done) {
                    std::cerr << "bench: skipped dim=" << dim << " size=" << size
                              << " seed=" << seed << " (persistent degeneracy)\n";
                }
            }
        }
    }
    minksum::atomic_write(csv_path, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace minksum;
    CLI::App app{"Exact Minkowski sums of convex polytopes via face lattices"};
    app.require_subcommand(1);

    // sum
    auto* sum_cmd = app.add_subcommand("sum", "Minkowski sum of two polytopes");
    std::vector<std::string> sum_inputs;
    std::string sum_out;
    bool sum_paranoid = false;
    sum_cmd->add_option("inputs", sum_inputs, "two lattice JSON files")->expected(2);
    sum_cmd->add_option("-o,--output", sum_out, "output lattice JSON")->required();
    sum_cmd->add_flag("--paranoid", sum_paranoid, "re-verify facets by the full support test");

    // msum
    auto* msum_cmd = app.add_subcommand("msum", "simultaneous n-way Minkowski sum");
    std::vector<std::string> msum_inputs;
    std::string msum_out;
    bool msum_paranoid = false;
    msum_cmd->add_option("inputs", msum_inputs, "lattice JSON files")->expected(-2);
    msum_cmd->add_option("-o,--output", msum_out, "output lattice JSON")->required();
    msum_cmd->add_flag("--paranoid", msum_paranoid, "re-verify facets by the full support test");

    // sum2d
    auto* sum2d_cmd = app.add_subcommand("sum2d", "planar fast path for convex polygons");
    std::vector<std::string> sum2d_inputs;
    std::string sum2d_out;
    sum2d_cmd->add_option("inputs", sum2d_inputs, "polygon lattice JSON files")->expected(-2);
    sum2d_cmd->add_option("-o,--output", sum2d_out, "output lattice JSON")->required();

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference Minkowski sum");
    std::vector<std::string> oracle_inputs;
    std::string oracle_out;
    oracle_cmd->add_option("inputs", oracle_inputs, "lattice JSON files")->expected(-1);
    oracle_cmd->add_option("-o,--output", oracle_out, "output lattice JSON")->required();

    // check
    auto* check_cmd = app.add_subcommand("check", "validate a lattice file");
    std::string check_input;
    check_cmd->add_option("input", check_input)->required();

    // cmp
    auto* cmp_cmd = app.add_subcommand("cmp", "test two lattices for isomorphism");
    std::vector<std::string> cmp_inputs;
    cmp_cmd->add_option("inputs", cmp_inputs)->expected(2);

    // fvector
    auto* fvec_cmd = app.add_subcommand("fvector", "print the f-vector");
    std::string fvec_input;
    fvec_cmd->add_option("input", fvec_input)->required();

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a seeded random polytope");
    int gen_dim = 3, gen_points = 8;
    long gen_bound = 1000;
    uint64_t gen_seed = 0;
    bool gen_seed_set = false;
    std::string gen_out;
    gen_cmd->add_option("--dim", gen_dim, "ambient dimension")->required();
    gen_cmd->add_option("--points", gen_points, "points to draw")->required();
    gen_cmd->add_option("--seed", gen_seed)->each([&](const std::string&) { gen_seed_set = true; });
    gen_cmd->add_option("--bound", gen_bound, "coordinate bound");
    gen_cmd->add_option("-o,--output", gen_out)->required();

    // rotate
    auto* rot_cmd = app.add_subcommand("rotate", "apply a seeded exact rational rotation");
    std::string rot_input, rot_out;
    uint64_t rot_seed = 0;
    bool rot_seed_set = false;
    rot_cmd->add_option("input", rot_input)->required();
    rot_cmd->add_option("--seed", rot_seed)->each([&](const std::string&) { rot_seed_set = true; });
    rot_cmd->add_option("-o,--output", rot_out)->required();

    // off
    auto* off_cmd = app.add_subcommand("off", "export a 3-polytope as OFF");
    std::string off_input, off_out;
    off_cmd->add_option("input", off_input)->required();
    off_cmd->add_option("-o,--output", off_out)->required();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "timing/scaling benchmark, CSV output");
    std::vector<int> bench_dims{3};
    std::vector<int> bench_sizes{8, 16};
    std::vector<uint64_t> bench_seeds{1};
    std::string bench_csv;
    bool bench_paranoid = false;
    bench_cmd->add_option("--dims", bench_dims)->delimiter(',');
    bench_cmd->add_option("--sizes", bench_sizes)->delimiter(',');
    bench_cmd->add_option("--seeds", bench_seeds)->delimiter(',');
    bench_cmd->add_option("--csv", bench_csv, "output CSV path")->required();
    bench_cmd->add_flag("--paranoid", bench_paranoid);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*sum_cmd) {
            const auto inputs = load_all(sum_inputs);
            const Polytope sum =
                minkowski_sum(inputs[0], inputs[1],
                              sum_paranoid ? SumMode::paranoid : SumMode::fast);
            save_polytope(sum, sum_out);
        } else if (*msum_cmd) {
            const auto inputs = load_all(msum_inputs);
            const Polytope sum = multi_minkowski_sum(
                pointers(inputs), msum_paranoid ? SumMode::paranoid : SumMode::fast);
            save_polytope(sum, msum_out);
        } else if (*sum2d_cmd) {
            const auto inputs = load_all(sum2d_inputs);
            std::vector<ConvexPolygon> polys;
            for (const auto& p : inputs) polys.push_back(polygon_from_lattice(p));
            const ConvexPolygon sum = polys.size() == 2 ? sum_polygons(polys[0], polys[1])
                                                        : sum_polygons_multi(polys);
            std::string label;
            for (size_t i = 0; i < inputs.size(); ++i) {
                if (i) label += " + ";
                label += inputs[i].label;
            }
            save_polytope(lattice_from_polygon(sum, label), sum2d_out);
        } else if (*oracle_cmd) {
            const auto inputs = load_all(oracle_inputs);
            save_polytope(oracle_minkowski(pointers(inputs)), oracle_out);
        } else if (*check_cmd) {
            const Polytope p = load_polytope(check_input, /*validate=*/false);
            const ValidationReport report = validate_lattice(p.lattice, ValidationLevel::full);
            const bool euler = euler_check(p.lattice);
            for (const auto& v : report.violations) std::cout << "violation: " << v << "\n";
            if (!euler) std::cout << "violation: Euler characteristic check failed\n";
            if (!report.ok || !euler) return kExitCheckFailed;
            std::cout << "ok\n";
        } else if (*cmp_cmd) {
            const auto inputs = load_all(cmp_inputs);
            if (!lattice_isomorphic(inputs[0].lattice, inputs[1].lattice)) {
                std::cout << "different\n";
                return kExitCheckFailed;
            }
            std::cout << "isomorphic\n";
        } else if (*fvec_cmd) {
            const Polytope p = load_polytope(fvec_input);
            const auto f = p.lattice.f_vector();
            for (size_t i = 0; i < f.size(); ++i) {
                if (i) std::cout << " ";
                std::cout << f[i];
            }
            std::cout << "\n";
        } else if (*gen_cmd) {
            const uint64_t seed = gen_seed_set ? gen_seed : default_seed();
            save_polytope(random_polytope({gen_dim, gen_points, seed, gen_bound}), gen_out);
        } else if (*rot_cmd) {
            const uint64_t seed = rot_seed_set ? rot_seed : default_seed();
            save_polytope(generic_rotate(load_polytope(rot_input), seed), rot_out);
        } else if (*off_cmd) {
            save_off(load_polytope(off_input), off_out);
        } else if (*bench_cmd) {
            return run_bench(bench_dims, bench_sizes, bench_seeds, bench_csv, bench_paranoid);
        }
        return 0;
    } catch (const DegenerateInput& e) {
        std::cerr << "degenerate input:\n" << e.report.to_string();
        return kExitDegenerate;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ValidationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const NotFullDimensional& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
