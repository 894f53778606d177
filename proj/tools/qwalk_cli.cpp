// qwalk: continuous-time quantum/classical walks on star-to-complete graph
// interpolations. Emits figure-ready CSV plus a JSON run manifest.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwalk/census.hpp"
#include "qwalk/ensemble.hpp"
#include "qwalk/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

enum ExitCode { kOk = 0, kUsage = 2, kCapacity = 3, kNumeric = 4 };

struct GridOpts {
    double t_start = 1e-2;
    double t_end = 1e2;
    int samples = 400;
    bool linear = false;

    qwalk::TimeGrid grid() const {
        return linear ? qwalk::TimeGrid::linear_grid(t_start, t_end, samples)
                      : qwalk::TimeGrid::log_grid(t_start, t_end, samples);
    }
};

void add_grid_opts(CLI::App* cmd, GridOpts& g) {
    cmd->add_option("--t-start", g.t_start, "First grid time");
    cmd->add_option("--t-end", g.t_end, "Last grid time");
    cmd->add_option("--samples", g.samples, "Grid point count");
    cmd->add_flag("--linear", g.linear, "Linear grid (default: logarithmic)");
}

int threads_from_env() {
    if (const char* env = std::getenv("QWALK_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;
}

std::vector<qwalk::Edge> parse_bonds(const std::string& spec) {
    std::vector<qwalk::Edge> bonds;
    std::istringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos)
            throw qwalk::invalid_argument_error("bad bond spec (want i-j,k-l,...): " + item);
        bonds.push_back(qwalk::make_edge(std::stoi(item.substr(0, dash)),
                                         std::stoi(item.substr(dash + 1))));
    }
    return bonds;
}

struct TopologyOpts {
    std::string topology = "star";
    int n = 10;
    int b = 0;
    std::string bonds;
    uint64_t seed = 0;
    std::string input;

    qwalk::Graph build() const {
        if (!input.empty()) {
            std::ifstream is(input);
            if (!is) throw qwalk::invalid_argument_error("cannot open " + input);
            return qwalk::read_edge_list(is);
        }
        if (topology == "star") return qwalk::build_star(n);
        if (topology == "complete") return qwalk::build_complete(n);
        if (topology == "star+bonds") {
            if (!bonds.empty()) return qwalk::star_plus_bonds(n, parse_bonds(bonds));
            return qwalk::sample_realization(n, b, seed);
        }
        throw qwalk::invalid_argument_error("unknown topology: " + topology);
    }
};

void add_topology_opts(CLI::App* cmd, TopologyOpts& t) {
    cmd->add_option("--topology", t.topology, "star | complete | star+bonds")
        ->check(CLI::IsMember({"star", "complete", "star+bonds"}));
    cmd->add_option("--n", t.n, "Node count");
    cmd->add_option("--b", t.b, "Random additional bonds (star+bonds)");
    cmd->add_option("--bonds", t.bonds, "Explicit leaf bonds, e.g. 2-3,4-5");
    cmd->add_option("--seed", t.seed, "RNG seed for random bonds");
    cmd->add_option("--input", t.input, "Read graph from an edge-list file instead");
}

// Tracks outputs and writes manifest.json at the end of a command.
struct RunContext {
    fs::path out_dir;
    json manifest;
    std::vector<std::string> outputs;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    explicit RunContext(const std::string& out, const std::string& command) {
        out_dir = out;
        fs::create_directories(out_dir);
        manifest["command"] = command;
        manifest["artifact_version"] = kVersion;
        manifest["tolerances"] = {{"tol_eig", qwalk::tol::eig},
                                  {"tol_group", qwalk::tol::group}};
    }

    std::ofstream open(const std::string& name) {
        outputs.push_back(name);
        return std::ofstream(out_dir / name);
    }

    void finish() {
        manifest["outputs"] = outputs;
        manifest["wall_time_s"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ofstream os(out_dir / "manifest.json");
        os << manifest.dump(2) << "\n";
    }
};

json edge_json(const std::vector<qwalk::Edge>& edges) {
    json arr = json::array();
    for (const auto& [a, b] : edges) arr.push_back({a, b});
    return arr;
}

int run_spectrum(const TopologyOpts& topo, const std::string& out, bool export_graph) {
    RunContext ctx(out, "spectrum");
    const auto g = topo.build();
    const auto dec = qwalk::eigendecompose(qwalk::connectivity_matrix(g));
    {
        auto os = ctx.open("spectrum.csv");
        qwalk::write_spectrum_csv(os, dec.spectrum);
    }
    {
        auto os = ctx.open("dos.csv");
        qwalk::write_dos_csv(os, qwalk::density_of_states(dec.spectrum));
    }
    {
        auto os = ctx.open("vectors.csv");
        qwalk::write_vectors_csv(os, dec);
    }
    if (export_graph) {
        auto os = ctx.open("graph.edges");
        qwalk::write_edge_list(os, g);
    }
    for (const auto& grp : dec.spectrum.groups)
        std::cout << "E = " << qwalk::format_double(grp.value)
                  << "  multiplicity " << grp.multiplicity << "\n";
    ctx.manifest["params"] = {{"topology", topo.topology}, {"n", topo.n},
                              {"b", topo.b}, {"seed", topo.seed}};
    ctx.finish();
    return kOk;
}

int run_walk(const TopologyOpts& topo, const GridOpts& grid_opts, const std::string& out) {
    RunContext ctx(out, "walk");
    const auto g = topo.build();
    const auto dec = qwalk::eigendecompose(qwalk::connectivity_matrix(g));
    const auto grid = grid_opts.grid();
    const auto pbar = qwalk::avg_return_classical(dec.spectrum, grid);
    const auto alpha = qwalk::avg_return_amplitude_sq(dec.spectrum, grid);
    const auto pibar = qwalk::avg_return_quantum_exact(dec, grid);
    {
        auto os = ctx.open("observables.csv");
        qwalk::write_observables_csv(os, pbar, alpha, pibar);
    }
    const auto lta = qwalk::long_time_averages(dec.spectrum);
    std::cout << "P_RW = " << qwalk::format_double(lta.p_rw) << "\n"
              << "P_QW = " << qwalk::format_double(lta.p_qw) << "\n";
    ctx.manifest["params"] = {{"topology", topo.topology}, {"n", topo.n},
                              {"b", topo.b}, {"seed", topo.seed},
                              {"t_start", grid_opts.t_start}, {"t_end", grid_opts.t_end},
                              {"samples", grid_opts.samples}, {"linear", grid_opts.linear}};
    ctx.finish();
    return kOk;
}

int run_ensemble_cmd(int n, int b, const std::string& sweep, int r, uint64_t seed,
                     const GridOpts& grid_opts, int threads, const std::string& out,
                     const std::string& stair_bs) {
    RunContext ctx(out, "ensemble");
    const auto grid = grid_opts.grid();
    std::vector<int> b_list;
    if (!sweep.empty()) {
        const auto colon = sweep.find(':');
        if (colon == std::string::npos)
            throw qwalk::invalid_argument_error("bad --sweep (want lo:hi): " + sweep);
        const int lo = std::stoi(sweep.substr(0, colon));
        const int hi = std::stoi(sweep.substr(colon + 1));
        if (lo < 0 || hi > qwalk::b_max(n) || lo > hi)
            throw qwalk::invalid_argument_error("sweep range out of 0..b_max");
        for (int x = lo; x <= hi; ++x) b_list.push_back(x);
    } else {
        if (b < 0 || b > qwalk::b_max(n))
            throw qwalk::invalid_argument_error("b out of 0..b_max");
        b_list.push_back(b);
    }

    const auto sweep_result = qwalk::sweep_b(n, b_list, r, seed, grid, threads);
    {
        auto os = ctx.open("sweep.csv");
        qwalk::write_sweep_csv(os, sweep_result);
    }
    for (const auto& [bv, summary] : sweep_result) {
        auto os = ctx.open("series_b" + std::to_string(bv) + ".csv");
        qwalk::write_observables_csv(os, summary.mean_pbar, summary.mean_alpha_sq,
                                     summary.mean_pibar);
        std::cout << "b=" << bv << "  <P_QW>_R = " << qwalk::format_double(summary.mean_p_qw)
                  << "  stderr = " << qwalk::format_double(summary.stderr_p_qw) << "\n";
    }

    // Staircase d_B(E) on a fixed E grid, for the requested b values.
    std::vector<int> stair_list;
    if (!stair_bs.empty()) {
        std::istringstream ss(stair_bs);
        std::string item;
        while (std::getline(ss, item, ',')) stair_list.push_back(std::stoi(item));
    }
    if (!stair_list.empty()) {
        std::vector<double> e_grid;
        for (double e = 0.0; e <= n + 1.0 + 1e-12; e += 0.05) e_grid.push_back(e);
        for (int bv : stair_list) {
            qwalk::EnsembleConfig cfg{n, bv, r,
                                      qwalk::derive_seed(seed, 0xb000000000000000ull +
                                                                   static_cast<uint64_t>(bv)),
                                      grid, threads};
            const auto st = qwalk::staircase(cfg, e_grid);
            auto os = ctx.open("staircase_b" + std::to_string(bv) + ".csv");
            qwalk::write_staircase_csv(os, st);
        }
    }
    ctx.manifest["params"] = {{"n", n}, {"b_list", b_list}, {"r", r}, {"seed", seed},
                              {"threads_requested", threads},
                              {"t_start", grid_opts.t_start}, {"t_end", grid_opts.t_end},
                              {"samples", grid_opts.samples}, {"linear", grid_opts.linear},
                              {"staircase_b", stair_list}};
    ctx.finish();
    return kOk;
}

int run_census_cmd(int n, const std::vector<int>& b_filter, int threads, bool force,
                   const std::string& out) {
    RunContext ctx(out, "census");
    const auto report = qwalk::census(n, b_filter, threads, force);
    {
        auto os = ctx.open("census.csv");
        qwalk::write_census_csv(os, report);
    }
    json extremes = json::array();
    for (const auto& e : report.entries) {
        auto one = [](const qwalk::CensusExtreme& ex) {
            json j;
            j["fingerprint"] = ex.fingerprint.to_string();
            j["count"] = ex.count;
            j["bonds"] = edge_json(ex.representative);
            j["eigenvalues"] = ex.eigenvalues;
            return j;
        };
        extremes.push_back({{"b", e.b},
                            {"n_b", e.n_b},
                            {"total_subsets", e.total_subsets},
                            {"most_probable", one(e.most_probable)},
                            {"least_probable", one(e.least_probable)}});
        std::cout << "b=" << e.b << "  N_B=" << e.n_b
                  << "  subsets=" << e.total_subsets << "\n";
    }
    {
        auto os = ctx.open("extremes.json");
        os << extremes.dump(2) << "\n";
    }
    ctx.manifest["params"] = {{"n", n}, {"b_filter", b_filter}, {"force", force},
                              {"threads_requested", threads}};
    ctx.finish();
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Continuous-time quantum and classical walks on star-to-complete graphs"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Optional key=value config file; flags win on conflict");

    std::string out = "qwalk_out";
    int threads = threads_from_env();
    app.add_option("--out", out, "Output directory")->capture_default_str();
    app.add_option("--threads", threads, "Worker thread count (0 = machine parallelism)");

    TopologyOpts topo;
    GridOpts grid;
    bool export_graph = false;

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues, degeneracies, DOS");
    add_topology_opts(spectrum, topo);
    spectrum->add_flag("--export-graph", export_graph, "Also write the edge list");

    auto* walk = app.add_subcommand("walk", "Return-probability observables over a time grid");
    add_topology_opts(walk, topo);
    add_grid_opts(walk, grid);

    int en_n = 10, en_b = 0, en_r = 10000;
    uint64_t en_seed = 0;
    std::string en_sweep, en_stairs;
    auto* ens = app.add_subcommand("ensemble", "Seeded Monte Carlo over random bond placements");
    ens->add_option("--n", en_n, "Node count");
    ens->add_option("--b", en_b, "Additional bonds");
    ens->add_option("--sweep", en_sweep, "Sweep range lo:hi instead of a single b");
    ens->add_option("--r", en_r, "Realization count");
    ens->add_option("--seed", en_seed, "Master RNG seed");
    ens->add_option("--staircase", en_stairs, "Comma-separated b values for d_B(E) output");
    add_grid_opts(ens, grid);

    int ce_n = 7;
    std::vector<int> ce_b;
    bool ce_force = false;
    auto* cen = app.add_subcommand("census", "Exhaustive distinct-eigenvalue-set enumeration");
    cen->add_option("--n", ce_n, "Node count");
    cen->add_option("--b", ce_b, "Restrict to these b values");
    cen->add_flag("--force", ce_force, "Override the capacity guard");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*spectrum) return run_spectrum(topo, out, export_graph);
        if (*walk) return run_walk(topo, grid, out);
        if (*ens) return run_ensemble_cmd(en_n, en_b, en_sweep, en_r, en_seed, grid,
                                          threads, out, en_stairs);
        if (*cen) return run_census_cmd(ce_n, ce_b, threads, ce_force, out);
    } catch (const qwalk::capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapacity;
    } catch (const qwalk::solver_convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumeric;
    } catch (const qwalk::fingerprint_overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
