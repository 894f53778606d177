#include "qwalk/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace qwalk {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Small counter-free PRNG; stdlib distributions are implementation-defined,
// so bounded draws are done by rejection here.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() { return state = splitmix64(state); }
    // Uniform in [0, bound), bound > 0.
    uint64_t bounded(uint64_t bound) {
        const uint64_t threshold = -bound % bound;
        for (;;) {
            const uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }
};

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(block_index) over [0, blocks) on a pool; callers reduce per-block
// results in index order to keep outputs schedule-independent.
template <typename Fn>
void parallel_blocks(int blocks, int threads, Fn fn) {
    threads = std::min(resolve_threads(threads), blocks);
    if (threads <= 1) {
        for (int i = 0; i < blocks; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= blocks) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

constexpr int kBlock = 64;  // realizations per reduction block

}  // namespace

uint64_t derive_seed(uint64_t master, uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 0x243f6a8885a308d3ull));
}

Graph sample_realization(int n, int b, uint64_t seed) {
    const long long total = b_max(n);
    if (b < 0 || b > total)
        throw invalid_argument_error("sample_realization: b out of range");
    auto pairs = leaf_pairs(n);
    Rng rng(seed);
    // Partial Fisher-Yates: the first b slots end up a uniform b-subset.
    for (int i = 0; i < b; ++i) {
        const auto j = i + static_cast<long long>(rng.bounded(static_cast<uint64_t>(total - i)));
        std::swap(pairs[i], pairs[j]);
    }
    pairs.resize(b);
    return star_plus_bonds(n, pairs);
}

EnsembleSummary run_ensemble(const EnsembleConfig& cfg) {
    if (cfg.r < 1) throw invalid_argument_error("run_ensemble: need r >= 1");
    const auto t = cfg.grid.points();
    const size_t nt = t.size();
    const int blocks = (cfg.r + kBlock - 1) / kBlock;

    struct BlockSums {
        std::vector<double> pbar, alpha_sq, pibar;
        double p_qw = 0.0, p_qw_sq = 0.0;
    };
    std::vector<BlockSums> partial(blocks);

    parallel_blocks(blocks, cfg.threads, [&](int bi) {
        BlockSums sums;
        sums.pbar.assign(nt, 0.0);
        sums.alpha_sq.assign(nt, 0.0);
        sums.pibar.assign(nt, 0.0);
        const int lo = bi * kBlock;
        const int hi = std::min(cfg.r, lo + kBlock);
        for (int r = lo; r < hi; ++r) {
            const Graph g = sample_realization(cfg.n, cfg.b, derive_seed(cfg.seed, r));
            SpectralDecomposition dec;
            try {
                dec = eigendecompose(connectivity_matrix(g));
            } catch (const solver_convergence_error& e) {
                throw solver_convergence_error(
                    "realization " + std::to_string(r) + ": " + e.what(), e.worst_residual);
            }
            const auto pbar = avg_return_classical(dec.spectrum, cfg.grid);
            const auto alpha = avg_return_amplitude_sq(dec.spectrum, cfg.grid);
            const auto pibar = avg_return_quantum_exact(dec, cfg.grid);
            for (size_t i = 0; i < nt; ++i) {
                sums.pbar[i] += pbar.values[i];
                sums.alpha_sq[i] += alpha.values[i];
                sums.pibar[i] += pibar.values[i];
            }
            const double p_qw = long_time_averages(dec.spectrum).p_qw;
            sums.p_qw += p_qw;
            sums.p_qw_sq += p_qw * p_qw;
        }
        partial[bi] = std::move(sums);
    });

    EnsembleSummary out;
    out.mean_pbar = {t, std::vector<double>(nt, 0.0), "mean_pbar"};
    out.mean_alpha_sq = {t, std::vector<double>(nt, 0.0), "mean_alpha_sq"};
    out.mean_pibar = {t, std::vector<double>(nt, 0.0), "mean_pibar"};
    double sum_pqw = 0.0, sum_pqw_sq = 0.0;
    for (const auto& p : partial) {
        for (size_t i = 0; i < nt; ++i) {
            out.mean_pbar.values[i] += p.pbar[i];
            out.mean_alpha_sq.values[i] += p.alpha_sq[i];
            out.mean_pibar.values[i] += p.pibar[i];
        }
        sum_pqw += p.p_qw;
        sum_pqw_sq += p.p_qw_sq;
    }
    const double r = cfg.r;
    for (size_t i = 0; i < nt; ++i) {
        out.mean_pbar.values[i] /= r;
        out.mean_alpha_sq.values[i] /= r;
        out.mean_pibar.values[i] /= r;
    }
    out.mean_p_qw = sum_pqw / r;
    if (cfg.r > 1) {
        const double var = std::max(0.0, (sum_pqw_sq - sum_pqw * sum_pqw / r) / (r - 1.0));
        out.stderr_p_qw = std::sqrt(var / r);
    }
    out.realizations_used = cfg.r;
    return out;
}

EigenvalueStaircase staircase(const EnsembleConfig& cfg, const std::vector<double>& e_grid) {
    if (!std::is_sorted(e_grid.begin(), e_grid.end()))
        throw invalid_argument_error("staircase: e_grid must be ascending");
    const int blocks = (cfg.r + kBlock - 1) / kBlock;
    std::vector<std::vector<double>> partial(blocks);

    parallel_blocks(blocks, cfg.threads, [&](int bi) {
        std::vector<double> counts(e_grid.size(), 0.0);
        const int lo = bi * kBlock;
        const int hi = std::min(cfg.r, lo + kBlock);
        for (int r = lo; r < hi; ++r) {
            const Graph g = sample_realization(cfg.n, cfg.b, derive_seed(cfg.seed, r));
            const auto values = eigendecompose(connectivity_matrix(g)).spectrum.values;
            for (size_t i = 0; i < e_grid.size(); ++i) {
                // theta(0) = 1: eigenvalues exactly at E count, up to tolerance.
                const auto it = std::upper_bound(values.begin(), values.end(),
                                                 e_grid[i] + tol::eig);
                counts[i] += static_cast<double>(it - values.begin());
            }
        }
        partial[bi] = std::move(counts);
    });

    EigenvalueStaircase out;
    out.e = e_grid;
    out.d.assign(e_grid.size(), 0.0);
    for (const auto& p : partial)
        for (size_t i = 0; i < p.size(); ++i) out.d[i] += p[i];
    for (double& v : out.d) v /= cfg.r;
    return out;
}

std::vector<std::pair<int, EnsembleSummary>> sweep_b(int n, const std::vector<int>& b_list,
                                                     int r, uint64_t seed,
                                                     const TimeGrid& grid, int threads) {
    std::vector<std::pair<int, EnsembleSummary>> out;
    out.reserve(b_list.size());
    for (int b : b_list) {
        EnsembleConfig cfg{n, b, r,
                           derive_seed(seed, 0xb000000000000000ull + static_cast<uint64_t>(b)),
                           grid, threads};
        out.emplace_back(b, run_ensemble(cfg));
    }
    return out;
}

}  // namespace qwalk
