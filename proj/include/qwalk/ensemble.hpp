#pragma once

#include <cstdint>
#include <vector>

#include "qwalk/walk.hpp"

namespace qwalk {

struct EnsembleConfig {
    int n = 10;
    int b = 0;            // additional bonds per realization
    int r = 10000;        // realization count
    uint64_t seed = 0;    // master seed
    TimeGrid grid{};
    int threads = 0;      // 0 = machine parallelism; never affects results
};

struct EnsembleSummary {
    TimeSeries mean_pbar;
    TimeSeries mean_alpha_sq;
    TimeSeries mean_pibar;
    double mean_p_qw = 0.0;
    double stderr_p_qw = 0.0;
    int realizations_used = 0;
};

struct EigenvalueStaircase {
    std::vector<double> e;  // ascending sample grid
    std::vector<double> d;  // average eigenvalue count <= e (theta(0) = 1)
};

// Deterministic per-realization sub-seed: parallel schedules never touch it.
uint64_t derive_seed(uint64_t master, uint64_t index);

// Star skeleton plus a uniformly random b-subset of the leaf pairs.
Graph sample_realization(int n, int b, uint64_t seed);

// Ensemble means of pbar, |alphabar|^2, pibar over the grid plus the mean and
// standard error of the per-realization long-time average P_QW. Reduction is
// fixed-order, so results are byte-identical for any thread count.
EnsembleSummary run_ensemble(const EnsembleConfig& cfg);

// Average number of eigenvalues below E over the same realizations the
// ensemble run would draw.
EigenvalueStaircase staircase(const EnsembleConfig& cfg, const std::vector<double>& e_grid);

// One ensemble per b, each under an independent sub-seed of `seed`.
std::vector<std::pair<int, EnsembleSummary>> sweep_b(int n, const std::vector<int>& b_list,
                                                     int r, uint64_t seed,
                                                     const TimeGrid& grid, int threads = 0);

}  // namespace qwalk
