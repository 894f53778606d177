#pragma once

#include <string>
#include <vector>

#include "qwalk/spectral.hpp"

namespace qwalk {

// Time is measured in units of the (uniform) transition rate, set to 1.
struct TimeGrid {
    enum class Spacing { Linear, Log };

    double t_start = 1e-2;
    double t_end = 1e2;
    int samples = 400;
    Spacing spacing = Spacing::Log;

    std::vector<double> points() const;

    static TimeGrid log_grid(double t0, double t1, int samples) {
        return {t0, t1, samples, Spacing::Log};
    }
    static TimeGrid linear_grid(double t0, double t1, int samples) {
        return {t0, t1, samples, Spacing::Linear};
    }
};

struct TimeSeries {
    std::vector<double> t;
    std::vector<double> values;
    std::string label;
};

struct LongTimeAverages {
    double p_rw;  // 1/n
    double p_qw;  // sum over distinct eigenvalues of rho(E)^2
};

// Classical transition probability p_{k,j}(t) = <k|exp(-A t)|j>.
TimeSeries classical_transition(const SpectralDecomposition& dec, int k, int j,
                                const TimeGrid& grid);

// Quantum transition probability pi_{k,j}(t) = |<k|exp(-i A t)|j>|^2.
TimeSeries quantum_transition(const SpectralDecomposition& dec, int k, int j,
                              const TimeGrid& grid);

// Average classical return probability, eigenvalue-only form:
// pbar(t) = sum_E rho(E) exp(-E t).
TimeSeries avg_return_classical(const Spectrum& s, const TimeGrid& grid);

// Lower bound on the average quantum return probability:
// |alphabar(t)|^2 = |sum_E rho(E) exp(-i E t)|^2.
TimeSeries avg_return_amplitude_sq(const Spectrum& s, const TimeGrid& grid);

// Exact average quantum return probability pibar(t) = (1/n) sum_j pi_{j,j}(t);
// needs the eigenvectors.
TimeSeries avg_return_quantum_exact(const SpectralDecomposition& dec, const TimeGrid& grid);

LongTimeAverages long_time_averages(const Spectrum& s);

// Trapezoidal mean of the series over its grid.
double numeric_time_average(const TimeSeries& series);

// One-highly-degenerate-eigenvalue approximation of |alphabar(t)|^2:
// rho(Em) { rho(Em) + sum_{En != Em} rho(En) cos[(Em - En) t] } with Em the
// unique most-degenerate eigenvalue. Error is O(1/n^2). Throws
// ambiguity_error when two groups share the maximal multiplicity.
TimeSeries degenerate_approximation(const Spectrum& s, const TimeGrid& grid);

}  // namespace qwalk
