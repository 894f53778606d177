#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "expm_oracle.hpp"
#include "qwalk/walk.hpp"

using namespace qwalk;

namespace {

SpectralDecomposition decompose(const Graph& g) {
    return eigendecompose(connectivity_matrix(g));
}

Graph random_star_plus_bonds(int n, std::mt19937& rng) {
    auto pairs = leaf_pairs(n);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(rng() % (pairs.size() + 1));
    return star_plus_bonds(n, pairs);
}

}  // namespace

TEST_CASE("time grids") {
    const auto lin = TimeGrid::linear_grid(0.0, 10.0, 11).points();
    CHECK(lin.front() == 0.0);
    CHECK(lin.back() == 10.0);
    CHECK(lin[3] == doctest::Approx(3.0));

    const auto log = TimeGrid{}.points();
    CHECK(log.size() == 400);
    CHECK(log.front() == doctest::Approx(1e-2));
    CHECK(log.back() == doctest::Approx(1e2));
    CHECK(std::is_sorted(log.begin(), log.end()));

    CHECK_THROWS_AS(TimeGrid::linear_grid(1.0, 0.5, 10).points(), invalid_argument_error);
    CHECK_THROWS_AS(TimeGrid::log_grid(0.0, 1.0, 10).points(), invalid_argument_error);
}

TEST_CASE("transitions at t=0 are Kronecker deltas") {
    const auto dec = decompose(star_plus_bonds(6, {{2, 5}, {3, 4}}));
    const auto grid = TimeGrid::linear_grid(0.0, 1.0, 2);
    for (int k = 1; k <= 6; ++k)
        for (int j = 1; j <= 6; ++j) {
            const double expected = k == j ? 1.0 : 0.0;
            CHECK(std::abs(classical_transition(dec, k, j, grid).values[0] - expected) < 1e-10);
            CHECK(std::abs(quantum_transition(dec, k, j, grid).values[0] - expected) < 1e-10);
        }
    CHECK_THROWS_AS(classical_transition(dec, 0, 1, grid), invalid_argument_error);
    CHECK_THROWS_AS(quantum_transition(dec, 1, 7, grid), invalid_argument_error);
}

TEST_CASE("K2 quantum return is cos^2(t)") {
    const auto dec = decompose(build_complete(2));
    const auto grid = TimeGrid::linear_grid(0.0, 6.0, 61);
    const auto pi = quantum_transition(dec, 1, 1, grid);
    for (size_t i = 0; i < pi.t.size(); ++i) {
        const double c = std::cos(pi.t[i]);
        CHECK(std::abs(pi.values[i] - c * c) < 1e-12);
    }
}

TEST_CASE("classical transition matches the matrix-exponential oracle") {
    std::mt19937 rng(11);
    const auto grid = TimeGrid::linear_grid(0.0, 5.0, 11);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 10);  // n <= 12
        const Graph g = random_star_plus_bonds(n, rng);
        const ConnectivityMatrix a(g);
        const auto dec = eigendecompose(a);
        for (double t : grid.points()) {
            oracle::Mat minus_at(static_cast<size_t>(n) * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    minus_at[static_cast<size_t>(i) * n + j] = -a.at(i, j) * t;
            const auto et = oracle::expm(minus_at, n);
            for (int k = 1; k <= n; ++k)
                for (int j = 1; j <= n; ++j) {
                    const auto series =
                        classical_transition(dec, k, j, TimeGrid::linear_grid(t == 0.0 ? 0.0 : t, t + 1.0, 2));
                    CHECK(std::abs(series.values[0] -
                                   et[static_cast<size_t>(k - 1) * n + (j - 1)]) < 1e-8);
                }
        }
    }
}

TEST_CASE("stochasticity, unitarity, symmetry") {
    std::mt19937 rng(23);
    const auto grid = TimeGrid::log_grid(1e-2, 1e2, 40);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 7);
        const auto dec = decompose(random_star_plus_bonds(n, rng));
        const int j = 1 + static_cast<int>(rng() % n);
        std::vector<double> p_sum(grid.samples, 0.0), pi_sum(grid.samples, 0.0);
        for (int k = 1; k <= n; ++k) {
            const auto p = classical_transition(dec, k, j, grid);
            const auto pi = quantum_transition(dec, k, j, grid);
            const auto p_rev = classical_transition(dec, j, k, grid);
            const auto pi_rev = quantum_transition(dec, j, k, grid);
            for (int i = 0; i < grid.samples; ++i) {
                CHECK(p.values[i] >= -1e-12);
                CHECK(std::abs(p.values[i] - p_rev.values[i]) < 1e-12);
                CHECK(std::abs(pi.values[i] - pi_rev.values[i]) < 1e-12);
                p_sum[i] += p.values[i];
                pi_sum[i] += pi.values[i];
            }
        }
        for (int i = 0; i < grid.samples; ++i) {
            CHECK(std::abs(p_sum[i] - 1.0) < 1e-10);
            CHECK(std::abs(pi_sum[i] - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("average classical return probability") {
    const auto sg = decompose(build_star(10)).spectrum;
    const auto cg = decompose(build_complete(10)).spectrum;
    const auto grid = TimeGrid::log_grid(1e-2, 1e2, 100);

    const auto pbar_sg = avg_return_classical(sg, TimeGrid::linear_grid(0.0, 50.0, 201));
    CHECK(pbar_sg.values[0] == doctest::Approx(1.0));
    for (size_t i = 1; i < pbar_sg.values.size(); ++i) {
        CHECK(pbar_sg.values[i] <= pbar_sg.values[i - 1] + 1e-14);
        // closed form from the eigenvalue multiset {0, 1^(n-2), n}
        const double t = pbar_sg.t[i];
        const double closed = (1.0 + 8.0 * std::exp(-t) + std::exp(-10.0 * t)) / 10.0;
        CHECK(std::abs(pbar_sg.values[i] - closed) < 1e-12);
    }
    CHECK(pbar_sg.values.back() == doctest::Approx(0.1));

    const auto pbar_cg = avg_return_classical(cg, TimeGrid::linear_grid(0.1, 1.0, 2));
    CHECK(pbar_cg.values[0] == doctest::Approx((1.0 + 9.0 * std::exp(-1.0)) / 10.0).epsilon(1e-10));
    CHECK(pbar_cg.values[0] == doctest::Approx(0.43109).epsilon(1e-4));

    for (double v : avg_return_classical(sg, grid).values) CHECK(v >= 0.1 - 1e-12);
}

TEST_CASE("average return amplitude squared") {
    const auto cg = decompose(build_complete(10)).spectrum;
    const auto grid = TimeGrid::linear_grid(0.0, 5.0, 2001);
    const auto alpha = avg_return_amplitude_sq(cg, grid);
    CHECK(alpha.values[0] == doctest::Approx(1.0));
    double lo = 1.0, hi = 0.0;
    for (size_t i = 0; i < alpha.t.size(); ++i) {
        const double t = alpha.t[i];
        const double exact = std::norm(std::complex<double>(0.1) +
                                       0.9 * std::polar(1.0, -10.0 * t));
        CHECK(std::abs(alpha.values[i] - exact) < 1e-12);
        lo = std::min(lo, alpha.values[i]);
        hi = std::max(hi, alpha.values[i]);
    }
    CHECK(lo == doctest::Approx(0.64).epsilon(1e-4));  // |1-9|^2/100
    CHECK(hi == doctest::Approx(1.0).epsilon(1e-4));   // |1+9|^2/100

    // SG oscillates about P_QW^SG = 0.66, never decaying to 1/n.
    const auto sg = decompose(build_star(10)).spectrum;
    const auto alpha_sg = avg_return_amplitude_sq(sg, TimeGrid::linear_grid(0.0, 200.0, 20001));
    CHECK(numeric_time_average(alpha_sg) == doctest::Approx(0.66).epsilon(0.01));
}

TEST_CASE("exact quantum return average and the lower bound") {
    std::mt19937 rng(5);
    const auto grid = TimeGrid::log_grid(1e-2, 1e2, 100);
    for (int trial = 0; trial < 10; ++trial) {
        const auto dec = decompose(random_star_plus_bonds(10, rng));
        const auto pibar = avg_return_quantum_exact(dec, grid);
        const auto alpha = avg_return_amplitude_sq(dec.spectrum, grid);
        for (int i = 0; i < grid.samples; ++i)
            CHECK(pibar.values[i] >= alpha.values[i] - 1e-10);
    }

    const auto dec0 = decompose(build_star(10));
    CHECK(avg_return_quantum_exact(dec0, TimeGrid::linear_grid(0.0, 1.0, 2)).values[0] ==
          doctest::Approx(1.0));

    // Complete graph: all diagonal amplitudes are equal, so the bound is tight.
    const auto cg = decompose(build_complete(10));
    const auto pibar = avg_return_quantum_exact(cg, grid);
    const auto alpha = avg_return_amplitude_sq(cg.spectrum, grid);
    for (int i = 0; i < grid.samples; ++i)
        CHECK(std::abs(pibar.values[i] - alpha.values[i]) < 1e-10);
}

TEST_CASE("center-node spreading on SG equals CG") {
    const auto sg = decompose(build_star(10));
    const auto cg = decompose(build_complete(10));
    const auto grid = TimeGrid::log_grid(1e-2, 1e2, 100);
    for (int k = 1; k <= 10; ++k) {
        const auto on_sg = quantum_transition(sg, k, 1, grid);
        const auto on_cg = quantum_transition(cg, k, 1, grid);
        for (int i = 0; i < grid.samples; ++i)
            CHECK(std::abs(on_sg.values[i] - on_cg.values[i]) < 1e-10);
    }
}

TEST_CASE("long-time averages") {
    CHECK(long_time_averages(decompose(build_star(10)).spectrum).p_qw ==
          doctest::Approx(0.66).epsilon(1e-12));
    CHECK(long_time_averages(decompose(build_complete(10)).spectrum).p_qw ==
          doctest::Approx(0.82).epsilon(1e-12));
    CHECK(long_time_averages(decompose(build_star(10)).spectrum).p_rw == 0.1);

    // n distinct eigenvalues -> P_QW = 1/n.
    Spectrum distinct = group_degeneracies({0.0, 1.0, 2.5, 3.5, 7.0});
    CHECK(long_time_averages(distinct).p_qw == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("numeric time average") {
    TimeSeries constant{{0.0, 1.0, 2.0, 5.0}, {0.3, 0.3, 0.3, 0.3}, "c"};
    CHECK(numeric_time_average(constant) == doctest::Approx(0.3));

    const auto cg = decompose(build_complete(10)).spectrum;
    const auto grid = TimeGrid::linear_grid(0.0, 1000.0, 100000);
    CHECK(numeric_time_average(avg_return_amplitude_sq(cg, grid)) ==
          doctest::Approx(0.82).epsilon(0.012));

    const auto sg = decompose(build_star(10)).spectrum;
    CHECK(numeric_time_average(avg_return_classical(sg, grid)) ==
          doctest::Approx(0.1).epsilon(0.1));  // -> 1/n within 0.01 absolute
}

TEST_CASE("degenerate-eigenvalue approximation") {
    const auto grid = TimeGrid::linear_grid(0.0, 20.0, 801);

    const auto cg = decompose(build_complete(10)).spectrum;
    const auto approx_cg = degenerate_approximation(cg, grid);
    for (size_t i = 0; i < approx_cg.t.size(); ++i) {
        const double expected = 0.9 * (0.9 + 0.1 * std::cos(10.0 * approx_cg.t[i]));
        CHECK(std::abs(approx_cg.values[i] - expected) < 1e-12);
    }
    CHECK(approx_cg.values[0] == doctest::Approx(0.9));  // vs exact 1.0, O(1/n)

    const auto sg = decompose(build_star(10)).spectrum;
    const auto approx_sg = degenerate_approximation(sg, grid);
    for (size_t i = 0; i < approx_sg.t.size(); ++i) {
        const double t = approx_sg.t[i];
        const double expected = 0.8 * (0.8 + 0.1 * std::cos(t) + 0.1 * std::cos(9.0 * t));
        CHECK(std::abs(approx_sg.values[i] - expected) < 1e-12);
    }

    // Approximation error shrinks with n.
    double prev_err = 1e9;
    for (int n : {10, 20, 40}) {
        const auto s = decompose(build_star(n)).spectrum;
        const auto exact = avg_return_amplitude_sq(s, grid);
        const auto approx = degenerate_approximation(s, grid);
        double err = 0.0;
        for (size_t i = 0; i < exact.values.size(); ++i)
            err = std::max(err, std::abs(exact.values[i] - approx.values[i]));
        CHECK(err < prev_err);
        prev_err = err;
    }

    // K2 has two groups of multiplicity 1: ambiguous maximum.
    CHECK_THROWS_AS(degenerate_approximation(decompose(build_complete(2)).spectrum, grid),
                    ambiguity_error);
}
