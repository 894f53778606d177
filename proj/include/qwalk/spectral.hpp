#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qwalk/graph.hpp"

namespace qwalk {

// Tolerances for the integer-Laplacian spectra handled here. Matrices have
// norm <= n and are well-conditioned at these sizes.
namespace tol {
inline double resid(int n, double max_abs) { return 1e-10 * n * max_abs; }
inline double orth(int n) { return 1e-10 * n; }
inline constexpr double eig = 1e-9;
inline double trace(int n) { return 1e-9 * n; }
inline constexpr double group = 1e-8;
}  // namespace tol

struct DegeneracyGroup {
    double value;      // mean of the merged eigenvalues
    int multiplicity;  // D(E)
};

struct Spectrum {
    std::vector<double> values;           // ascending
    std::vector<DegeneracyGroup> groups;  // distinct values with multiplicities

    int size() const { return static_cast<int>(values.size()); }
};

struct DensityOfStates {
    // (E, rho(E)) over distinct eigenvalues; rho(E) = D(E)/n, sums to 1.
    std::vector<std::pair<double, double>> points;
};

struct SpectralDecomposition {
    Spectrum spectrum;
    // Column-major orthonormal eigenvectors; column k pairs with values[k].
    std::vector<double> vectors;

    int dim() const { return spectrum.size(); }
    double vec(int row, int col) const {
        return vectors[static_cast<size_t>(col) * dim() + row];
    }
};

// Exact integer coefficients of det(xI - A), leading coefficient first.
// Equal fingerprints <=> equal eigenvalue multisets.
struct SpectralFingerprint {
    std::vector<__int128> coeffs;  // size n+1, coeffs[0] = 1

    bool operator==(const SpectralFingerprint&) const = default;
    bool operator<(const SpectralFingerprint& o) const { return coeffs < o.coeffs; }
    size_t hash() const;
    std::string to_string() const;  // comma-separated decimal coefficients
};

// Cyclic Jacobi diagonalization; deterministic sweep order, eigenvalues
// ascending. Throws solver_convergence_error past the sweep cap.
SpectralDecomposition eigendecompose(const ConnectivityMatrix& a);

// Merge consecutive ascending values whose gap is <= tol_group.
Spectrum group_degeneracies(std::vector<double> values, double tol_group = tol::group);

DensityOfStates density_of_states(const Spectrum& s);

// Characteristic polynomial of the integer matrix in exact arithmetic
// (Faddeev-LeVerrier, every division exact). Throws
// fingerprint_overflow_error if a product leaves the 128-bit range.
SpectralFingerprint fingerprint(const ConnectivityMatrix& a);

}  // namespace qwalk

template <>
struct std::hash<qwalk::SpectralFingerprint> {
    size_t operator()(const qwalk::SpectralFingerprint& f) const { return f.hash(); }
};
