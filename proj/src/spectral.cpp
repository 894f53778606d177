#include "qwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <string>

namespace qwalk {

namespace {

// Checked 128-bit ops; the census retries nothing wider, so overflow is fatal.
__int128 mul128(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw fingerprint_overflow_error("fingerprint: 128-bit coefficient overflow");
    return r;
}

__int128 add128(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw fingerprint_overflow_error("fingerprint: 128-bit coefficient overflow");
    return r;
}

}  // namespace

size_t SpectralFingerprint::hash() const {
    // FNV-1a over the raw coefficient bytes.
    size_t h = 14695981039346656037ull;
    for (const __int128& c : coeffs) {
        unsigned char bytes[sizeof(__int128)];
        std::memcpy(bytes, &c, sizeof(bytes));
        for (unsigned char b : bytes) {
            h ^= b;
            h *= 1099511628211ull;
        }
    }
    return h;
}

std::string SpectralFingerprint::to_string() const {
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ',';
        __int128 c = coeffs[i];
        if (c == 0) {
            out += '0';
            continue;
        }
        bool neg = c < 0;
        std::string digits;
        // c may be the most negative value; negate via unsigned.
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(c)
                                  : static_cast<unsigned __int128>(c);
        while (u) {
            digits += static_cast<char>('0' + static_cast<int>(u % 10));
            u /= 10;
        }
        if (neg) out += '-';
        out.append(digits.rbegin(), digits.rend());
    }
    return out;
}

SpectralDecomposition eigendecompose(const ConnectivityMatrix& m) {
    const int n = m.dim();
    std::vector<double> a(static_cast<size_t>(n) * n);
    double max_abs = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a[static_cast<size_t>(i) * n + j] = m.at(i, j);
            max_abs = std::max(max_abs, std::abs(static_cast<double>(m.at(i, j))));
        }

    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);  // row-major rotation product
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;

    auto A = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    auto V = [&](int i, int j) -> double& { return v[static_cast<size_t>(i) * n + j]; };

    const int max_sweeps = 64;
    bool converged = (n == 1);
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) off += std::abs(A(p, q));
        if (off == 0.0) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                const double small = 100.0 * std::abs(apq);
                // After a few sweeps, zero out elements that can no longer
                // perturb the diagonal.
                if (sweep > 3 && std::abs(A(p, p)) + small == std::abs(A(p, p)) &&
                    std::abs(A(q, q)) + small == std::abs(A(q, q))) {
                    A(p, q) = A(q, p) = 0.0;
                    continue;
                }
                if (apq == 0.0) continue;
                const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double h = t * apq;
                A(p, p) -= h;
                A(q, q) += h;
                A(p, q) = A(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i != p && i != q) {
                        const double aip = A(i, p), aiq = A(i, q);
                        A(i, p) = aip - s * (aiq + tau * aip);
                        A(i, q) = aiq + s * (aip - tau * aiq);
                        A(p, i) = A(i, p);
                        A(q, i) = A(i, q);
                    }
                    const double vip = V(i, p), viq = V(i, q);
                    V(i, p) = vip - s * (viq + tau * vip);
                    V(i, q) = viq + s * (vip - tau * viq);
                }
            }
        }
    }

    if (!converged) {
        double worst = 0.0;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) worst = std::max(worst, std::abs(A(p, q)));
        if (worst > tol::resid(n, max_abs))
            throw solver_convergence_error("eigendecompose: Jacobi did not converge", worst);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return A(x, x) < A(y, y); });

    SpectralDecomposition dec;
    dec.spectrum.values.resize(n);
    dec.vectors.resize(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        const int src = order[k];
        dec.spectrum.values[k] = A(src, src);
        // Fix the sign so the decomposition is reproducible: largest-magnitude
        // component positive, ties by lowest row index.
        int pivot = 0;
        for (int i = 1; i < n; ++i)
            if (std::abs(V(i, src)) > std::abs(V(pivot, src))) pivot = i;
        const double sign = V(pivot, src) < 0.0 ? -1.0 : 1.0;
        for (int i = 0; i < n; ++i)
            dec.vectors[static_cast<size_t>(k) * n + i] = sign * V(i, src);
    }
    dec.spectrum.groups = group_degeneracies(dec.spectrum.values).groups;
    return dec;
}

Spectrum group_degeneracies(std::vector<double> values, double tol_group) {
    Spectrum s;
    s.values = std::move(values);
    size_t i = 0;
    while (i < s.values.size()) {
        size_t j = i + 1;
        double sum = s.values[i];
        while (j < s.values.size() && s.values[j] - s.values[j - 1] <= tol_group) {
            sum += s.values[j];
            ++j;
        }
        s.groups.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
        i = j;
    }
    return s;
}

DensityOfStates density_of_states(const Spectrum& s) {
    DensityOfStates dos;
    const double n = s.size();
    dos.points.reserve(s.groups.size());
    for (const auto& g : s.groups) dos.points.emplace_back(g.value, g.multiplicity / n);
    return dos;
}

SpectralFingerprint fingerprint(const ConnectivityMatrix& m) {
    const int n = m.dim();
    // Faddeev-LeVerrier: M_1 = I; c_{n-k} = -tr(A M_k)/k (exact integer);
    // M_{k+1} = A M_k + c_{n-k} I.
    std::vector<__int128> M(static_cast<size_t>(n) * n, 0), AM(M.size());
    for (int i = 0; i < n; ++i) M[static_cast<size_t>(i) * n + i] = 1;

    SpectralFingerprint fp;
    fp.coeffs.assign(n + 1, 0);
    fp.coeffs[0] = 1;
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                __int128 acc = 0;
                for (int l = 0; l < n; ++l) {
                    const int ail = m.at(i, l);
                    if (ail) acc = add128(acc, mul128(ail, M[static_cast<size_t>(l) * n + j]));
                }
                AM[static_cast<size_t>(i) * n + j] = acc;
            }
        __int128 tr = 0;
        for (int i = 0; i < n; ++i) tr = add128(tr, AM[static_cast<size_t>(i) * n + i]);
        const __int128 c = -tr / k;
        fp.coeffs[k] = c;
        M = AM;
        for (int i = 0; i < n; ++i) M[static_cast<size_t>(i) * n + i] = add128(M[static_cast<size_t>(i) * n + i], c);
    }
    return fp;
}

}  // namespace qwalk
