#include "qwalk/walk.hpp"

#include <cmath>
#include <complex>

namespace qwalk {

std::vector<double> TimeGrid::points() const {
    if (samples < 2) throw invalid_argument_error("TimeGrid: need samples >= 2");
    if (t_start < 0.0 || t_end <= t_start)
        throw invalid_argument_error("TimeGrid: need 0 <= t_start < t_end");
    if (spacing == Spacing::Log && t_start <= 0.0)
        throw invalid_argument_error("TimeGrid: log spacing needs t_start > 0");
    std::vector<double> t(samples);
    if (spacing == Spacing::Linear) {
        const double dt = (t_end - t_start) / (samples - 1);
        for (int i = 0; i < samples; ++i) t[i] = t_start + dt * i;
    } else {
        const double l0 = std::log(t_start), l1 = std::log(t_end);
        const double dl = (l1 - l0) / (samples - 1);
        for (int i = 0; i < samples; ++i) t[i] = std::exp(l0 + dl * i);
    }
    t.back() = t_end;
    return t;
}

namespace {

void check_node(const SpectralDecomposition& dec, int node, const char* what) {
    if (node < 1 || node > dec.dim())
        throw invalid_argument_error(std::string(what) + ": node index out of range");
}

}  // namespace

TimeSeries classical_transition(const SpectralDecomposition& dec, int k, int j,
                                const TimeGrid& grid) {
    check_node(dec, k, "classical_transition");
    check_node(dec, j, "classical_transition");
    const int n = dec.dim();
    TimeSeries out{grid.points(), {}, "p_" + std::to_string(k) + "," + std::to_string(j)};
    out.values.reserve(out.t.size());
    for (double t : out.t) {
        double p = 0.0;
        for (int m = 0; m < n; ++m)
            p += dec.vec(k - 1, m) * dec.vec(j - 1, m) * std::exp(-dec.spectrum.values[m] * t);
        out.values.push_back(p);
    }
    return out;
}

TimeSeries quantum_transition(const SpectralDecomposition& dec, int k, int j,
                              const TimeGrid& grid) {
    check_node(dec, k, "quantum_transition");
    check_node(dec, j, "quantum_transition");
    const int n = dec.dim();
    TimeSeries out{grid.points(), {}, "pi_" + std::to_string(k) + "," + std::to_string(j)};
    out.values.reserve(out.t.size());
    for (double t : out.t) {
        std::complex<double> amp = 0.0;
        for (int m = 0; m < n; ++m)
            amp += dec.vec(k - 1, m) * dec.vec(j - 1, m) *
                   std::polar(1.0, -dec.spectrum.values[m] * t);
        out.values.push_back(std::norm(amp));
    }
    return out;
}

TimeSeries avg_return_classical(const Spectrum& s, const TimeGrid& grid) {
    const double n = s.size();
    TimeSeries out{grid.points(), {}, "pbar"};
    out.values.reserve(out.t.size());
    for (double t : out.t) {
        double p = 0.0;
        for (const auto& g : s.groups) p += g.multiplicity / n * std::exp(-g.value * t);
        out.values.push_back(p);
    }
    return out;
}

TimeSeries avg_return_amplitude_sq(const Spectrum& s, const TimeGrid& grid) {
    const double n = s.size();
    TimeSeries out{grid.points(), {}, "alpha_sq"};
    out.values.reserve(out.t.size());
    for (double t : out.t) {
        std::complex<double> amp = 0.0;
        for (const auto& g : s.groups)
            amp += g.multiplicity / n * std::polar(1.0, -g.value * t);
        out.values.push_back(std::norm(amp));
    }
    return out;
}

TimeSeries avg_return_quantum_exact(const SpectralDecomposition& dec, const TimeGrid& grid) {
    const int n = dec.dim();
    TimeSeries out{grid.points(), {}, "pibar"};
    out.values.reserve(out.t.size());
    std::vector<double> w(static_cast<size_t>(n) * n);  // w[j,m] = v_m[j]^2
    for (int j = 0; j < n; ++j)
        for (int m = 0; m < n; ++m)
            w[static_cast<size_t>(j) * n + m] = dec.vec(j, m) * dec.vec(j, m);
    std::vector<std::complex<double>> phase(n);
    for (double t : out.t) {
        for (int m = 0; m < n; ++m) phase[m] = std::polar(1.0, -dec.spectrum.values[m] * t);
        double pibar = 0.0;
        for (int j = 0; j < n; ++j) {
            std::complex<double> amp = 0.0;
            for (int m = 0; m < n; ++m) amp += w[static_cast<size_t>(j) * n + m] * phase[m];
            pibar += std::norm(amp);
        }
        out.values.push_back(pibar / n);
    }
    return out;
}

LongTimeAverages long_time_averages(const Spectrum& s) {
    const double n = s.size();
    double p_qw = 0.0;
    for (const auto& g : s.groups) {
        const double rho = g.multiplicity / n;
        p_qw += rho * rho;
    }
    return {1.0 / n, p_qw};
}

double numeric_time_average(const TimeSeries& series) {
    if (series.t.size() < 2) throw invalid_argument_error("numeric_time_average: need >= 2 samples");
    double integral = 0.0;
    for (size_t i = 1; i < series.t.size(); ++i)
        integral += 0.5 * (series.values[i] + series.values[i - 1]) * (series.t[i] - series.t[i - 1]);
    return integral / (series.t.back() - series.t.front());
}

TimeSeries degenerate_approximation(const Spectrum& s, const TimeGrid& grid) {
    int best = 0;
    bool tie = false;
    for (size_t i = 1; i < s.groups.size(); ++i) {
        if (s.groups[i].multiplicity > s.groups[best].multiplicity) {
            best = static_cast<int>(i);
            tie = false;
        } else if (s.groups[i].multiplicity == s.groups[best].multiplicity) {
            tie = true;
        }
    }
    if (tie)
        throw ambiguity_error("degenerate_approximation: maximal multiplicity is not unique");

    const double n = s.size();
    const double e_m = s.groups[best].value;
    const double rho_m = s.groups[best].multiplicity / n;
    TimeSeries out{grid.points(), {}, "alpha_sq_approx"};
    out.values.reserve(out.t.size());
    for (double t : out.t) {
        double sum = rho_m;
        for (size_t i = 0; i < s.groups.size(); ++i) {
            if (static_cast<int>(i) == best) continue;
            sum += s.groups[i].multiplicity / n * std::cos((e_m - s.groups[i].value) * t);
        }
        out.values.push_back(rho_m * sum);
    }
    return out;
}

}  // namespace qwalk
