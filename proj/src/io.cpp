#include "qwalk/io.hpp"

#include <cstdio>
#include <ostream>

namespace qwalk {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_spectrum_csv(std::ostream& os, const Spectrum& s) {
    os << "eigenvalue,multiplicity\n";
    for (const auto& g : s.groups)
        os << format_double(g.value) << "," << g.multiplicity << "\n";
}

void write_vectors_csv(std::ostream& os, const SpectralDecomposition& dec) {
    const int n = dec.dim();
    os << "row";
    for (int k = 0; k < n; ++k) os << ",v" << (k + 1);
    os << "\n";
    for (int i = 0; i < n; ++i) {
        os << (i + 1);
        for (int k = 0; k < n; ++k) os << "," << format_double(dec.vec(i, k));
        os << "\n";
    }
}

void write_dos_csv(std::ostream& os, const DensityOfStates& dos) {
    os << "eigenvalue,rho\n";
    for (const auto& [e, rho] : dos.points)
        os << format_double(e) << "," << format_double(rho) << "\n";
}

void write_series_csv(std::ostream& os, const TimeSeries& series) {
    os << "t,value\n";
    for (size_t i = 0; i < series.t.size(); ++i)
        os << format_double(series.t[i]) << "," << format_double(series.values[i]) << "\n";
}

void write_observables_csv(std::ostream& os, const TimeSeries& pbar,
                           const TimeSeries& alpha_sq, const TimeSeries& pibar) {
    os << "t,pbar,alpha_sq,pibar\n";
    for (size_t i = 0; i < pbar.t.size(); ++i)
        os << format_double(pbar.t[i]) << "," << format_double(pbar.values[i]) << ","
           << format_double(alpha_sq.values[i]) << "," << format_double(pibar.values[i]) << "\n";
}

void write_sweep_csv(std::ostream& os,
                     const std::vector<std::pair<int, EnsembleSummary>>& sweep) {
    os << "b,mean_p_qw,stderr\n";
    for (const auto& [b, summary] : sweep)
        os << b << "," << format_double(summary.mean_p_qw) << ","
           << format_double(summary.stderr_p_qw) << "\n";
}

void write_staircase_csv(std::ostream& os, const EigenvalueStaircase& st) {
    os << "E,d\n";
    for (size_t i = 0; i < st.e.size(); ++i)
        os << format_double(st.e[i]) << "," << format_double(st.d[i]) << "\n";
}

void write_census_csv(std::ostream& os, const CensusReport& report) {
    os << "b,N_B,total_subsets\n";
    for (const auto& e : report.entries)
        os << e.b << "," << e.n_b << "," << e.total_subsets << "\n";
}

}  // namespace qwalk
