#pragma once

#include <iosfwd>
#include <string>

#include "qwalk/census.hpp"
#include "qwalk/ensemble.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// All emitters print doubles with %.17g, so identical runs give identical bytes.
std::string format_double(double v);

void write_spectrum_csv(std::ostream& os, const Spectrum& s);
void write_vectors_csv(std::ostream& os, const SpectralDecomposition& dec);
void write_dos_csv(std::ostream& os, const DensityOfStates& dos);
void write_series_csv(std::ostream& os, const TimeSeries& series);

// Columns t,pbar,alpha_sq,pibar on a shared grid.
void write_observables_csv(std::ostream& os, const TimeSeries& pbar,
                           const TimeSeries& alpha_sq, const TimeSeries& pibar);

void write_sweep_csv(std::ostream& os,
                     const std::vector<std::pair<int, EnsembleSummary>>& sweep);
void write_staircase_csv(std::ostream& os, const EigenvalueStaircase& st);
void write_census_csv(std::ostream& os, const CensusReport& report);

}  // namespace qwalk
