// Python bindings for the qwalk core: graph construction, spectra,
// walk observables, Monte Carlo ensembles, and the clan census.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qwalk/census.hpp"
#include "qwalk/ensemble.hpp"
#include "qwalk/io.hpp"

namespace py = pybind11;
using namespace qwalk;

namespace {

// __int128 exceeds every native pybind11 integer caster; go through the
// decimal string and let Python parse it into an arbitrary-precision int.
py::list fingerprint_coeffs(const SpectralFingerprint& f) {
    py::list out;
    for (const __int128 c : f.coeffs) {
        SpectralFingerprint one;
        one.coeffs = {c};
        out.append(py::int_(py::str(one.to_string())));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_qwalk, m) {
    m.doc() = "Continuous-time quantum/classical walks on star-plus-bonds graphs";

    py::register_exception<invalid_argument_error>(m, "InvalidArgumentError",
                                                   PyExc_ValueError);
    py::register_exception<capacity_error>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<ambiguity_error>(m, "AmbiguityError", PyExc_RuntimeError);
    py::register_exception<fingerprint_overflow_error>(m, "FingerprintOverflowError",
                                                       PyExc_OverflowError);
    py::register_exception<solver_convergence_error>(m, "SolverConvergenceError",
                                                     PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("node_count", &Graph::node_count)
        .def_property_readonly("edges", &Graph::edges)
        .def("degree", &Graph::degree, py::arg("node"))
        .def("has_edge", &Graph::has_edge, py::arg("a"), py::arg("b"))
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.node_count()) + ", edges=" +
                   std::to_string(g.edges().size()) + ")";
        });

    m.def("build_star", &build_star, py::arg("n"));
    m.def("build_complete", &build_complete, py::arg("n"));
    m.def("star_plus_bonds", &star_plus_bonds, py::arg("n"), py::arg("bonds"));
    m.def("b_max", &b_max, py::arg("n"));
    m.def("leaf_pairs", &leaf_pairs, py::arg("n"));
    m.def("edge_list_text", [](const Graph& g) {
        std::ostringstream os;
        write_edge_list(os, g);
        return os.str();
    });
    m.def("graph_from_edge_list_text", [](const std::string& text) {
        std::istringstream is(text);
        return read_edge_list(is);
    });

    py::class_<DegeneracyGroup>(m, "DegeneracyGroup")
        .def_readonly("value", &DegeneracyGroup::value)
        .def_readonly("multiplicity", &DegeneracyGroup::multiplicity);

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("values", &Spectrum::values)
        .def_readonly("groups", &Spectrum::groups)
        .def("__len__", &Spectrum::size);

    py::class_<SpectralDecomposition>(m, "SpectralDecomposition")
        .def_readonly("spectrum", &SpectralDecomposition::spectrum)
        .def_readonly("vectors", &SpectralDecomposition::vectors)
        .def("vec", &SpectralDecomposition::vec, py::arg("row"), py::arg("col"));

    m.def("eigendecompose",
          [](const Graph& g) { return eigendecompose(connectivity_matrix(g)); },
          py::arg("graph"));
    m.def("density_of_states", [](const Spectrum& s) {
        return density_of_states(s).points;
    });
    m.def("fingerprint",
          [](const Graph& g) { return fingerprint_coeffs(fingerprint(connectivity_matrix(g))); },
          py::arg("graph"),
          "Exact characteristic-polynomial coefficients, leading term first.");

    py::class_<TimeGrid>(m, "TimeGrid")
        .def_static("log", &TimeGrid::log_grid, py::arg("t0"), py::arg("t1"),
                    py::arg("samples"))
        .def_static("linear", &TimeGrid::linear_grid, py::arg("t0"), py::arg("t1"),
                    py::arg("samples"))
        .def("points", &TimeGrid::points);

    py::class_<TimeSeries>(m, "TimeSeries")
        .def_readonly("t", &TimeSeries::t)
        .def_readonly("values", &TimeSeries::values)
        .def_readonly("label", &TimeSeries::label);

    py::class_<LongTimeAverages>(m, "LongTimeAverages")
        .def_readonly("p_rw", &LongTimeAverages::p_rw)
        .def_readonly("p_qw", &LongTimeAverages::p_qw);

    m.def("classical_transition", &classical_transition, py::arg("dec"), py::arg("k"),
          py::arg("j"), py::arg("grid"));
    m.def("quantum_transition", &quantum_transition, py::arg("dec"), py::arg("k"),
          py::arg("j"), py::arg("grid"));
    m.def("avg_return_classical", &avg_return_classical, py::arg("spectrum"),
          py::arg("grid"));
    m.def("avg_return_amplitude_sq", &avg_return_amplitude_sq, py::arg("spectrum"),
          py::arg("grid"));
    m.def("avg_return_quantum_exact", &avg_return_quantum_exact, py::arg("dec"),
          py::arg("grid"));
    m.def("long_time_averages", &long_time_averages, py::arg("spectrum"));
    m.def("numeric_time_average", &numeric_time_average, py::arg("series"));
    m.def("degenerate_approximation", &degenerate_approximation, py::arg("spectrum"),
          py::arg("grid"));

    py::class_<EnsembleSummary>(m, "EnsembleSummary")
        .def_readonly("mean_pbar", &EnsembleSummary::mean_pbar)
        .def_readonly("mean_alpha_sq", &EnsembleSummary::mean_alpha_sq)
        .def_readonly("mean_pibar", &EnsembleSummary::mean_pibar)
        .def_readonly("mean_p_qw", &EnsembleSummary::mean_p_qw)
        .def_readonly("stderr_p_qw", &EnsembleSummary::stderr_p_qw)
        .def_readonly("realizations_used", &EnsembleSummary::realizations_used);

    py::class_<EigenvalueStaircase>(m, "EigenvalueStaircase")
        .def_readonly("e", &EigenvalueStaircase::e)
        .def_readonly("d", &EigenvalueStaircase::d);

    m.def("derive_seed", &derive_seed, py::arg("master"), py::arg("index"));
    m.def("sample_realization", &sample_realization, py::arg("n"), py::arg("b"),
          py::arg("seed"));
    m.def("run_ensemble",
          [](int n, int b, int r, uint64_t seed, const TimeGrid& grid, int threads) {
              return run_ensemble({n, b, r, seed, grid, threads});
          },
          py::arg("n"), py::arg("b"), py::arg("r"), py::arg("seed"),
          py::arg("grid") = TimeGrid{}, py::arg("threads") = 0,
          py::call_guard<py::gil_scoped_release>());
    m.def("staircase",
          [](int n, int b, int r, uint64_t seed, const std::vector<double>& e_grid,
             int threads) {
              return staircase({n, b, r, seed, TimeGrid::linear_grid(0.0, 1.0, 2), threads},
                               e_grid);
          },
          py::arg("n"), py::arg("b"), py::arg("r"), py::arg("seed"), py::arg("e_grid"),
          py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
    m.def("sweep_b", &sweep_b, py::arg("n"), py::arg("b_list"), py::arg("r"),
          py::arg("seed"), py::arg("grid") = TimeGrid{}, py::arg("threads") = 0,
          py::call_guard<py::gil_scoped_release>());

    py::class_<CensusExtreme>(m, "CensusExtreme")
        .def_property_readonly("fingerprint",
                               [](const CensusExtreme& e) {
                                   return fingerprint_coeffs(e.fingerprint);
                               })
        .def_readonly("count", &CensusExtreme::count)
        .def_readonly("representative", &CensusExtreme::representative)
        .def_readonly("eigenvalues", &CensusExtreme::eigenvalues);

    py::class_<CensusEntry>(m, "CensusEntry")
        .def_readonly("b", &CensusEntry::b)
        .def_readonly("n_b", &CensusEntry::n_b)
        .def_readonly("total_subsets", &CensusEntry::total_subsets)
        .def_readonly("most_probable", &CensusEntry::most_probable)
        .def_readonly("least_probable", &CensusEntry::least_probable);

    py::class_<CensusReport>(m, "CensusReport")
        .def_readonly("n", &CensusReport::n)
        .def_readonly("entries", &CensusReport::entries);

    m.def("census", &census, py::arg("n"), py::arg("b_filter") = std::vector<int>{},
          py::arg("threads") = 0, py::arg("force") = false,
          py::call_guard<py::gil_scoped_release>());
    m.def("verify_eigenvalue_set", &verify_eigenvalue_set, py::arg("n"), py::arg("b"),
          py::arg("target"), py::arg("tol"), py::arg("budget") = 100000000ull,
          py::call_guard<py::gil_scoped_release>());
    m.def("binomial", &binomial, py::arg("n"), py::arg("k"));
}
