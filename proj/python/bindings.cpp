#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "cluscomp/builders.hpp"
#include "cluscomp/clustering.hpp"
#include "cluscomp/experiments.hpp"
#include "cluscomp/metrics.hpp"
#include "cluscomp/random_walk.hpp"
#include "cluscomp/vin.hpp"

namespace py = pybind11;

namespace {

using namespace cluscomp;

LogBase to_log_base(const std::string& s) {
    if (s == "e") {
        return LogBase::e;
    }
    if (s == "2") {
        return LogBase::two;
    }
    throw std::invalid_argument("log_base must be \"e\" or \"2\"");
}

Clustering to_clustering(const std::vector<long long>& labels) {
    return Clustering::from_labels(labels);
}

PointSet to_point_set(const std::vector<std::array<double, 2>>& points) {
    PointSet p;
    p.points = points;
    return p;
}

ChainMode to_chain_mode(const std::string& s) {
    if (s == "adjacent-unit") {
        return ChainMode::adjacent_unit;
    }
    if (s == "all-pairs-decay") {
        return ChainMode::all_pairs_decay;
    }
    throw std::invalid_argument("mode must be \"adjacent-unit\" or \"all-pairs-decay\"");
}

GridVariant to_variant(const std::string& s) {
    if (s == "square-block") {
        return GridVariant::square_block;
    }
    if (s == "boundary-strip") {
        return GridVariant::boundary_strip;
    }
    if (s == "distant-line") {
        return GridVariant::distant_line;
    }
    throw std::invalid_argument("unknown grid variant: " + s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Graph-aware clustering comparison indices (vi, rwi, vin)";

    py::class_<SimilarityGraph>(m, "SimilarityGraph")
        .def(py::init<std::size_t>(), py::arg("n"))
        .def("add_edge", &SimilarityGraph::add_edge, py::arg("i"), py::arg("j"),
             py::arg("weight"))
        .def("degrees", &SimilarityGraph::degrees)
        .def("with_uniform_self_loops", &SimilarityGraph::with_uniform_self_loops,
             py::arg("weight"))
        .def("__len__", &SimilarityGraph::size)
        .def("num_edges", [](const SimilarityGraph& g) { return g.edges().size(); });

    py::class_<AdjacencyGraph>(m, "AdjacencyGraph")
        .def(py::init<std::size_t>(), py::arg("n"))
        .def("add_edge", &AdjacencyGraph::add_edge, py::arg("i"), py::arg("j"))
        .def("neighbors",
             [](const AdjacencyGraph& a, std::uint32_t i) {
                 if (i >= a.size()) {
                     throw std::out_of_range("node id out of range");
                 }
                 const auto nb = a.neighbors(i);
                 return std::vector<std::uint32_t>(nb.begin(), nb.end());
             },
             py::arg("i"))
        .def("__len__", &AdjacencyGraph::size)
        .def("num_edges", &AdjacencyGraph::num_edges);

    py::class_<IndexComparison>(m, "IndexComparison")
        .def_readonly("index", &IndexComparison::index)
        .def_readonly("d_ab", &IndexComparison::d_ab)
        .def_readonly("d_ac", &IndexComparison::d_ac)
        .def_property_readonly(
            "closer", [](const IndexComparison& row) { return verdict_name(verdict(row)); })
        .def("__repr__", [](const IndexComparison& row) {
            return "IndexComparison(" + row.index + ", d_ab=" + format_value(row.d_ab) +
                   ", d_ac=" + format_value(row.d_ac) + ")";
        });

    py::class_<ScenarioResult>(m, "ScenarioResult")
        .def_readonly("rows", &ScenarioResult::rows);

    py::class_<GaussianTrialValues>(m, "GaussianTrialValues")
        .def_readonly("vi_ab", &GaussianTrialValues::vi_ab)
        .def_readonly("vi_ac", &GaussianTrialValues::vi_ac)
        .def_readonly("rwi_ab", &GaussianTrialValues::rwi_ab)
        .def_readonly("rwi_ac", &GaussianTrialValues::rwi_ac)
        .def_readonly("vin_ab", &GaussianTrialValues::vin_ab)
        .def_readonly("vin_ac", &GaussianTrialValues::vin_ac);

    py::class_<TrialSummaryRow>(m, "TrialSummaryRow")
        .def_readonly("index", &TrialSummaryRow::index)
        .def_readonly("mean_ab", &TrialSummaryRow::mean_ab)
        .def_readonly("mean_ac", &TrialSummaryRow::mean_ac)
        .def_readonly("errors", &TrialSummaryRow::errors);

    py::class_<TrialSummary>(m, "TrialSummary")
        .def_readonly("trials", &TrialSummary::trials)
        .def_readonly("rows", &TrialSummary::rows)
        .def_readonly("per_trial", &TrialSummary::per_trial);

    m.def(
        "entropy",
        [](const std::vector<double>& p, const std::string& log_base) {
            return entropy(p, to_log_base(log_base));
        },
        py::arg("p"), py::arg("log_base") = "e");

    m.def(
        "vi",
        [](const std::vector<long long>& a, const std::vector<long long>& b,
           const std::string& log_base) {
            return vi(to_clustering(a), to_clustering(b), to_log_base(log_base));
        },
        py::arg("a"), py::arg("b"), py::arg("log_base") = "e");

    m.def(
        "weighted_vi",
        [](const std::vector<long long>& a, const std::vector<long long>& b,
           const std::vector<double>& w, const std::string& log_base) {
            return weighted_vi(to_clustering(a), to_clustering(b), PointWeights{w},
                               to_log_base(log_base));
        },
        py::arg("a"), py::arg("b"), py::arg("weights"), py::arg("log_base") = "e");

    m.def(
        "split_entropy",
        [](const std::vector<long long>& c, std::uint32_t parent,
           const std::vector<std::uint32_t>& sublabels, const std::string& log_base) {
            return split_entropy(to_clustering(c), SplitSpec{parent, sublabels},
                                 to_log_base(log_base));
        },
        py::arg("c"), py::arg("parent"), py::arg("sublabels"), py::arg("log_base") = "e");

    m.def(
        "rwi",
        [](const SimilarityGraph& g, const std::vector<long long>& a,
           const std::vector<long long>& b, const std::string& log_base) {
            return rwi(g, to_clustering(a), to_clustering(b), to_log_base(log_base));
        },
        py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("log_base") = "e");

    m.def(
        "refine",
        [](const std::vector<long long>& c, const AdjacencyGraph& adj) {
            const Clustering refined = refine(to_clustering(c), adj);
            return std::vector<Label>(refined.labels().begin(), refined.labels().end());
        },
        py::arg("c"), py::arg("adjacency"));

    m.def(
        "vin",
        [](const std::vector<long long>& a, const std::vector<long long>& b,
           const AdjacencyGraph& adj, const std::string& log_base) {
            return vin(to_clustering(a), to_clustering(b), adj, to_log_base(log_base));
        },
        py::arg("a"), py::arg("b"), py::arg("adjacency"), py::arg("log_base") = "e");

    m.def(
        "chain_graph",
        [](std::size_t n, const std::string& mode, const std::string& decay) {
            return chain_graph(n, to_chain_mode(mode),
                               decay == "inverse" ? ChainDecay::inverse : ChainDecay::gauss);
        },
        py::arg("n"), py::arg("mode") = "adjacent-unit", py::arg("decay") = "gauss");

    m.def("chain_adjacency", &chain_adjacency, py::arg("n"));

    m.def(
        "gaussian_similarity",
        [](const std::vector<std::array<double, 2>>& points) {
            return gaussian_similarity(to_point_set(points));
        },
        py::arg("points"));

    m.def("threshold_adjacency", &threshold_adjacency, py::arg("graph"), py::arg("eps"));

    m.def(
        "grid_graphs",
        [](std::size_t height, std::size_t width, std::size_t window) {
            GridGraphs g = grid_graphs(height, width, window);
            return py::make_tuple(std::move(g.similarity), std::move(g.adjacency));
        },
        py::arg("height"), py::arg("width"), py::arg("window") = 5);

    m.def(
        "sample_gaussian",
        [](std::size_t n, std::uint64_t seed) { return sample_gaussian(n, seed).points; },
        py::arg("n"), py::arg("seed"));

    m.def(
        "scenario_chain_single",
        [](std::size_t n, const std::string& log_base) {
            return scenario_chain_single(n, to_log_base(log_base));
        },
        py::arg("n") = 10, py::arg("log_base") = "e");

    m.def(
        "scenario_chain_block",
        [](std::size_t n, std::size_t block, const std::string& log_base) {
            return scenario_chain_block(n, block, to_log_base(log_base));
        },
        py::arg("n") = 10, py::arg("m") = 2, py::arg("log_base") = "e");

    m.def(
        "scenario_gaussian",
        [](std::size_t trials, std::size_t n, double eps, std::uint64_t seed,
           const std::string& log_base, unsigned threads) {
            return scenario_gaussian(trials, n, eps, seed, to_log_base(log_base), threads);
        },
        py::arg("trials") = 100, py::arg("n") = 100,
        py::arg("eps") = 0.36787944117144233, py::arg("seed") = 0,
        py::arg("log_base") = "e", py::arg("threads") = 1);

    m.def(
        "scenario_grid",
        [](std::size_t height, std::size_t width, const std::string& variant,
           const std::string& log_base) {
            return scenario_grid(height, width, to_variant(variant), to_log_base(log_base));
        },
        py::arg("height") = 60, py::arg("width") = 60, py::arg("variant") = "square-block",
        py::arg("log_base") = "e");

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
