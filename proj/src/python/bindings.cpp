#include "otde/benchmark.hpp"
#include "otde/discretize.hpp"
#include "otde/ensemble.hpp"
#include "otde/error.hpp"
#include "otde/gp.hpp"
#include "otde/metrics.hpp"
#include "otde/serialization.hpp"
#include "otde/sfa.hpp"
#include "otde/stats.hpp"
#include "otde/ts_format.hpp"

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace otde;

namespace {

/// Accepts (N, L) or (N, D, L) arrays.
std::vector<Series> series_from_array(const py::array_t<double, py::array::c_style | py::array::forcecast> &x) {
    const auto info = x.request();
    if (info.ndim != 2 && info.ndim != 3) {
        throw Error(ErrorKind::InvalidArgument, "expected an array of shape (N, L) or (N, D, L)");
    }
    const auto n = static_cast<std::size_t>(info.shape[0]);
    const auto d = info.ndim == 3 ? static_cast<std::size_t>(info.shape[1]) : 1;
    const auto l = static_cast<std::size_t>(info.shape[info.ndim - 1]);
    const auto *data = static_cast<const double *>(info.ptr);
    std::vector<Series> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.emplace_back(d, l, std::vector<double>(data + i * d * l, data + (i + 1) * d * l));
    }
    return out;
}

py::array_t<double> series_to_array(const TimeSeriesDataset &ds) {
    py::array_t<double> out({ds.size(), ds.dims(), ds.length()});
    auto *dst = out.mutable_data();
    for (const auto &s : ds.series()) {
        for (std::size_t d = 0; d < s.dims(); ++d) {
            const auto ch = s.channel(d);
            dst = std::copy(ch.begin(), ch.end(), dst);
        }
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Ordinal temporal dictionary ensemble";

    py::register_exception<Error>(m, "OtdeError", PyExc_ValueError);

    py::class_<TransformParams>(m, "TransformParams")
        .def(py::init([](int w, int c, int t, bool normalize, bool numerosity) {
                 return TransformParams{w, c, t, normalize, numerosity};
             }),
             py::arg("window_length") = 10, py::arg("coefficient_count") = 2, py::arg("alphabet_size") = 4,
             py::arg("normalize") = true, py::arg("numerosity_reduction") = true)
        .def_readwrite("window_length", &TransformParams::window_length)
        .def_readwrite("coefficient_count", &TransformParams::coefficient_count)
        .def_readwrite("alphabet_size", &TransformParams::alphabet_size)
        .def_readwrite("normalize", &TransformParams::normalize)
        .def_readwrite("numerosity_reduction", &TransformParams::numerosity_reduction)
        .def("__eq__", [](const TransformParams &a, const TransformParams &b) { return a == b; })
        .def("__repr__", [](const TransformParams &p) {
            return "TransformParams(window_length=" + std::to_string(p.window_length) +
                   ", coefficient_count=" + std::to_string(p.coefficient_count) +
                   ", alphabet_size=" + std::to_string(p.alphabet_size) +
                   ", normalize=" + (p.normalize ? "True" : "False") +
                   ", numerosity_reduction=" + (p.numerosity_reduction ? "True" : "False") + ")";
        });

    py::class_<TimeSeriesDataset>(m, "Dataset")
        .def(py::init([](py::array_t<double, py::array::c_style | py::array::forcecast> x, std::vector<int> y,
                         std::vector<std::string> class_names, std::string name) {
                 auto series = series_from_array(x);
                 if (class_names.empty()) {
                     const int k = y.empty() ? 0 : *std::max_element(y.begin(), y.end()) + 1;
                     return TimeSeriesDataset(std::move(name), std::move(series), std::move(y), std::max(k, 2));
                 }
                 return TimeSeriesDataset(std::move(name), std::move(series), std::move(y), std::move(class_names));
             }),
             py::arg("X"), py::arg("y"), py::arg("class_names") = std::vector<std::string>{},
             py::arg("name") = "dataset")
        .def_property_readonly("name", &TimeSeriesDataset::name)
        .def_property_readonly("labels", &TimeSeriesDataset::labels)
        .def_property_readonly("class_names", &TimeSeriesDataset::class_names)
        .def_property_readonly("num_classes", &TimeSeriesDataset::num_classes)
        .def_property_readonly("dims", &TimeSeriesDataset::dims)
        .def_property_readonly("length", &TimeSeriesDataset::length)
        .def_property_readonly("X", &series_to_array, "(n_instances, n_dims, length) array")
        .def("__len__", &TimeSeriesDataset::size)
        .def("__eq__", [](const TimeSeriesDataset &a, const TimeSeriesDataset &b) { return a == b; });

    m.def("read_dataset", &read_dataset, py::arg("path"));
    m.def("write_dataset", &write_dataset, py::arg("path"), py::arg("dataset"));
    m.def(
        "stratified_resample",
        [](const TimeSeriesDataset &train, const TimeSeriesDataset &test, std::uint64_t seed) {
            return stratified_resample(train, test, ResampleSpec{seed});
        },
        py::arg("train"), py::arg("test"), py::arg("seed"));

    m.def(
        "dft_coefficients",
        [](std::vector<double> window, int c, bool normalize) { return dft_coefficients(window, c, normalize); },
        py::arg("window"), py::arg("coefficient_count"), py::arg("normalize"));
    m.def(
        "fit_igb",
        [](std::vector<double> values, std::vector<double> labels, int t) { return fit_igb(values, labels, t); },
        py::arg("values"), py::arg("labels"), py::arg("alphabet_size"));
    m.def(
        "discretize_thresholds",
        [](std::vector<double> values, std::vector<double> thresholds) {
            return discretize_thresholds(values, thresholds);
        },
        py::arg("values"), py::arg("thresholds") = kFinancialCutPoints);
    m.def(
        "discretize_equal_width",
        [](std::vector<double> values, int bins) { return discretize_equal_width(values, bins); }, py::arg("values"),
        py::arg("bins") = kDefaultTargetBins);

    using Labels = std::vector<int>;
    m.def("ccr", [](Labels y, Labels p) { return ccr(y, p); }, py::arg("y_true"), py::arg("y_pred"));
    m.def("mae", [](Labels y, Labels p) { return mae(y, p); }, py::arg("y_true"), py::arg("y_pred"));
    m.def("one_off", [](Labels y, Labels p) { return one_off(y, p); }, py::arg("y_true"), py::arg("y_pred"));
    m.def("qwk", [](Labels y, Labels p, int k) { return qwk(y, p, k); }, py::arg("y_true"), py::arg("y_pred"),
          py::arg("num_classes"));

    m.def(
        "wilcoxon",
        [](std::vector<double> a, std::vector<double> b, const std::string &method) {
            auto how = WilcoxonMethod::Auto;
            if (method == "exact") {
                how = WilcoxonMethod::Exact;
            } else if (method == "normal") {
                how = WilcoxonMethod::Normal;
            } else if (method != "auto") {
                throw Error(ErrorKind::InvalidArgument, "method must be auto, exact or normal");
            }
            const auto r = wilcoxon_signed_rank(a, b, how);
            return py::dict(py::arg("p_value") = r.p_value, py::arg("w_plus") = r.w_plus, py::arg("n") = r.n,
                            py::arg("exact") = r.exact, py::arg("degenerate") = r.degenerate);
        },
        py::arg("a"), py::arg("b"), py::arg("method") = "auto");
    m.def("holm_adjust", [](std::vector<double> p) { return holm_adjust(p); }, py::arg("p_values"));
    m.def(
        "average_ranks",
        [](std::vector<std::string> methods, std::vector<std::vector<double>> values, bool lower_is_better,
           const std::string &ties) {
            std::vector<std::string> datasets;
            for (std::size_t d = 0; d < values.size(); ++d) {
                datasets.push_back(std::to_string(d));
            }
            const auto table = rank_grid(std::move(methods), std::move(datasets), std::move(values), lower_is_better,
                                         ties == "min" ? TieMethod::Min : TieMethod::Average);
            return table.average_ranks;
        },
        py::arg("methods"), py::arg("values"), py::arg("lower_is_better") = true, py::arg("ties") = "average");

    m.def(
        "gp_predict",
        [](std::vector<std::vector<double>> configs, std::vector<double> targets, std::vector<std::vector<double>> query,
           double length_scale, double noise) {
            const auto gp = GPSurrogate::fit(std::move(configs), std::move(targets), length_scale, noise);
            std::vector<double> out;
            for (const auto &q : query) {
                out.push_back(gp.predict_mean(q));
            }
            return out;
        },
        py::arg("configs"), py::arg("targets"), py::arg("query"), py::arg("length_scale") = 0.5,
        py::arg("noise_variance") = 1e-3);

    py::class_<OTDEnsemble>(m, "Ensemble")
        .def("predict",
             [](const OTDEnsemble &e, py::array_t<double, py::array::c_style | py::array::forcecast> x) {
                 std::vector<int> out;
                 for (const auto &s : series_from_array(x)) {
                     if (s.dims() != e.dims() || s.length() != e.length()) {
                         throw Error(ErrorKind::ShapeMismatch, "series shape differs from the training data");
                     }
                     out.push_back(e.predict(s));
                 }
                 return out;
             })
        .def("predict_dataset", &OTDEnsemble::predict_dataset)
        .def("with_mode", [](const OTDEnsemble &e, const std::string &mode) { return e.with_mode(parse_vote_mode(mode)); })
        .def_property_readonly("mode", [](const OTDEnsemble &e) { return to_string(e.mode()); })
        .def_property_readonly("num_classes", &OTDEnsemble::num_classes)
        .def_property_readonly("class_names", &OTDEnsemble::class_names)
        .def_property_readonly("member_params",
                               [](const OTDEnsemble &e) {
                                   std::vector<TransformParams> out;
                                   for (const auto &mem : e.members()) {
                                       out.push_back(mem.model.params());
                                   }
                                   return out;
                               })
        .def_property_readonly("member_weights",
                               [](const OTDEnsemble &e) {
                                   std::vector<double> out;
                                   for (const auto &mem : e.members()) {
                                       out.push_back(mem.weight);
                                   }
                                   return out;
                               })
        .def("save", [](const OTDEnsemble &e, const std::filesystem::path &p) { save_ensemble(e, p); })
        .def("__eq__", [](const OTDEnsemble &a, const OTDEnsemble &b) { return a == b; });

    m.def("load_ensemble", &load_ensemble, py::arg("manifest"));
    m.def(
        "fit",
        [](const TimeSeriesDataset &train, const std::string &mode, std::uint64_t seed, std::size_t n_initial,
           std::size_t n_evals, std::size_t ensemble_size, const std::string &distance) {
            EnsembleOptions o;
            o.mode = parse_vote_mode(mode);
            o.seed = seed;
            o.n_initial = n_initial;
            o.n_evals = n_evals;
            o.ensemble_size = ensemble_size;
            o.distance = parse_distance(distance);
            py::gil_scoped_release release;
            return guided_search(train, ParameterSpace::defaults(train.length()), o);
        },
        py::arg("train"), py::arg("mode") = "ordinal", py::arg("seed") = 0, py::arg("n_initial") = 10,
        py::arg("n_evals") = 50, py::arg("ensemble_size") = 10, py::arg("distance") = "intersection");
}
