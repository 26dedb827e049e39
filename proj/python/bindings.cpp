#include "qacc/channels.hpp"
#include "qacc/density_matrix.hpp"
#include "qacc/eig.hpp"
#include "qacc/experiments.hpp"
#include "qacc/measures.hpp"
#include "qacc/rindler.hpp"
#include "qacc/states.hpp"
#include "qacc/tensor.hpp"
#include "qacc/version.hpp"

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <filesystem>
#include <optional>
#include <utility>

namespace py = pybind11;
using qacc::cplx;

namespace {

using InputArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

qacc::ComplexMatrix to_matrix(const InputArray& arr) {
    if (arr.ndim() != 2) throw std::invalid_argument("expected a 2-d array");
    qacc::ComplexMatrix m(static_cast<std::size_t>(arr.shape(0)),
                          static_cast<std::size_t>(arr.shape(1)));
    auto r = arr.unchecked<2>();
    for (py::ssize_t i = 0; i < arr.shape(0); ++i)
        for (py::ssize_t j = 0; j < arr.shape(1); ++j)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = r(i, j);
    return m;
}

py::array_t<cplx> to_array(const qacc::ComplexMatrix& m) {
    py::array_t<cplx> arr({static_cast<py::ssize_t>(m.rows()),
                           static_cast<py::ssize_t>(m.cols())});
    auto w = arr.mutable_unchecked<2>();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            w(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) = m(i, j);
    return arr;
}

qacc::Subsystem parse_subsystem(const std::string& s) {
    if (s == "A" || s == "a") return qacc::Subsystem::A;
    if (s == "B" || s == "b") return qacc::Subsystem::B;
    throw std::invalid_argument("subsystem must be 'A' or 'B'");
}

qacc::GlobalMode parse_mode(const std::string& s) {
    if (s == "literal") return qacc::GlobalMode::LiteralRenormalized;
    if (s == "composed") return qacc::GlobalMode::Composed;
    throw std::invalid_argument("mode must be 'literal' or 'composed'");
}

qacc::MeasureConventions conventions_for(std::optional<std::size_t> m_override) {
    qacc::MeasureConventions conv;
    if (m_override) conv.m_override = *m_override;
    return conv;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "two-qutrit states under uniform acceleration and noise";
    m.attr("__version__") = qacc::kToolVersion;
    m.attr("CSV_HEADER") = qacc::kCsvHeader;

    py::class_<qacc::DensityMatrix>(m, "DensityMatrix")
        .def(py::init([](const InputArray& arr,
                         std::pair<std::size_t, std::size_t> dims) {
                 return qacc::DensityMatrix(to_matrix(arr),
                                            qacc::BipartiteShape{dims.first, dims.second});
             }),
             py::arg("matrix"), py::arg("dims"))
        .def_property_readonly(
            "matrix", [](const qacc::DensityMatrix& d) { return to_array(d.matrix()); })
        .def_property_readonly("dims",
                               [](const qacc::DensityMatrix& d) {
                                   return std::make_pair(d.shape().dim_a, d.shape().dim_b);
                               })
        .def_property_readonly("min_eigenvalue", &qacc::DensityMatrix::min_eigenvalue);

    py::class_<qacc::KrausChannel>(m, "KrausChannel")
        .def_property_readonly("gamma",
                               [](const qacc::KrausChannel& c) { return c.gamma; })
        .def_property_readonly("local_dim",
                               [](const qacc::KrausChannel& c) { return c.local_dim; })
        .def_property_readonly("operators",
                               [](const qacc::KrausChannel& c) {
                                   std::vector<py::array_t<cplx>> out;
                                   for (const auto& op : c.operators)
                                       out.push_back(to_array(op));
                                   return out;
                               })
        .def("completeness_drift", &qacc::KrausChannel::completeness_drift);

    m.def(
        "kron",
        [](const InputArray& a, const InputArray& b) {
            return to_array(qacc::kron(to_matrix(a), to_matrix(b)));
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "partial_trace",
        [](const qacc::DensityMatrix& rho, const std::string& traced) {
            return to_array(qacc::partial_trace(rho, parse_subsystem(traced)));
        },
        py::arg("rho"), py::arg("traced"));
    m.def(
        "partial_transpose",
        [](const qacc::DensityMatrix& rho) {
            return to_array(qacc::partial_transpose(rho));
        },
        py::arg("rho"));
    m.def(
        "realign",
        [](const qacc::DensityMatrix& rho) { return to_array(qacc::realign(rho)); },
        py::arg("rho"));
    m.def(
        "hermitian_eigenvalues",
        [](const InputArray& a) { return qacc::hermitian_eigenvalues(to_matrix(a)); },
        py::arg("matrix"));
    m.def(
        "trace_norm", [](const InputArray& a) { return qacc::trace_norm(to_matrix(a)); },
        py::arg("matrix"));

    m.def(
        "horodecki_state",
        [](double alpha) { return qacc::horodecki_state(qacc::AlphaParameter(alpha)); },
        py::arg("alpha"));
    m.def("max_entangled", &qacc::max_entangled, py::arg("dim") = 3);
    m.def(
        "classify",
        [](double alpha) {
            return std::string(qacc::to_string(qacc::classify(qacc::AlphaParameter(alpha))));
        },
        py::arg("alpha"));

    m.def(
        "rindler_isometry",
        [](double r) {
            return to_array(qacc::rindler_isometry(qacc::AccelerationParameter(r)).matrix);
        },
        py::arg("r"));
    m.def(
        "accelerate",
        [](const qacc::DensityMatrix& rho, double r_a, double r_b) {
            return qacc::accelerate(rho, qacc::AccelerationParameter(r_a),
                                    qacc::AccelerationParameter(r_b));
        },
        py::arg("rho"), py::arg("r_a"), py::arg("r_b"));
    m.def(
        "crosscheck",
        [](double alpha, double r) {
            const qacc::DiscrepancyReport report =
                qacc::cross_check(qacc::AlphaParameter(alpha), qacc::AccelerationParameter(r));
            py::list rows;
            for (const qacc::Discrepancy& d : report.rows) {
                py::dict row;
                row["row"] = d.row_index;
                row["col"] = d.col_index;
                row["generic"] = d.generic;
                row["closed_form"] = d.closed_form;
                row["abs_diff"] = d.abs_diff;
                row["ambiguous"] = d.ambiguous_flag;
                rows.append(row);
            }
            return rows;
        },
        py::arg("alpha"), py::arg("r"));

    m.def(
        "dephasing_kraus",
        [](double gamma) { return qacc::dephasing_kraus(qacc::NoiseStrength(gamma)); },
        py::arg("gamma"));
    m.def(
        "amplitude_damping_kraus",
        [](double gamma) {
            return qacc::amplitude_damping_kraus(qacc::NoiseStrength(gamma));
        },
        py::arg("gamma"));
    m.def("extend_to_acc_space", &qacc::extend_to_acc_space, py::arg("channel"));
    m.def("apply_multilocal", &qacc::apply_multilocal, py::arg("rho"), py::arg("channel_a"),
          py::arg("channel_b"));
    m.def(
        "apply_global",
        [](const qacc::DensityMatrix& rho, const qacc::KrausChannel& ch,
           const std::string& mode) {
            const qacc::GlobalResult out = qacc::apply_global(rho, ch, parse_mode(mode));
            return std::make_pair(out.state, out.pre_norm_trace);
        },
        py::arg("rho"), py::arg("channel"), py::arg("mode") = "literal");

    m.def(
        "concurrence",
        [](const qacc::DensityMatrix& rho, std::optional<std::size_t> m_override) {
            return qacc::concurrence(rho, conventions_for(m_override));
        },
        py::arg("rho"), py::arg("m_override") = std::nullopt);
    m.def("rel_entropy_coherence", &qacc::rel_entropy_coherence, py::arg("rho"));
    m.def("nonlocal_information", &qacc::nonlocal_information, py::arg("rho"));
    m.def("is_ppt", &qacc::is_ppt, py::arg("rho"));
    m.def("ccnr_value", &qacc::ccnr_value, py::arg("rho"));

    m.def(
        "write_figure",
        [](const std::string& name, const std::string& out_dir) {
            const qacc::SweepTable table = qacc::run_scenario(qacc::figure_preset(name));
            std::filesystem::create_directories(out_dir);
            const std::filesystem::path dir(out_dir);
            qacc::emit_csv(table, (dir / (name + ".csv")).string());
            qacc::emit_plot_script(table, (dir / (name + ".gp")).string());
            return table.rows.size();
        },
        py::arg("name"), py::arg("out_dir"));
}
