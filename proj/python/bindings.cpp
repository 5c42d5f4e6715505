#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "strtherm/bitstring.hpp"
#include "strtherm/ensemble.hpp"
#include "strtherm/equilibrium.hpp"
#include "strtherm/error.hpp"
#include "strtherm/pipeline.hpp"
#include "strtherm/report.hpp"
#include "strtherm/thermo.hpp"

namespace py = pybind11;
using namespace strtherm;

namespace {

std::vector<std::uint8_t> as_bytes(const py::bytes& data) {
    const std::string s = data;
    return {s.begin(), s.end()};
}

BitOrder parse_order(const std::string& order) {
    if (order == "msb") return BitOrder::msb_first;
    if (order == "lsb") return BitOrder::lsb_first;
    throw Error(ErrorCode::InvalidArgument, "bit order must be 'msb' or 'lsb'");
}

OutputFormat parse_format(const std::string& format) {
    if (format == "json") return OutputFormat::json;
    if (format == "csv") return OutputFormat::csv;
    if (format == "human") return OutputFormat::human;
    throw Error(ErrorCode::InvalidArgument, "format must be 'json', 'csv' or 'human'");
}

AnalysisOptions make_options(const std::string& bit_order, std::optional<std::size_t> max_bits,
                             std::optional<std::size_t> ensemble_size) {
    AnalysisOptions options;
    options.bit_order = parse_order(bit_order);
    options.max_bits = max_bits;
    options.ensemble_size = ensemble_size;
    return options;
}

}  // namespace

PYBIND11_MODULE(_strtherm, m) {
    m.doc() = "Shift-XOR ensembles of bit strings and their thermodynamic description";

    static py::exception<Error> error(m, "StrthermError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    py::class_<BitString>(m, "BitString")
        .def_static(
            "from_bytes",
            [](const py::bytes& data, const std::string& order) {
                return BitString::from_bytes(as_bytes(data), parse_order(order));
            },
            py::arg("data"), py::arg("bit_order") = "msb")
        .def_static("from_bits", &BitString::from_bits, py::arg("bits"))
        .def_static("random", &random_bitstring, py::arg("bits"), py::arg("p") = 0.5,
                    py::arg("seed") = 0)
        .def_property_readonly("size", &BitString::size)
        .def_property_readonly("popcount", &BitString::popcount)
        .def("to_bits", &BitString::to_bit_string)
        .def(
            "to_bytes",
            [](const BitString& b, const std::string& order) {
                const auto bytes = b.to_bytes(parse_order(order));
                return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
            },
            py::arg("bit_order") = "msb")
        .def("__len__", &BitString::size)
        .def("__eq__", [](const BitString& a, const BitString& b) { return a == b; });

    m.def("truncate", &strtherm::truncate, py::arg("b"), py::arg("max_bits"));
    m.def("shift_xor_distance", &shift_xor_distance, py::arg("b"), py::arg("n"));

    py::class_<Ensemble>(m, "Ensemble")
        .def_readonly("values", &Ensemble::values)
        .def_readonly("bits", &Ensemble::bits)
        .def_readonly("set_bits", &Ensemble::set_bits)
        .def_readonly("max_value", &Ensemble::max_value)
        .def_property_readonly("mode", [](const Ensemble& e) { return std::string(to_string(e.mode)); })
        .def("__len__", &Ensemble::size);

    m.def(
        "self_ensemble",
        [](const BitString& b, std::optional<std::size_t> count, unsigned threads) {
            return build_self_ensemble(b, count.value_or(b.size()), threads);
        },
        py::arg("b"), py::arg("count") = py::none(), py::arg("threads") = 0);
    m.def(
        "pair_ensemble",
        [](const BitString& a, const BitString& b, std::optional<std::size_t> count,
           std::size_t max_bits, unsigned threads) {
            const std::size_t bits = pair_extension_bits(a.size(), b.size(), max_bits);
            return build_pair_ensemble(a, b, count.value_or(bits == 0 ? 1 : bits), max_bits,
                                       threads);
        },
        py::arg("a"), py::arg("b"), py::arg("count") = py::none(),
        py::arg("max_bits") = kDefaultPairMaxBits, py::arg("threads") = 0);

    py::class_<Histogram>(m, "Histogram")
        .def_property_readonly("entries",
                               [](const Histogram& h) {
                                   std::vector<std::pair<std::size_t, std::size_t>> out;
                                   for (const auto& e : h.entries) out.emplace_back(e.value, e.count);
                                   return out;
                               })
        .def_readonly("observations", &Histogram::observations)
        .def_readonly("bits", &Histogram::bits)
        .def_readonly("max_value", &Histogram::max_value);

    m.def("histogram", &histogram, py::arg("ensemble"));
    m.def("drop_self_match", &drop_self_match, py::arg("h"));
    m.def("ensemble_mean", &ensemble_mean, py::arg("h"));

    py::class_<EquilibriumModel>(m, "EquilibriumModel")
        .def_readonly("c_bar", &EquilibriumModel::c_bar)
        .def_readonly("density", &EquilibriumModel::density)
        .def_readonly("k_factor", &EquilibriumModel::k_factor)
        .def_readonly("sigma2", &EquilibriumModel::sigma2)
        .def_readonly("temperature", &EquilibriumModel::temperature)
        .def_readonly("peak", &EquilibriumModel::peak)
        .def_readonly("observations", &EquilibriumModel::observations)
        .def_readonly("bits", &EquilibriumModel::bits)
        .def_property_readonly("degenerate", &EquilibriumModel::degenerate);

    m.def("fit", py::overload_cast<const Histogram&>(&fit), py::arg("h"));
    m.def("fit", py::overload_cast<const Histogram&, double>(&fit), py::arg("h"), py::arg("c_bar"));
    m.def("normal_counts", &normal_counts, py::arg("model"), py::arg("c"));
    m.def("binomial_counts", &binomial_counts, py::arg("model"), py::arg("c"));
    m.def("fit_quality", &fit_quality, py::arg("h"), py::arg("model"));

    m.def("internal_energy", &internal_energy, py::arg("h"), py::arg("c_bar"));
    m.def(
        "entropy",
        [](const Histogram& h) {
            const auto s = entropy(h);
            return py::make_tuple(s.thermo, s.micro);
        },
        py::arg("h"));
    m.def("partition_function", &partition_function, py::arg("bits"), py::arg("temperature"));
    m.def("equilibrium_internal_energy", &equilibrium_internal_energy, py::arg("temperature"));
    m.def(
        "equilibrium_entropy",
        [](std::size_t bits, double temperature, double c_bar) {
            const auto s = equilibrium_entropy(bits, temperature, c_bar);
            return py::make_tuple(s.thermo, s.micro_per_bit);
        },
        py::arg("bits"), py::arg("temperature"), py::arg("c_bar"));

    m.def(
        "analyze_bytes",
        [](const py::bytes& data, std::optional<py::bytes> second, const std::string& bit_order,
           std::optional<std::size_t> max_bits, std::optional<std::size_t> ensemble_size,
           const std::string& format, const std::string& label) {
            const auto first = as_bytes(data);
            const auto other = second ? as_bytes(*second) : std::vector<std::uint8_t>{};
            const auto r = analyze_bytes(first, other,
                                         make_options(bit_order, max_bits, ensemble_size), label);
            return render_report(r, parse_format(format));
        },
        py::arg("data"), py::arg("second") = py::none(), py::arg("bit_order") = "msb",
        py::arg("max_bits") = py::none(), py::arg("ensemble_size") = py::none(),
        py::arg("format") = "json", py::arg("label") = "");

    m.attr("REPORT_VERSION") = kReportVersion;
}
