#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <numbers>
#include <sstream>

#include "gaprecover/blrecover.hpp"
#include "gaprecover/bounds.hpp"
#include "gaprecover/degrecover.hpp"
#include "gaprecover/errors.hpp"
#include "gaprecover/genlib.hpp"
#include "gaprecover/harness.hpp"
#include "gaprecover/lowpass.hpp"
#include "gaprecover/sequence_io.hpp"

namespace py = pybind11;
using namespace gaprecover;

namespace {

Norm norm_from(const std::string& s) {
    if (s == "1") return Norm::one;
    if (s == "2") return Norm::two;
    if (s == "inf") return Norm::inf;
    throw InvalidArgument("norm must be '1', '2' or 'inf'");
}

double angle(const py::object& v) {
    if (py::isinstance<py::str>(v)) return parse_angle(v.cast<std::string>());
    return v.cast<double>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Recovery of missing blocks in discrete-time sequences";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<InvalidGap>(m, "InvalidGap", base.ptr());
    py::register_exception<SingularSystem>(m, "SingularSystem", base.ptr());
    py::register_exception<DimensionTooLarge>(m, "DimensionTooLarge", base.ptr());
    py::register_exception<ScenarioMismatch>(m, "ScenarioMismatch", base.ptr());
    py::register_exception<MissingGroundTruth>(m, "MissingGroundTruth", base.ptr());
    py::register_exception<EmptyInput>(m, "EmptyInput", base.ptr());
    py::register_exception<NonFiniteValue>(m, "NonFiniteValue", base.ptr());
    py::register_exception<CsvError>(m, "CsvError", base.ptr());

    py::class_<FiniteSequence>(m, "Sequence")
        .def(py::init<>())
        .def(py::init<Index, std::vector<Complex>>(), py::arg("start"), py::arg("values"))
        .def_property_readonly("start", &FiniteSequence::start)
        .def_property_readonly("last", &FiniteSequence::last)
        .def_property_readonly("values", [](const FiniteSequence& x) {
            const auto v = x.values();
            return std::vector<Complex>(v.begin(), v.end());
        })
        .def("__len__", &FiniteSequence::size)
        .def("__getitem__", [](const FiniteSequence& x, Index t) { return x[t]; })
        .def("without", [](const FiniteSequence& x, Index s, int m) { return x.without({s, m}); }, py::arg("s"),
             py::arg("m") = 0)
        .def("norm", [](const FiniteSequence& x, const std::string& r) { return norm(x, norm_from(r)); },
             py::arg("r") = "2")
        .def("to_csv", [](const FiniteSequence& x) {
            std::ostringstream out;
            write_sequence_csv(out, x);
            return out.str();
        })
        .def_static("from_csv", [](const std::string& text) {
            std::istringstream in(text);
            return read_sequence_csv(in);
        })
        .def("__eq__", [](const FiniteSequence& a, const FiniteSequence& b) { return a == b; })
        .def("__repr__", [](const FiniteSequence& x) {
            return "Sequence(start=" + std::to_string(x.start()) + ", size=" + std::to_string(x.size()) + ")";
        });

    m.def("parse_angle", &parse_angle, py::arg("text"));

    m.def(
        "recover_bl",
        [](const FiniteSequence& x, const py::object& cutoff, Index s, int gap_m) {
            return recover_bl(x, {s, gap_m}, Kernel(angle(cutoff))).recovered;
        },
        py::arg("x"), py::arg("cutoff"), py::arg("s") = 0, py::arg("m") = 0,
        "Band-limited recovery of x(s..s+m) from the samples outside the gap.");
    m.def(
        "recover_bl_single",
        [](const FiniteSequence& x, const py::object& cutoff, Index s) { return recover_bl_single(x, s, Kernel(angle(cutoff))); },
        py::arg("x"), py::arg("cutoff"), py::arg("s") = 0);
    m.def(
        "recover_deg",
        [](const FiniteSequence& x, const py::object& omega0, Index s, int gap_m, int max_order) {
            return recover_deg(x, {s, gap_m}, angle(omega0), max_order).recovered;
        },
        py::arg("x"), py::arg("omega0") = std::numbers::pi, py::arg("s") = 0, py::arg("m") = 0,
        py::arg("max_order") = default_max_order,
        "Recovery from vanishing Z-transform derivatives at omega0.");
    m.def(
        "recover_deg_single",
        [](const FiniteSequence& x, const py::object& omega0, Index s) { return recover_deg_single(x, s, angle(omega0)); },
        py::arg("x"), py::arg("omega0") = std::numbers::pi, py::arg("s") = 0);
    m.def(
        "z_derivatives",
        [](const FiniteSequence& x, const py::object& omega, int order) { return z_derivatives(x, angle(omega), order).derivs; },
        py::arg("x"), py::arg("omega"), py::arg("m") = 0);

    m.def(
        "synth_bandlimited",
        [](const py::object& cutoff, const std::vector<std::pair<double, Complex>>& atoms, Index first, Index last) {
            BLAtomSpec spec{angle(cutoff), {}};
            for (const auto& [c, w] : atoms) spec.atoms.push_back({c, w});
            return synth_bandlimited(spec, {first, last});
        },
        py::arg("cutoff"), py::arg("atoms"), py::arg("first"), py::arg("last"),
        "Sum of weight * sinc(cutoff (t - center)) over (center, weight) atoms on [first, last].");
    m.def(
        "generate_bl",
        [](const py::object& cutoff, Index q, int atoms, double spread, std::uint64_t seed, bool real_only) {
            return synth_bandlimited(random_atoms(angle(cutoff), atoms, spread, seed, real_only), {-q, q});
        },
        py::arg("cutoff"), py::arg("q") = 50, py::arg("atoms") = 5, py::arg("spread") = 10.0, py::arg("seed") = 0,
        py::arg("real_only") = false);
    m.def(
        "synth_ell1", [](Index q, std::uint64_t seed, bool real_only) { return synth_ell1({-q, q}, seed, real_only); },
        py::arg("q") = 50, py::arg("seed") = 0, py::arg("real_only") = false);
    m.def(
        "make_degenerate",
        [](const FiniteSequence& x, const py::object& omega0, Index s, int gap_m) {
            return make_degenerate(x, {s, gap_m}, angle(omega0));
        },
        py::arg("x"), py::arg("omega0") = std::numbers::pi, py::arg("s") = 0, py::arg("m") = 0);
    m.def(
        "add_noise",
        [](const FiniteSequence& x, double level, std::uint64_t seed, bool real_only) {
            auto n = add_noise(x, level, seed, real_only);
            return py::make_tuple(n.noisy, n.eta);
        },
        py::arg("x"), py::arg("level"), py::arg("seed") = 0, py::arg("real_only") = false, "Returns (noisy, eta).");

    m.def(
        "op_norm",
        [](const CMatrix& S, const std::string& from, const std::string& to) {
            const auto r = op_norm(S, norm_from(from), norm_from(to));
            py::dict d;
            d["value"] = r.value;
            d["upper"] = r.upper;
            d["method"] = to_string(r.method);
            return d;
        },
        py::arg("S"), py::arg("from_norm") = "2", py::arg("to_norm") = "2");
    m.def(
        "bl_recovery_map", [](const py::object& cutoff, int gap_m) { return bl_recovery_map(Kernel(angle(cutoff)), gap_m); },
        py::arg("cutoff"), py::arg("m") = 0);
    m.def(
        "deg_recovery_map",
        [](const py::object& omega0, Index s, int gap_m) { return deg_recovery_map(angle(omega0), {s, gap_m}); },
        py::arg("omega0") = std::numbers::pi, py::arg("s") = 0, py::arg("m") = 0);

    m.def(
        "run_experiment",
        [](const std::string& config_json) {
            const auto cfg = config_from_json(config_json);
            std::vector<TrialRecord> records;
            {
                py::gil_scoped_release release;
                records = run_experiment(cfg);
            }
            return summary_to_json(summarize(records), cfg);
        },
        py::arg("config_json"), "Runs an experiment from a JSON config and returns the JSON summary.");
    m.def(
        "preset_config",
        [](const std::string& name) {
            if (name == "fig1") return config_to_json(figure1_config());
            if (name == "fig2") return config_to_json(figure2_config());
            throw InvalidArgument("unknown preset '" + name + "'");
        },
        py::arg("name"));
}
