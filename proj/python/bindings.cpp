#include "ftcost/errors.hpp"
#include "ftcost/multiplicity.hpp"
#include "ftcost/oracle.hpp"
#include "ftcost/report.hpp"
#include "ftcost/scaling.hpp"
#include "ftcost/schemes.hpp"
#include "ftcost/threshold.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ftcost;

namespace {

py::object to_int(const BigInt& value)
{
    const std::string text = value.str();
    return py::reinterpret_steal<py::object>(PyLong_FromString(text.c_str(), nullptr, 10));
}

py::object to_fraction(const Rational& value)
{
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_int(boost::multiprecision::numerator(value)),
                    to_int(boost::multiprecision::denominator(value)));
}

Rational from_py(const py::handle& value)
{
    if (py::isinstance<py::int_>(value)) {
        return Rational(BigInt(py::str(value).cast<std::string>()));
    }
    if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator") &&
        !py::isinstance<py::float_>(value)) {
        return Rational(BigInt(py::str(value.attr("numerator")).cast<std::string>()),
                        BigInt(py::str(value.attr("denominator")).cast<std::string>()));
    }
    if (py::isinstance<py::float_>(value)) {
        return rational_from_double(value.cast<double>());
    }
    return rational_from_decimal(py::str(value).cast<std::string>());
}

py::list matrix_rows(const CostMatrix& M)
{
    py::list rows;
    for (std::size_t i = 0; i < M.size(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < M.size(); ++j) {
            row.append(M.is_integral() ? to_int(ftcost::floor(M(i, j))) : to_fraction(M(i, j)));
        }
        rows.append(row);
    }
    return rows;
}

py::list fractions(const std::vector<Rational>& values)
{
    py::list out;
    for (const auto& v : values) {
        out.append(is_integral(v) ? to_int(ftcost::floor(v)) : to_fraction(v));
    }
    return out;
}

std::vector<Rational> rationals(const py::iterable& values)
{
    std::vector<Rational> out;
    for (const auto& v : values) {
        out.push_back(from_py(v));
    }
    return out;
}

Scheme scheme(const std::string& name)
{
    return resolve_scheme(name);
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Physical-qubit cost of concatenated fault-tolerant schemes";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ConfigSyntaxError>(m, "ConfigSyntaxError", base.ptr());
    py::register_exception<ConfigSemanticError>(m, "ConfigSemanticError", base.ptr());
    py::register_exception<RegimeError>(m, "RegimeError", base.ptr());
    py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());

    m.def("cost_matrix", [](const std::string& name) { return matrix_rows(scheme(name).matrix); },
          py::arg("scheme"));
    m.def("phase", [](const std::string& name) { return std::string(to_string(classify_phase(scheme(name).matrix))); },
          py::arg("scheme"));
    m.def(
        "iterate",
        [](const std::string& name, long K, const py::iterable& Q) {
            return fractions(iterate_recursion(scheme(name).matrix, K, rationals(Q)));
        },
        py::arg("scheme"), py::arg("K"), py::arg("Q"));
    m.def(
        "estimate",
        [](const std::string& name, long K, const py::object& share, const py::object& logical_qubits) {
            AlgorithmProfile profile;
            profile.Q_algo_total = from_py(logical_qubits);
            profile.magic_share_override = from_py(share);
            const auto r = estimate(scheme(name), K, profile);
            py::dict out;
            out["K"] = r.K;
            out["total"] = is_integral(r.Q_phys_total) ? to_int(ftcost::floor(r.Q_phys_total))
                                                       : to_fraction(r.Q_phys_total);
            out["per_type"] = fractions(r.Q_phys_per_type);
            out["R"] = to_fraction(r.R);
            out["phase"] = std::string(to_string(r.phase));
            return out;
        },
        py::arg("scheme"), py::arg("K"), py::arg("share"), py::arg("logical_qubits") = 1);
    m.def(
        "asymptotic_ratio",
        [](const py::object& ln, const py::object& lm, const py::object& b, const py::object& share) -> py::object {
            const auto C = asymptotic_ratio(from_py(ln), from_py(lm), from_py(b), from_py(share));
            return C ? to_fraction(*C) : py::none();
        },
        py::arg("lambda_n"), py::arg("lambda_m"), py::arg("b"), py::arg("share"));
    m.def("flag_ratio", [](long K, const py::object& share) { return to_fraction(flag_ratio(K, from_py(share))); },
          py::arg("K"), py::arg("share"));
    m.def("toy_cost_per_logical", [](double delta, long K) { return static_cast<double>(toy_cost_per_logical(delta, K)); },
          py::arg("delta"), py::arg("K"));
    m.def("toy_ratio", [](double delta, long K) { return static_cast<double>(toy_ratio(delta, K)); },
          py::arg("delta"), py::arg("K"));

    m.def("failure_multiplicity_independent", &failure_multiplicity_independent, py::arg("N_fault"),
          py::arg("M_per_exrec"), py::arg("B"), py::arg("kappa"));
    m.def("shared_spares", &shared_spares, py::arg("V"), py::arg("N_fault"), py::arg("p_thres"),
          py::arg("bound"));
    m.def("failure_multiplicity_shared",
          [](long V, long S) { return to_fraction(failure_multiplicity_shared(V, S)); }, py::arg("V"),
          py::arg("S"));
    m.def(
        "exact_shared_tail",
        [](long V, long S, long N, const py::object& p) { return to_fraction(exact_shared_tail(V, S, N, from_py(p))); },
        py::arg("V"), py::arg("S"), py::arg("N_fault"), py::arg("p"));

    m.def(
        "required_level",
        [](long double p0, long double p_thres, long double n_ops, long double eps) {
            return required_level(p0, p_thres, n_ops, eps);
        },
        py::arg("p0"), py::arg("p_thres"), py::arg("n_ops"), py::arg("eps"));
    m.def(
        "logical_error",
        [](long double p0, long double B, long t, long k) {
            return static_cast<double>(logical_error(p0, B, t, k).value);
        },
        py::arg("p0"), py::arg("B"), py::arg("t"), py::arg("k"));

    m.def(
        "mc_lack_frequency",
        [](long N, const py::object& p, long mu, std::uint64_t trials, std::uint64_t seed, unsigned workers) {
            const auto r = mc_lack_frequency(N, from_py(p), LackMode::independent(mu), trials, seed, workers);
            py::dict out;
            out["trials"] = r.trials;
            out["events"] = r.events;
            out["frequency"] = r.frequency;
            out["analytic"] = to_fraction(r.analytic);
            out["analytic_sigma"] = r.analytic_sigma;
            return out;
        },
        py::arg("N_fault"), py::arg("p"), py::arg("mu"), py::arg("trials"), py::arg("seed"),
        py::arg("workers") = 0);
}
