#include <pybind11/pybind11.h>

#include "tropmat/ops.hpp"

namespace py = pybind11;
using tropmat::json;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<std::int64_t>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<std::uint64_t>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const json& e : j) out.append(json_to_py(e));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default:
            throw tropmat::InputError("unsupported JSON value");
    }
}

json py_to_json(py::handle h) {
    if (h.is_none()) return json(nullptr);
    if (py::isinstance<py::bool_>(h)) return json(h.cast<bool>());
    if (py::isinstance<py::int_>(h)) return json(h.cast<std::int64_t>());
    if (py::isinstance<py::float_>(h)) return json(h.cast<double>());
    if (py::isinstance<py::str>(h)) return json(h.cast<std::string>());
    if (py::isinstance<py::dict>(h)) {
        json out = json::object();
        for (auto item : h.cast<py::dict>())
            out[item.first.cast<std::string>()] = py_to_json(item.second);
        return out;
    }
    if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
        json out = json::array();
        for (auto item : h.cast<py::sequence>()) out.push_back(py_to_json(item));
        return out;
    }
    throw tropmat::InputError("instance values must be JSON-like (None, bool, int, float, str, list, dict)");
}

std::optional<std::string> opt_str(const py::object& o) {
    if (o.is_none()) return std::nullopt;
    return o.cast<std::string>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "tropical matroid toolkit: covector graphs, colorful bases, exact\n"
              "Euclidean membership, colorful LP with the 3DM encoding, and the\n"
              "max-plus {-inf,0} integer-program solver. All functions take and\n"
              "return plain dicts in the documented JSON schemas.";

    py::register_exception<tropmat::InputError>(m, "InputError", PyExc_ValueError);

    namespace ops = tropmat::ops;
    m.def("membership", [](py::dict inst) { return json_to_py(ops::membership(py_to_json(inst))); },
          py::arg("instance"), "Max-plus hull membership of a finite target, with certificate.");
    m.def(
        "colorful_basis",
        [](py::dict inst, py::object pin, bool trace) {
            return json_to_py(ops::colorful_basis(py_to_json(inst), opt_str(pin), trace));
        },
        py::arg("instance"), py::arg("pin") = py::none(), py::arg("trace") = false,
        "Greedy covering-basis search with exhaustive fallback.");
    m.def(
        "verify_condition",
        [](py::dict inst, bool two_cocircuit) {
            return json_to_py(ops::verify_condition(py_to_json(inst), two_cocircuit));
        },
        py::arg("instance"), py::arg("two_cocircuit") = false,
        "Coverage condition over basis/cocircuit (or cocircuit pair) unions.");
    m.def(
        "two_cocircuit_basis",
        [](py::dict inst, bool trace) {
            return json_to_py(ops::two_cocircuit_basis(py_to_json(inst), trace));
        },
        py::arg("instance"), py::arg("trace") = false,
        "Cocircuit-pair driven covering-basis search (rank = d+1).");
    m.def(
        "km_verify",
        [](py::dict inst, bool corank2) {
            return json_to_py(ops::km_verify(py_to_json(inst), corank2));
        },
        py::arg("instance"), py::arg("corank2") = false,
        "Exact Euclidean coverage condition by full enumeration.");
    m.def(
        "km_basis",
        [](py::dict inst, py::object pin) {
            return json_to_py(ops::km_basis(py_to_json(inst), opt_str(pin)));
        },
        py::arg("instance"), py::arg("pin") = py::none(),
        "First basis capturing the origin, with barycentric certificate.");
    m.def("rado_check", [](py::dict inst) { return json_to_py(ops::rado_check(py_to_json(inst))); },
          py::arg("instance"),
          "Generic-position independent-transversal condition over sector preimages.");
    m.def("clp_solve", [](py::dict inst) { return json_to_py(ops::clp_solve(py_to_json(inst))); },
          py::arg("instance"), "Tropical colorful linear program (one column per class).");
    m.def("clp_from_3dm",
          [](py::dict inst) { return json_to_py(ops::clp_from_3dm(py_to_json(inst))); },
          py::arg("instance"), "Encode a 3-dimensional matching instance as a colorful LP.");
    m.def("horn_solve", [](py::dict inst) { return json_to_py(ops::horn_solve(py_to_json(inst))); },
          py::arg("instance"),
          "Max-plus {-inf,0} system; returns the pointwise-maximal solution.");
    m.def("realize_complex",
          [](py::dict inst) { return json_to_py(ops::realize_complex_op(py_to_json(inst))); },
          py::arg("complex"), "Configuration whose support complex at 0 is the given complex.");
    m.def("support_complex",
          [](py::dict inst) { return json_to_py(ops::support_complex_op(py_to_json(inst))); },
          py::arg("instance"), "Support complex of a configuration at a finite target.");
    m.def("matroid_info",
          [](py::dict inst) { return json_to_py(ops::matroid_info(py_to_json(inst))); },
          py::arg("matroid"), "Rank, bases, cocircuits, loops and dual bases.");
    m.def("clutter_check",
          [](py::dict inst) { return json_to_py(ops::clutter_check(py_to_json(inst))); },
          py::arg("clutter"), "Basis exchange test with witness, plus the blocker.");
    m.def(
        "gen_instance",
        [](const std::string& kind, py::object params, std::uint64_t seed) {
            json p = params.is_none() ? json::object() : py_to_json(params);
            return json_to_py(ops::gen_instance(kind, p, seed));
        },
        py::arg("kind"), py::arg("params") = py::none(), py::arg("seed") = 0,
        "Deterministic fixture or random instance (fig1, fig2, random-3dm, random-clp, random-config).");
}
