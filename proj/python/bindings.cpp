#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nilalg/classify.hpp"
#include "nilalg/isomorphism.hpp"
#include "nilalg/json_io.hpp"

namespace py = pybind11;
using namespace nilalg;

namespace {

std::string dump(const Json& j) { return j.dump(); }

Algebra parse(const std::string& text) { return algebra_from_json_text(text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Classification of small nilpotent associative algebras over finite fields";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<GuardError> guard_error(m, "GuardError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      input_error(e.what());
    } catch (const GuardError& e) {
      guard_error(e.what());
    }
  });

  m.def("classify", [](int dim, int p, int mexp, bool commutative) {
    const Field f = make_field(p, mexp);
    return dump(records_to_json(dim, f, commutative, classify(dim, f, commutative)));
  }, py::arg("dim"), py::arg("p"), py::arg("m") = 1, py::arg("commutative") = false);

  m.def("verify", [](int dim, int p, int mexp, bool commutative) {
    return dump(report_to_json(verify_against_reference(dim, make_field(p, mexp), commutative)));
  }, py::arg("dim"), py::arg("p"), py::arg("m") = 1, py::arg("commutative") = false);

  m.def("catalog", [](const std::string& name, const std::map<std::string, long long>& params, int p, int mexp) {
    return dump(algebra_to_json(catalog(name, params, make_field(p, mexp))));
  }, py::arg("name"), py::arg("params"), py::arg("p"), py::arg("m") = 1);

  m.def("cohomology", [](const std::string& algebra, bool symmetric) {
    const Algebra a = parse(algebra);
    if (!is_associative(a)) throw InputError("algebra is not associative");
    return dump(cohomology_to_json(h2(a), symmetric));
  }, py::arg("algebra"), py::arg("symmetric") = false);

  m.def("automorphisms", [](const std::string& algebra) {
    const Algebra a = parse(algebra);
    if (!is_associative(a) || !is_nilpotent(a)) throw InputError("algebra is not nilpotent associative");
    return dump(aut_to_json(automorphism_group(a), nullptr));
  }, py::arg("algebra"));

  m.def("isomorphism", [](const std::string& a, const std::string& b) -> py::object {
    const auto w = are_isomorphic(parse(a), parse(b));
    if (!w) return py::none();
    return py::str(dump(matrix_to_json(*w)));
  }, py::arg("a"), py::arg("b"));

  m.def("properties", [](const std::string& algebra) {
    const Algebra a = parse(algebra);
    py::dict d;
    d["associative"] = is_associative(a);
    d["commutative"] = is_commutative(a);
    d["nilpotent"] = is_associative(a) && is_nilpotent(a);
    d["table"] = multiplication_table(a);
    return d;
  }, py::arg("algebra"));
}
