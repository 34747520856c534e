#include "kleshchev/cli.hpp"
#include "kleshchev/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <sstream>

namespace py = pybind11;
using namespace kleshchev;

namespace {

using Parts = std::vector<std::vector<int>>;

Multicharge make_charge(int e, const std::vector<int>& charge, const std::string& convention) {
  return Multicharge(e, charge, parse_reading_direction(convention));
}

py::int_ to_py(const BigInt& x) { return py::int_(py::module_::import("builtins").attr("int")(x.str())); }

py::dict coefficient(const LaurentPoly& p) {
  py::dict out;
  for (const auto& [k, c] : p.terms()) out[py::int_(k)] = to_py(c);
  return out;
}

py::tuple key(const Multipartition& mp) {
  py::list comps;
  for (const auto& parts : mp.to_parts()) comps.append(py::tuple(py::cast(parts)));
  return py::tuple(comps);
}

py::dict vector_dict(const FockVector& v) {
  py::dict out;
  for (const auto& [mp, c] : v.terms()) out[key(mp)] = coefficient(c);
  return out;
}

std::optional<Parts> optional_parts(const std::optional<Multipartition>& mp) {
  if (!mp) return std::nullopt;
  return mp->to_parts();
}

}  // namespace

PYBIND11_MODULE(_kleshchev, m) {
  m.doc() = "Kleshchev multipartitions, the Fock space crystal and canonical bases";

  py::register_exception<ConventionError>(m, "ConventionError", PyExc_RuntimeError);
  py::register_exception<ResourceCapExceeded>(m, "ResourceCapExceeded", PyExc_RuntimeError);

  m.def("residue", [](int k, int r, int c, int e, const std::vector<int>& charge) {
    return residue({k, r, c}, Multicharge(e, charge));
  }, py::arg("component"), py::arg("row"), py::arg("col"), py::arg("e"), py::arg("charge"));

  m.def("kleshchev_multipartitions", [](int n, int e, const std::vector<int>& charge, const std::string& conv) {
    auto level = generate_crystal(make_charge(e, charge, conv), n).level(n);
    std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) { return linear_dominance_less(b, a); });
    std::vector<Parts> out;
    for (const auto& mp : level) out.push_back(mp.to_parts());
    return out;
  }, py::arg("n"), py::arg("e"), py::arg("charge"), py::arg("convention") = "bottom_up");

  m.def("is_kleshchev", [](const Parts& mp, int e, const std::vector<int>& charge, const std::string& conv) {
    return is_kleshchev(Multipartition::from_parts(mp), make_charge(e, charge, conv));
  }, py::arg("mp"), py::arg("e"), py::arg("charge"), py::arg("convention") = "bottom_up");

  m.def("f_tilde", [](const Parts& mp, int i, int e, const std::vector<int>& charge, const std::string& conv) {
    return optional_parts(f_tilde(Multipartition::from_parts(mp), i, make_charge(e, charge, conv)));
  }, py::arg("mp"), py::arg("i"), py::arg("e"), py::arg("charge"), py::arg("convention") = "bottom_up");

  m.def("e_tilde", [](const Parts& mp, int i, int e, const std::vector<int>& charge, const std::string& conv) {
    return optional_parts(e_tilde(Multipartition::from_parts(mp), i, make_charge(e, charge, conv)));
  }, py::arg("mp"), py::arg("i"), py::arg("e"), py::arg("charge"), py::arg("convention") = "bottom_up");

  m.def("epsilon", [](const Parts& mp, int i, int e, const std::vector<int>& charge, const std::string& conv) {
    return epsilon(Multipartition::from_parts(mp), i, make_charge(e, charge, conv));
  }, py::arg("mp"), py::arg("i"), py::arg("e"), py::arg("charge"), py::arg("convention") = "bottom_up");

  m.def("phi", [](const Parts& mp, int i, int e, const std::vector<int>& charge, const std::string& conv) {
    return phi(Multipartition::from_parts(mp), i, make_charge(e, charge, conv));
  }, py::arg("mp"), py::arg("i"), py::arg("e"), py::arg("charge"), py::arg("convention") = "bottom_up");

  m.def("crystal_dot", [](int n, int e, const std::vector<int>& charge, const std::string& conv) {
    std::ostringstream out;
    write_dot(out, generate_crystal(make_charge(e, charge, conv), n));
    return out.str();
  }, py::arg("n"), py::arg("e"), py::arg("charge"), py::arg("convention") = "bottom_up");

  m.def("f_action", [](const Parts& mp, int i, int e, const std::vector<int>& charge) {
    const Multicharge ch(e, charge);
    return vector_dict(f_op(i, FockVector::basis(ch, Multipartition::from_parts(mp))));
  }, py::arg("mp"), py::arg("i"), py::arg("e"), py::arg("charge"),
     "f_i applied to a basis vector: {multipartition: {exponent: coefficient}}");

  m.def("e_action", [](const Parts& mp, int i, int e, const std::vector<int>& charge) {
    const Multicharge ch(e, charge);
    return vector_dict(e_op(i, FockVector::basis(ch, Multipartition::from_parts(mp))));
  }, py::arg("mp"), py::arg("i"), py::arg("e"), py::arg("charge"));

  m.def("canonical_basis", [](int n, int e, const std::vector<int>& charge, const std::string& conv) {
    const auto basis = canonical_basis(make_charge(e, charge, conv), n);
    py::dict out;
    for (const auto& el : basis.elements())
      out[key(el.label)] = vector_dict(el.vector);
    return out;
  }, py::arg("n"), py::arg("e"), py::arg("charge"), py::arg("convention") = "bottom_up");

  m.def("decomposition_matrix_json", [](int n, int e, const std::vector<int>& charge, const std::string& conv) {
    return to_json_text(decomposition_matrix(make_charge(e, charge, conv), n));
  }, py::arg("n"), py::arg("e"), py::arg("charge"), py::arg("convention") = "bottom_up");

  m.def("decomposition_matrix_csv", [](int n, int e, const std::vector<int>& charge, bool at_one) {
    std::ostringstream out;
    write_csv(out, decomposition_matrix(Multicharge(e, charge), n), at_one);
    return out.str();
  }, py::arg("n"), py::arg("e"), py::arg("charge"), py::arg("at_one") = false);

  m.def("branch", [](const Parts& label, int i, int e, const std::vector<int>& charge) {
    CanonicalAtlas atlas{Multicharge(e, charge)};
    const auto r = branch_simple(Multipartition::from_parts(label), i, atlas);
    py::list factors;
    for (const auto& [mp, mult] : r.factors) factors.append(py::make_tuple(key(mp), to_py(mult)));
    py::dict out;
    out["epsilon"] = r.epsilon;
    out["phi"] = r.phi;
    out["e_tilde"] = r.e_tilde_label ? py::object(key(*r.e_tilde_label)) : py::none();
    out["factors"] = factors;
    out["passed"] = r.pass();
    out["reasons"] = r.reasons;
    return out;
  }, py::arg("label"), py::arg("i"), py::arg("e"), py::arg("charge"));

  m.def("dim_simple", [](const Parts& label, int e, const std::vector<int>& charge) {
    CanonicalAtlas atlas{Multicharge(e, charge)};
    return to_py(dim_simple(Multipartition::from_parts(label), atlas));
  }, py::arg("label"), py::arg("e"), py::arg("charge"));

  m.def("verify", [](int n, int e, const std::vector<int>& charge, const std::string& conv) {
    CanonicalAtlas atlas(make_charge(e, charge, conv));
    py::list out;
    for (const auto& r : verify_all(atlas, VerifyLimits::uniform(n))) {
      py::dict d;
      d["name"] = r.name;
      d["passed"] = r.passed();
      d["checked"] = r.checked;
      d["failures"] = r.failures;
      d["convention_findings"] = r.convention_findings;
      out.append(d);
    }
    return out;
  }, py::arg("n"), py::arg("e"), py::arg("charge"), py::arg("convention") = "bottom_up");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = main_entry(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command-line front end; returns (exit_code, stdout, stderr).");

  m.attr("__version__") = "1.0.0";
}
